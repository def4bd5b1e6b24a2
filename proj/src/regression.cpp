#include "monogrid/regression.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "monogrid/closed_forms.hpp"
#include "monogrid/domination.hpp"
#include "monogrid/errors.hpp"
#include "monogrid/graph.hpp"
#include "monogrid/mis.hpp"
#include "monogrid/sequence.hpp"
#include "monogrid/stars.hpp"

namespace monogrid {

namespace {

/// Accumulates the numbers behind a verdict and the reasons it failed.
class Check {
public:
    template <typename T>
    void note(const std::string& key, const T& value)
    {
        std::ostringstream s;
        s << value;
        fp_ << key << '=' << s.str() << ';';
    }

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            failures_.push_back(what);
    }

    void unsettled(const std::string& what) { unsettled_.push_back(what); }

    void finish(CriterionResult& r, const std::string& summary) const
    {
        r.fingerprint = fp_.str();
        if (!failures_.empty()) {
            r.status = CriterionStatus::fail;
            r.detail = join(failures_);
        } else if (!unsettled_.empty()) {
            r.status = CriterionStatus::inconclusive;
            r.detail = summary + "; not settled: " + join(unsettled_);
        } else {
            r.status = CriterionStatus::pass;
            r.detail = summary;
        }
    }

private:
    static std::string join(const std::vector<std::string>& parts)
    {
        std::string out;
        const std::size_t shown = std::min<std::size_t>(parts.size(), 6);
        for (std::size_t i = 0; i < shown; ++i)
            out += (i ? "; " : "") + parts[i];
        if (parts.size() > shown)
            out += "; and " + std::to_string(parts.size() - shown) + " more";
        return out;
    }

    std::ostringstream fp_;
    std::vector<std::string> failures_;
    std::vector<std::string> unsettled_;
};

std::string nd(std::size_t n, std::size_t d)
{
    return "G_" + std::to_string(n) + "(" + std::to_string(d) + ")";
}

Budget solver_budget(const RegressionOptions& o)
{
    Budget b;
    b.threads = o.threads;
    return b;
}

DominationOptions domination_options(const RegressionOptions& o)
{
    DominationOptions d;
    d.budget = solver_budget(o);
    return d;
}

/// Exact count or an exception: the criteria below run without limits.
SolveReport counted(const Graph& g, const RegressionOptions& o)
{
    auto rep = count_maximum_independent_sets(g, solver_budget(o));
    if (!rep.exact || !rep.count)
        throw validation_error("unbudgeted count on " + g.tag() + " came back inexact");
    return rep;
}

void formula_regression(Check& c, const RegressionOptions& o)
{
    for (std::size_t d = 0; d <= 12; ++d) {
        if (d == 2 || d == 4)
            continue;
        const auto alpha = max_independent_set(build_graph(3, d), solver_budget(o)).objective;
        const auto formula = ((d + 2) * (d + 1) + 5) / 6;
        c.note("a3_" + std::to_string(d), alpha);
        c.expect(alpha == formula, "alpha of " + nd(3, d) + " is " + std::to_string(alpha) + ", formula gives " +
                                       std::to_string(formula));
    }
    for (std::size_t d = 0; d <= 8; ++d) {
        const auto alpha = max_independent_set(build_graph(4, d), solver_budget(o)).objective;
        const auto formula = alpha4_formula(d).value;
        c.note("a4_" + std::to_string(d), alpha);
        c.expect(alpha == formula, "alpha of " + nd(4, d) + " is " + std::to_string(alpha) + ", formula gives " +
                                       std::to_string(formula));
    }
}

void two_optima_at_six(Check& c, const RegressionOptions& o)
{
    const Graph g = build_graph(3, 6);
    const auto rep = enumerate_maximum_independent_sets(g, 16, solver_budget(o));
    c.note("alpha", rep.objective);
    c.note("count", *rep.count);
    c.expect(rep.objective == 10, "alpha_3(6) = " + std::to_string(rep.objective));
    c.expect(*rep.count == 2, "a_3(6) = " + to_decimal(*rep.count));
    c.expect(rep.witnesses.size() == 2 && rep.witnesses_complete, "enumeration did not list exactly two sets");
    const auto built = construct_unique_mis_3(g);
    bool found = false;
    for (const auto& w : rep.witnesses) {
        c.expect(is_independent(g, w) && w.size() == 10, "enumerated set is not a 10-element independent set");
        found = found || w == built;
    }
    c.expect(found, "construction is not among the enumerated sets");
}

void unique_triangular(Check& c, const RegressionOptions& o)
{
    for (std::size_t d : {0, 3, 9, 12}) {
        const Graph g = build_graph(3, d);
        const auto rep = counted(g, o);
        c.note("alpha_" + std::to_string(d), rep.objective);
        c.note("count_" + std::to_string(d), *rep.count);
        c.expect(*rep.count == 1, "a_3(" + std::to_string(d) + ") = " + to_decimal(*rep.count));
        c.expect(rep.witnesses.front() == construct_unique_mis_3(g),
                 "solver witness on " + nd(3, d) + " differs from the construction");
        if (d == 9)
            c.expect(rep.objective == 19, "alpha_3(9) = " + std::to_string(rep.objective));
        if (d == 12)
            c.expect(rep.objective == 31, "alpha_3(12) = " + std::to_string(rep.objective));
    }
}

void periodic_counts(Check& c, const RegressionOptions& o)
{
    for (std::size_t d : {10, 11}) {
        const auto rep = counted(build_graph(3, d), o);
        c.note("count_" + std::to_string(d), *rep.count);
        c.expect(*rep.count == 27, "a_3(" + std::to_string(d) + ") = " + to_decimal(*rep.count));
    }
}

void unique_tetrahedral(Check& c, const RegressionOptions& o)
{
    for (std::size_t d : {0, 2, 4, 6}) {
        const Graph g = build_graph(4, d);
        const auto rep = counted(g, o);
        c.note("count_" + std::to_string(d), *rep.count);
        c.expect(*rep.count == 1, "a_4(" + std::to_string(d) + ") = " + to_decimal(*rep.count));
        c.expect(rep.witnesses.front() == construct_unique_mis_4(g),
                 "solver witness on " + nd(4, d) + " differs from the parity construction");
    }
    const Graph g8 = build_graph(4, 8);
    const auto alpha = max_independent_set(g8, solver_budget(o)).objective;
    const auto built = construct_unique_mis_4(g8);
    c.note("alpha_8", alpha);
    c.note("built_8", built.size());
    c.expect(alpha == 45, "alpha_4(8) = " + std::to_string(alpha));
    c.expect(is_independent(g8, built) && built.size() == 45, "parity set on G_4(8) is not independent of size 45");

    Budget stretch = solver_budget(o);
    stretch.time_limit = std::chrono::milliseconds(o.stretch_time_ms);
    const auto full = count_maximum_independent_sets(g8, stretch);
    if (full.exact) {
        c.note("count_8", *full.count);
        c.expect(*full.count == 1, "a_4(8) = " + to_decimal(*full.count));
        c.expect(full.witnesses.front() == built, "solver witness on G_4(8) differs from the parity construction");
    } else {
        c.note("count_8", "unsettled");
        c.unsettled("a_4(8) (" + full.exhausted_budget.value_or("budget") + ")");
    }
}

void sequence_prefixes(Check& c, const RegressionOptions& o)
{
    const std::vector<std::pair<std::size_t, std::vector<int>>> expected = {
        {4, {1, 4, 1, 80, 1, 944, 1}},
        {5, {1, 5, 1, 705, 5}},
    };
    for (const auto& [n, values] : expected) {
        for (std::size_t d = 0; d < values.size(); ++d) {
            const auto rep = counted(build_graph(n, d), o);
            c.note("a" + std::to_string(n) + "_" + std::to_string(d), *rep.count);
            c.expect(*rep.count == values[d], "a_" + std::to_string(n) + "(" + std::to_string(d) +
                                                  ") = " + to_decimal(*rep.count) + ", expected " +
                                                  std::to_string(values[d]));
        }
    }
}

void small_degrees(Check& c, const RegressionOptions& o)
{
    const auto report = check_small_d_proposition(6, solver_budget(o));
    for (const auto& row : report.rows) {
        const std::string tag = "n" + std::to_string(row.n);
        c.note(tag + "_a0", row.a0 ? to_decimal(*row.a0) : "?");
        c.note(tag + "_a1", row.a1 ? to_decimal(*row.a1) : "?");
        c.note(tag + "_a2", row.a2 ? to_decimal(*row.a2) : "?");
        c.note(tag + "_squares", row.squares_witness);
        c.expect(row.holds, "small-degree counts fail for n = " + std::to_string(row.n));
    }
}

void star_freeness(Check& c, const RegressionOptions&)
{
    for (std::size_t n = 1; n <= 5; ++n) {
        for (std::size_t d = 0; d <= 6; ++d) {
            const Graph g = build_graph(n, d);
            for (std::size_t r = 1; r <= 6; ++r) {
                const std::string at = "(n,d,r)=(" + std::to_string(n) + "," + std::to_string(d) + "," +
                                       std::to_string(r) + ")";
                const bool searched = is_k1r_free(g, r).free;
                const bool closed = k1r_free_criterion(n, d, r);
                c.note(at, searched);
                c.expect(searched == closed, "search says " + std::string(searched ? "free" : "not free") +
                                                 ", criterion says " + (closed ? "free" : "not free") + " at " + at);
                if (d >= r && n >= r) {
                    try {
                        const auto w = build_star_witness(n, d, r);
                        c.expect(verify_star(g, w), "star witness does not verify at " + at);
                    } catch (const error& e) {
                        c.expect(false, "no star witness at " + at + ": " + e.what());
                    }
                }
            }
        }
    }
}

void domination_checks(Check& c, const RegressionOptions& o)
{
    const Graph g4 = build_graph(3, 4);
    const std::vector<ExponentVector> x = {
        ExponentVector({3, 0, 1}), ExponentVector({2, 2, 0}), ExponentVector({2, 1, 1}),
        ExponentVector({1, 1, 2}), ExponentVector({1, 0, 3}), ExponentVector({0, 2, 2}),
    };
    const Graph sub = induced_subgraph(g4, VertexSet::of_monomials(g4, x));
    const auto rep = solve_domination(sub, domination_options(o));
    c.note("sub_edges", sub.edge_count());
    c.note("sub_gamma", rep.gamma->value);
    c.note("sub_i", rep.idom->value);
    c.expect(rep.gamma->exact && rep.gamma->value == 2, "gamma of the six-vertex subgraph is " +
                                                            std::to_string(rep.gamma->value));
    c.expect(rep.idom->exact && rep.idom->value == 3, "i of the six-vertex subgraph is " +
                                                          std::to_string(rep.idom->value));

    auto two_dominating = [&](const Graph& g, const VertexSet& s) {
        const bool two = is_k_dominating(g, s, 2);
        const bool three = is_k_dominating(g, s, 3);
        c.note(g.tag() + "_2dom", two);
        c.note(g.tag() + "_3dom", three);
        c.expect(two, "unique optimum of " + g.tag() + " is not 2-dominating");
        c.expect(!three, "unique optimum of " + g.tag() + " is 3-dominating");
    };
    for (std::size_t d : {3, 9, 12}) {
        const Graph g = build_graph(3, d);
        two_dominating(g, construct_unique_mis_3(g));
    }
    for (std::size_t d : {2, 4, 6, 8}) {
        const Graph g = build_graph(4, d);
        two_dominating(g, construct_unique_mis_4(g));
    }
}

void igamma_data(Check& c, const RegressionOptions& o)
{
    for (auto [n, d_max] : {std::pair<std::size_t, std::size_t>{3, 10}, {4, 4}}) {
        const auto v = check_i_equals_gamma(n, d_max, 0, domination_options(o));
        for (const auto& e : v.entries) {
            const std::string at = nd(n, e.d);
            c.note(at, to_string(e.status) + ":" + e.detail);
            if (e.status == VerdictStatus::violated)
                c.expect(false, at + ": " + e.detail + " certificate " + e.certificate.dump());
            else if (e.status == VerdictStatus::inconclusive)
                c.unsettled(at + " (" + e.detail + ")");
        }
    }
}

void oracle_equivalence(Check& c, const RegressionOptions& o)
{
    std::mt19937_64 rng(o.seed);
    std::vector<Graph> hosts;
    for (std::size_t d = 2; d <= 6; ++d)
        hosts.push_back(build_graph(3, d));
    hosts.push_back(build_graph(4, 3));
    hosts.push_back(build_graph(5, 2));

    auto sample = [&](std::size_t max_size) {
        const Graph& host = hosts[rng() % hosts.size()];
        std::vector<std::size_t> all(host.size());
        std::iota(all.begin(), all.end(), std::size_t{0});
        std::shuffle(all.begin(), all.end(), rng);
        const std::size_t k = 1 + rng() % std::min(max_size, host.size());
        all.resize(k);
        return induced_subgraph(host, VertexSet::of(host, all));
    };

    std::size_t mis_ok = 0;
    for (int t = 0; t < 200; ++t) {
        const Graph g = sample(20);
        const auto fast = count_maximum_independent_sets(g, solver_budget(o));
        const auto slow = brute_force_alpha(g);
        c.note("m" + std::to_string(t), std::to_string(fast.objective) + "/" + to_decimal(*fast.count));
        const bool same = fast.objective == slow.objective && *fast.count == *slow.count;
        const bool witness = is_independent(g, fast.witnesses.front()) &&
                             fast.witnesses.front().size() == fast.objective;
        mis_ok += same && witness;
        c.expect(same, "alpha/count disagree with the oracle on " + g.tag());
        c.expect(witness, "bad witness on " + g.tag());
    }
    std::size_t dom_ok = 0;
    for (int t = 0; t < 200; ++t) {
        const Graph g = sample(18);
        const auto fast = solve_domination(g, domination_options(o));
        const auto slow = brute_force_domination(g);
        c.note("g" + std::to_string(t), std::to_string(fast.gamma->value) + "/" + std::to_string(fast.idom->value));
        const bool same = fast.gamma->value == slow.gamma && fast.idom->value == slow.idom;
        dom_ok += same;
        c.expect(same, "gamma/i disagree with the oracle on " + g.tag());
    }
    c.note("mis_ok", mis_ok);
    c.note("dom_ok", dom_ok);
}

void identities(Check& c, const RegressionOptions&)
{
    std::size_t checked = 0;
    for (std::uint64_t k = 1; k <= 12; ++k) {
        try {
            checked += verify_difference_identities(k).checked.size();
        } catch (const validation_error& e) {
            c.expect(false, e.what());
        }
    }
    for (std::uint64_t m = 0; m <= 30; ++m) {
        try {
            checked += verify_sum_identities(m).checked.size();
        } catch (const validation_error& e) {
            c.expect(false, e.what());
        }
    }
    c.note("checked", checked);
}

struct CriterionDef {
    const char* title;
    void (*run)(Check&, const RegressionOptions&);
    const char* summary;
};

const CriterionDef criteria[] = {
    {"alpha formulas for G_3(d), d <= 12, and G_4(d), d <= 8", formula_regression, "all values match"},
    {"G_3(6): alpha 10 with exactly two optima", two_optima_at_six, "two optima, one is the construction"},
    {"unique optimum of G_3(d) for d = 0, 3, 9, 12", unique_triangular, "unique and equal to the construction"},
    {"a_3(10) = a_3(11) = 27", periodic_counts, "both counts are 27"},
    {"unique optimum of G_4(d) for even d <= 8", unique_tetrahedral, "unique and equal to the parity set"},
    {"a_4(0..6) and a_5(0..4) prefixes", sequence_prefixes, "both prefixes reproduced"},
    {"a_n(0), a_n(1), a_n(2) for n <= 6", small_degrees, "1, n, 1 with the squares at d = 2"},
    {"K_{1,r}-freeness criterion for n <= 5, d <= 6, r <= 6", star_freeness, "search agrees with the criterion"},
    {"domination: six-vertex subgraph and 2-domination", domination_checks,
     "gamma 2, i 3; optima 2- but not 3-dominating"},
    {"i = gamma on G_3(d), d <= 10, and G_4(d), d <= 4", igamma_data, "equal everywhere"},
    {"solvers agree with exhaustive oracles on random subgraphs", oracle_equivalence, "400 graphs agree"},
    {"arithmetic identities", identities, "all identities hold"},
};

} // namespace

std::string to_string(CriterionStatus s)
{
    switch (s) {
    case CriterionStatus::pass:
        return "PASS";
    case CriterionStatus::fail:
        return "FAIL";
    case CriterionStatus::inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
}

CriterionResult run_criterion(int id, const RegressionOptions& options)
{
    if (id < 1 || id > 12)
        throw domain_error("criterion " + std::to_string(id) + " cannot be run on its own");
    const CriterionDef& def = criteria[id - 1];
    CriterionResult r;
    r.id = id;
    r.title = def.title;
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
        def.run(c, options);
        c.finish(r, def.summary);
    } catch (const std::exception& e) {
        c.finish(r, def.summary);
        r.status = CriterionStatus::fail;
        r.detail = std::string("error: ") + e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run_regression(const RegressionOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result)
{
    std::vector<CriterionResult> out;
    auto emit = [&](CriterionResult r) {
        if (on_result)
            on_result(r);
        out.push_back(std::move(r));
    };
    for (int id = 1; id <= 12; ++id)
        emit(run_criterion(id, options));

    CriterionResult det;
    det.id = 13;
    det.title = "criteria 1-12 give identical numbers with " + std::to_string(options.determinism_low) + " and " +
                std::to_string(options.determinism_high) + " workers";
    const auto start = std::chrono::steady_clock::now();
    auto fingerprints = [&](unsigned threads) {
        if (threads == options.threads) {
            std::vector<std::string> fp;
            for (const auto& r : out)
                fp.push_back(r.fingerprint);
            return fp;
        }
        RegressionOptions o = options;
        o.threads = threads;
        std::vector<std::string> fp;
        for (int id = 1; id <= 12; ++id)
            fp.push_back(run_criterion(id, o).fingerprint);
        return fp;
    };
    const auto low = fingerprints(options.determinism_low);
    const auto high = fingerprints(options.determinism_high);
    std::vector<int> differ;
    for (std::size_t i = 0; i < low.size(); ++i)
        if (low[i] != high[i])
            differ.push_back(static_cast<int>(i + 1));
    if (differ.empty()) {
        det.status = CriterionStatus::pass;
        det.detail = "all fingerprints match";
    } else {
        det.status = CriterionStatus::fail;
        det.detail = "numbers differ in criteria";
        for (int id : differ)
            det.detail += " " + std::to_string(id);
    }
    std::string combined;
    for (const auto& f : low)
        combined += f;
    det.fingerprint = std::to_string(std::hash<std::string>{}(combined));
    det.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(std::move(det));
    return out;
}

nlohmann::json to_json(const CriterionResult& r)
{
    return {{"id", r.id},
            {"title", r.title},
            {"status", to_string(r.status)},
            {"detail", r.detail},
            {"elapsed_ms", r.elapsed_ms}};
}

} // namespace monogrid
