// monogrid: command-line driver for the monomial grid graph library.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "monogrid/closed_forms.hpp"
#include "monogrid/domination.hpp"
#include "monogrid/errors.hpp"
#include "monogrid/graph.hpp"
#include "monogrid/io.hpp"
#include "monogrid/mis.hpp"
#include "monogrid/regression.hpp"
#include "monogrid/render.hpp"
#include "monogrid/sequence.hpp"
#include "monogrid/stars.hpp"

using namespace monogrid;
using nlohmann::json;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, budget_out = 3 };

struct RunConfig {
    bool json = false;
    std::uint64_t time_ms = 0;
    std::uint64_t nodes = 0;
    unsigned threads = 0;
    bool allow_large = false;
    std::size_t max_vertices = default_vertex_cap;
    std::string out;
    std::string cache;

    Budget budget() const
    {
        Budget b;
        if (time_ms > 0)
            b.time_limit = std::chrono::milliseconds(time_ms);
        if (nodes > 0)
            b.node_limit = nodes;
        b.threads = threads > 0 ? threads : default_thread_count();
        return b;
    }

    DominationOptions domination() const
    {
        DominationOptions o;
        o.budget = budget();
        o.allow_large = allow_large;
        return o;
    }

    Graph graph(std::size_t n, std::size_t d) const { return build_graph(n, d, BuildOptions{max_vertices}); }

    std::unique_ptr<SequenceCache> open_cache() const
    {
        std::string path = cache;
        if (path.empty())
            if (const char* env = std::getenv("MONOGRID_CACHE"))
                path = env;
        if (path.empty())
            return nullptr;
        return std::make_unique<SequenceCache>(path);
    }
};

void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(cfg.out);
    if (!f)
        throw usage_error("cannot write " + cfg.out);
    f << text;
}

void emit_json(const RunConfig& cfg, const json& j)
{
    emit(cfg, j.dump(2) + "\n");
}

void add_budget_flags(CLI::App* app, RunConfig& cfg)
{
    app->add_option("--time-ms", cfg.time_ms, "Time limit per solver call (ms)")->check(CLI::PositiveNumber);
    app->add_option("--nodes", cfg.nodes, "Search node limit per solver call")->check(CLI::PositiveNumber);
    app->add_option("--threads", cfg.threads, "Solver workers (default MONOGRID_THREADS or all cores)")
        ->check(CLI::PositiveNumber);
    app->add_flag("--allow-large", cfg.allow_large, "Allow exact domination above the vertex limit");
    app->add_option("--max-vertices", cfg.max_vertices, "Refuse to build larger graphs")->check(CLI::PositiveNumber);
}

std::string set_line(const Graph& g, const VertexSet& s)
{
    std::string out;
    for (auto v : s.members()) {
        if (!out.empty())
            out += ' ';
        out += g.labels().empty() ? std::to_string(v) : g.label(v).to_monomial_string();
    }
    return out;
}

std::optional<VertexSet> read_highlight(const std::string& path, const Graph& g)
{
    if (path.empty())
        return std::nullopt;
    std::ifstream in(path);
    if (!in)
        throw usage_error("cannot read " + path);
    const auto mons = read_vertex_list(in);
    return VertexSet::of_monomials(g, mons);
}

std::string fmt_ms(std::chrono::nanoseconds ns)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f ms", std::chrono::duration<double, std::milli>(ns).count());
    return buf;
}

int report_mis(const RunConfig& cfg, const Graph& g, const SolveReport& rep, bool show_count)
{
    if (cfg.json) {
        emit_json(cfg, to_json(g, rep));
    } else {
        std::ostringstream s;
        s << "graph " << g.tag() << " (" << g.size() << " vertices, " << g.edge_count() << " edges)\n";
        s << "alpha " << rep.objective << (rep.objective_exact ? "" : " (lower bound)") << '\n';
        if (show_count)
            s << "count " << (rep.count ? to_decimal(*rep.count) : "unknown") << '\n';
        for (const auto& w : rep.witnesses)
            s << "set " << set_line(g, w) << '\n';
        if (!rep.witnesses_complete && rep.exact)
            s << "(list truncated at the cap)\n";
        s << (rep.exact ? "exact" : "inexact: " + rep.exhausted_budget.value_or("budget")) << ", " << rep.nodes_explored
          << " nodes, " << fmt_ms(rep.elapsed) << '\n';
        emit(cfg, s.str());
    }
    if (!rep.exact) {
        std::cerr << "budget exhausted: " << rep.exhausted_budget.value_or("budget") << '\n';
        return budget_out;
    }
    return ok;
}

int report_domination(const RunConfig& cfg, const Graph& g, const DominationReport& rep)
{
    bool exact = true;
    if (cfg.json) {
        emit_json(cfg, to_json(g, rep));
    } else {
        std::ostringstream s;
        s << "graph " << g.tag() << " (" << g.size() << " vertices)\n";
        auto line = [&](const char* name, const std::optional<DominationObjective>& o) {
            if (!o)
                return;
            exact = exact && o->exact;
            s << name << ' ' << o->value << (o->exact ? "" : " (upper bound)") << '\n';
            s << "set " << set_line(g, o->witness) << '\n';
            s << (o->exact ? "exact" : "inexact: " + o->exhausted_budget.value_or("budget")) << ", " << o->nodes
              << " nodes, " << fmt_ms(o->elapsed) << '\n';
        };
        line("gamma", rep.gamma);
        line("i", rep.idom);
        emit(cfg, s.str());
    }
    for (const auto* o : {&rep.gamma, &rep.idom})
        exact = exact && (!*o || (*o)->exact);
    if (!exact) {
        std::cerr << "budget exhausted\n";
        return budget_out;
    }
    return ok;
}

int verdict_exit(const RunConfig& cfg, const ConjectureVerdict& v)
{
    if (cfg.json) {
        emit_json(cfg, to_json(v));
    } else {
        std::ostringstream s;
        s << v.id << " (n = " << v.n << ")\n";
        for (const auto& e : v.entries) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "  d = %-4zu %-13s ", e.d, to_string(e.status).c_str());
            s << buf << e.detail << '\n';
            if (!e.certificate.is_null())
                s << "    certificate " << e.certificate.dump() << '\n';
        }
        s << "overall " << to_string(v.overall()) << '\n';
        emit(cfg, s.str());
    }
    if (v.overall() == VerdictStatus::inconclusive)
        std::cerr << "warning: some entries are inconclusive\n";
    return v.overall() == VerdictStatus::violated ? failed : ok;
}

std::size_t expected_construction_size(std::size_t n, std::size_t d)
{
    return n == 3 ? alpha3_formula(d).value : alpha4_formula(d).value;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact solvers and checks for monomial grid graphs G_n(d)"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::function<int()> action;

    std::size_t n = 0;
    std::size_t d = 0;
    auto add_nd = [&](CLI::App* sub) {
        sub->add_option("n", n, "Number of variables")->required()->check(CLI::PositiveNumber);
        sub->add_option("d", d, "Degree")->required();
        sub->add_flag("--json", cfg.json, "Machine-readable output");
        sub->add_option("--out", cfg.out, "Write to a file instead of standard output");
    };

    // gen
    std::string gen_format = "monomials";
    std::string highlight;
    auto* gen = app.add_subcommand("gen", "Emit G_n(d)");
    add_nd(gen);
    gen->add_option("--format", gen_format, "dot, edges or monomials")
        ->check(CLI::IsMember({"dot", "edges", "monomials"}));
    gen->add_option("--highlight", highlight, "Vertex list drawn highlighted (dot only)");
    gen->add_option("--max-vertices", cfg.max_vertices, "Refuse to build larger graphs")->check(CLI::PositiveNumber);
    gen->callback([&] {
        action = [&] {
            const Graph g = cfg.graph(n, d);
            if (cfg.json) {
                json j;
                j["graph"] = g.tag();
                j["vertices"] = vertex_set_json(g, VertexSet::all_of(g));
                j["edges"] = g.edges();
                emit_json(cfg, j);
                return int{ok};
            }
            std::ostringstream s;
            if (gen_format == "dot")
                write_dot(s, g, read_highlight(highlight, g));
            else if (gen_format == "edges")
                write_edge_list(s, g);
            else
                write_vertex_list(s, g.labels());
            emit(cfg, s.str());
            return int{ok};
        };
    });

    // alpha, count, enumerate
    std::size_t cap = 100;
    for (const char* name : {"alpha", "count", "enumerate"}) {
        const std::string which = name;
        auto* sub = app.add_subcommand(which, which == "alpha"    ? "Independence number with one witness"
                                              : which == "count" ? "Number of maximum independent sets"
                                                                 : "List maximum independent sets");
        add_nd(sub);
        add_budget_flags(sub, cfg);
        if (which == "enumerate")
            sub->add_option("--cap", cap, "Stop listing after this many sets")->check(CLI::PositiveNumber);
        sub->callback([&, which] {
            action = [&, which] {
                const Graph g = cfg.graph(n, d);
                if (which == "alpha")
                    return report_mis(cfg, g, max_independent_set(g, cfg.budget()), false);
                if (which == "count")
                    return report_mis(cfg, g, count_maximum_independent_sets(g, cfg.budget()), true);
                return report_mis(cfg, g, enumerate_maximum_independent_sets(g, cap, cfg.budget()), true);
            };
        });
    }

    // dom, idom
    for (const char* name : {"dom", "idom"}) {
        const std::string which = name;
        auto* sub = app.add_subcommand(which, which == "dom" ? "Domination number" : "Independent domination number");
        add_nd(sub);
        add_budget_flags(sub, cfg);
        sub->callback([&, which] {
            action = [&, which] {
                const Graph g = cfg.graph(n, d);
                const auto opts = cfg.domination();
                return report_domination(cfg, g,
                                         which == "dom" ? min_dominating_set(g, opts)
                                                        : min_independent_dominating_set(g, opts));
            };
        });
    }

    // construct
    auto* construct = app.add_subcommand("construct", "Explicit unique maximum independent set (n = 3 or 4)");
    add_nd(construct);
    construct->callback([&] {
        action = [&] {
            if (n != 3 && n != 4)
                throw usage_error("constructions exist for n = 3 and n = 4 only");
            if (n == 3 && d % 3 != 0)
                throw usage_error("the n = 3 construction needs 3 | d, got d = " + std::to_string(d));
            if (n == 4 && d % 2 != 0)
                throw usage_error("the n = 4 construction needs 2 | d, got d = " + std::to_string(d));
            const Graph g = cfg.graph(n, d);
            const VertexSet s = n == 3 ? construct_unique_mis_3(g) : construct_unique_mis_4(g);
            const std::size_t expected = expected_construction_size(n, d);
            if (!is_independent(g, s))
                throw validation_error("constructed set is not independent");
            if (s.size() != expected)
                throw validation_error("constructed set has " + std::to_string(s.size()) + " vertices, expected " +
                                       std::to_string(expected));
            if (cfg.json) {
                json j;
                j["graph"] = g.tag();
                j["size"] = s.size();
                j["independent"] = true;
                j["monomials"] = vertex_set_json(g, s);
                emit_json(cfg, j);
            } else {
                std::ostringstream out;
                write_vertex_list(out, s.monomials(g));
                emit(cfg, out.str());
            }
            return int{ok};
        };
    });

    // check
    std::string conjecture;
    std::size_t check_n = 3;
    std::size_t d_min = 0;
    std::size_t d_max = 0;
    std::size_t r = 2;
    auto* check = app.add_subcommand("check", "Check a conjecture or theorem over a range of degrees");
    check->add_option("id", conjecture, "howroyd, unique, periodicity, igamma, small, wagon or bollobas")->required();
    check->add_option("--n", check_n, "Number of variables")->check(CLI::PositiveNumber);
    check->add_option("--dmin", d_min, "Smallest degree");
    check->add_option("--dmax", d_max, "Largest degree")->required();
    check->add_option("--r", r, "Star size for bollobas (K_{1,r+1}-free)");
    check->add_option("--cache", cfg.cache, "Sequence cache (default MONOGRID_CACHE)");
    check->add_flag("--json", cfg.json, "Machine-readable output");
    check->add_option("--out", cfg.out, "Write to a file instead of standard output");
    add_budget_flags(check, cfg);
    check->callback([&] {
        action = [&] {
            RecordBudget rb;
            rb.mis = cfg.budget();
            rb.domination = cfg.domination();
            auto cache = cfg.open_cache();
            if (conjecture == "howroyd")
                return verdict_exit(cfg, check_howroyd(d_max, rb, cache.get()));
            if (conjecture == "unique")
                return verdict_exit(cfg, check_unique_mod_n(check_n, d_max, d_min, rb, cache.get()));
            if (conjecture == "periodicity")
                return verdict_exit(cfg, check_periodicity(check_n, d_max, d_min, rb, cache.get()));
            if (conjecture == "igamma")
                return verdict_exit(cfg, check_i_equals_gamma(check_n, d_max, d_min, rb.domination));
            if (conjecture == "small") {
                const auto rep = check_small_d_proposition(d_max, rb.mis);
                auto str = [](const std::optional<BigCount>& c) { return c ? to_decimal(*c) : std::string("?"); };
                json rows = json::array();
                std::ostringstream s;
                for (const auto& row : rep.rows) {
                    rows.push_back({{"n", row.n},
                                    {"a0", str(row.a0)},
                                    {"a1", str(row.a1)},
                                    {"a2", str(row.a2)},
                                    {"squares_witness", row.squares_witness},
                                    {"holds", row.holds}});
                    s << "  n = " << row.n << "  a(0) = " << str(row.a0) << "  a(1) = " << str(row.a1)
                      << "  a(2) = " << str(row.a2) << "  squares " << (row.squares_witness ? "yes" : "no") << "  "
                      << (row.holds ? "holds" : "FAILS") << '\n';
                }
                if (cfg.json)
                    emit_json(cfg, {{"id", "small"}, {"rows", rows}, {"holds", rep.holds()}});
                else
                    emit(cfg, "small degrees (n <= " + std::to_string(d_max) + ")\n" + s.str());
                return rep.holds() ? int{ok} : int{failed};
            }
            if (conjecture == "wagon") {
                // tabulated only: the closed form is compared, never asserted
                json rows = json::array();
                std::ostringstream s;
                s << "  d  formula  gamma_3(d)\n";
                const std::size_t lo = std::max<std::size_t>(d_min, 14);
                for (std::size_t dd = lo; dd <= d_max; ++dd) {
                    const Graph g = cfg.graph(3, dd);
                    DominationReport rep;
                    try {
                        rep = min_dominating_set(g, rb.domination);
                    } catch (const capacity_error&) {
                        rows.push_back({{"d", dd}, {"formula", wagon_gamma3(dd)}, {"gamma", nullptr}, {"exact", false}});
                        s << "  " << dd << "  " << wagon_gamma3(dd) << "  not computed (" << g.size()
                          << " vertices; pass --allow-large)\n";
                        continue;
                    }
                    const auto& gm = *rep.gamma;
                    rows.push_back({{"d", dd}, {"formula", wagon_gamma3(dd)}, {"gamma", gm.value}, {"exact", gm.exact}});
                    s << "  " << dd << "  " << wagon_gamma3(dd) << "  " << gm.value << (gm.exact ? "" : " (upper bound)")
                      << '\n';
                }
                if (cfg.json)
                    emit_json(cfg, {{"id", "wagon"}, {"rows", rows}});
                else
                    emit(cfg, s.str());
                return int{ok};
            }
            if (conjecture == "bollobas") {
                json rows = json::array();
                std::ostringstream s;
                bool broken = false;
                for (std::size_t dd = d_min; dd <= d_max; ++dd) {
                    const Graph g = cfg.graph(check_n, dd);
                    const auto rep = bollobas_cockayne_check(g, r, rb.domination);
                    rows.push_back(to_json(rep));
                    broken = broken || (rep.exact && !rep.star && !rep.holds);
                    s << "  d = " << dd << "  ";
                    if (rep.star)
                        s << "contains an induced K_{1," << r + 1 << "}\n";
                    else
                        s << "i = " << rep.idom.value_or(0) << "  gamma = " << rep.gamma.value_or(0) << "  bound "
                          << rep.bound.value_or(0) << "  " << (rep.holds ? "holds" : "FAILS")
                          << (rep.exact ? "" : " (inexact)") << '\n';
                }
                if (cfg.json)
                    emit_json(cfg, {{"id", "bollobas"}, {"rows", rows}});
                else
                    emit(cfg, s.str());
                return broken ? int{failed} : int{ok};
            }
            throw usage_error("unknown check '" + conjecture +
                              "' (expected howroyd, unique, periodicity, igamma, small, wagon or bollobas)");
        };
    });

    // verify-paper
    RegressionOptions regression;
    auto* verify = app.add_subcommand("verify-paper", "Run the full regression suite");
    verify->add_flag("--json", cfg.json, "Machine-readable output");
    verify->add_option("--threads", regression.threads, "Solver workers for the main run")->check(CLI::PositiveNumber);
    verify->add_option("--stretch-ms", regression.stretch_time_ms, "Time allowed for the G_4(8) uniqueness count")
        ->check(CLI::PositiveNumber);
    verify->callback([&] {
        action = [&] {
            int fails = 0;
            int unsettled = 0;
            const auto results = run_regression(regression, [&](const CriterionResult& res) {
                fails += res.status == CriterionStatus::fail;
                unsettled += res.status == CriterionStatus::inconclusive;
                if (!cfg.json)
                    std::printf("%2d %-12s %s\n   %s\n", res.id, to_string(res.status).c_str(), res.title.c_str(),
                                res.detail.c_str());
                std::fflush(stdout);
            });
            if (cfg.json) {
                json arr = json::array();
                for (const auto& res : results)
                    arr.push_back(to_json(res));
                emit_json(cfg, {{"criteria", arr}, {"failed", fails}, {"inconclusive", unsettled}});
            }
            if (unsettled > 0)
                std::cerr << "warning: " << unsettled << " criteria inconclusive\n";
            return fails > 0 ? int{failed} : int{ok};
        };
    });

    // render
    std::string render_format = "svg";
    auto* render = app.add_subcommand("render", "Draw G_3(d) or G_4(d) as SVG or TikZ");
    add_nd(render);
    render->add_option("--format", render_format, "svg or tikz")->check(CLI::IsMember({"svg", "tikz"}));
    render->add_option("--highlight", highlight, "Vertex list drawn highlighted");
    render->callback([&] {
        action = [&] {
            if (n != 3 && n != 4)
                throw usage_error("figures are drawn for n = 3 and n = 4 only");
            const Graph g = cfg.graph(n, d);
            const auto hl = read_highlight(highlight, g);
            const std::string fig =
                render_figure(g, hl, render_format == "tikz" ? FigureFormat::tikz : FigureFormat::svg);
            if (cfg.json) {
                json j;
                j["graph"] = g.tag();
                j["format"] = render_format;
                j["figure"] = fig;
                if (n == 4 && hl)
                    j["slice_counts"] = slice_highlight_counts(g, *hl);
                emit_json(cfg, j);
            } else {
                emit(cfg, fig);
                if (n == 4 && hl) {
                    std::string counts;
                    for (auto c : slice_highlight_counts(g, *hl))
                        counts += (counts.empty() ? "" : ",") + std::to_string(c);
                    std::cerr << "highlighted per slice: " << counts << '\n';
                }
            }
            return int{ok};
        };
    });

    // sequence
    std::string fields = "alpha,count";
    auto* sequence = app.add_subcommand("sequence", "Compute sequence records for d_min..d_max into the cache");
    sequence->add_option("n", n, "Number of variables")->required()->check(CLI::PositiveNumber);
    sequence->add_option("--dmin", d_min, "Smallest degree");
    sequence->add_option("--dmax", d_max, "Largest degree")->required();
    sequence->add_option("--fields", fields, "Comma separated: alpha, count, gamma, idom");
    sequence->add_option("--cache", cfg.cache, "Sequence cache (default MONOGRID_CACHE)");
    sequence->add_flag("--json", cfg.json, "Machine-readable output (JSON lines)");
    sequence->add_option("--out", cfg.out, "Write to a file instead of standard output");
    add_budget_flags(sequence, cfg);
    sequence->callback([&] {
        action = [&] {
            RecordBudget rb;
            rb.alpha = rb.count = false;
            std::stringstream list(fields);
            for (std::string f; std::getline(list, f, ',');) {
                if (f == "alpha")
                    rb.alpha = true;
                else if (f == "count")
                    rb.count = true;
                else if (f == "gamma")
                    rb.gamma = true;
                else if (f == "idom")
                    rb.idom = true;
                else
                    throw usage_error("unknown field '" + f + "'");
            }
            rb.mis = cfg.budget();
            rb.domination = cfg.domination();
            auto cache = cfg.open_cache();
            std::vector<SequenceRecord> recs;
            bool all_exact = true;
            for (std::size_t dd = d_min; dd <= d_max; ++dd) {
                auto rec = compute_record(n, dd, rb, cache.get());
                all_exact = all_exact && (!rb.alpha || rec.alpha_known()) && (!rb.count || rec.count_known()) &&
                            (!rb.gamma || (rec.gamma && rec.gamma->exact)) &&
                            (!rb.idom || (rec.idom && rec.idom->exact));
                recs.push_back(std::move(rec));
            }
            emit(cfg, export_records(recs, cfg.json ? ExportFormat::jsonl : ExportFormat::csv));
            if (!all_exact) {
                std::cerr << "budget exhausted for some fields\n";
                return int{budget_out};
            }
            return int{ok};
        };
    });

    // export
    std::string export_format = "csv";
    std::string field = "count";
    std::optional<std::size_t> export_n;
    auto* exp = app.add_subcommand("export", "Export cached records as CSV, JSON lines or an OEIS b-file");
    exp->add_option("--format", export_format, "csv, jsonl or bfile")->check(CLI::IsMember({"csv", "jsonl", "bfile"}));
    exp->add_option("--field", field, "Field for b-files: alpha, count, gamma or idom");
    exp->add_option("--n", export_n, "Only records with this n");
    exp->add_option("--cache", cfg.cache, "Sequence cache (default MONOGRID_CACHE)");
    exp->add_flag("--json", cfg.json, "Wrap the output in a JSON object");
    exp->add_option("--out", cfg.out, "Write to a file instead of standard output");
    exp->callback([&] {
        action = [&] {
            auto cache = cfg.open_cache();
            if (!cache)
                throw usage_error("export needs --cache or MONOGRID_CACHE");
            auto recs = cache->records();
            if (export_n)
                std::erase_if(recs, [&](const SequenceRecord& rec) { return rec.n != *export_n; });
            const auto format = export_format == "csv"     ? ExportFormat::csv
                                : export_format == "jsonl" ? ExportFormat::jsonl
                                                           : ExportFormat::bfile;
            const std::string text = export_records(recs, format, field);
            if (cfg.json)
                emit_json(cfg, {{"format", export_format}, {"records", recs.size()}, {"content", text}});
            else
                emit(cfg, text);
            return int{ok};
        };
    });

    // import
    std::string edge_file;
    std::string objective = "alpha";
    auto* imp = app.add_subcommand("import", "Run a solver on a graph read from an edge-list file");
    imp->add_option("file", edge_file, "Edge list: 'p V E' header then 'e u v' lines, 1-based")->required();
    imp->add_option("--solve", objective, "alpha, count, enumerate, dom or idom")
        ->check(CLI::IsMember({"alpha", "count", "enumerate", "dom", "idom"}));
    imp->add_option("--cap", cap, "Enumeration cap")->check(CLI::PositiveNumber);
    imp->add_flag("--json", cfg.json, "Machine-readable output");
    imp->add_option("--out", cfg.out, "Write to a file instead of standard output");
    add_budget_flags(imp, cfg);
    imp->callback([&] {
        action = [&] {
            std::ifstream in(edge_file);
            if (!in)
                throw usage_error("cannot read " + edge_file);
            const Graph g = read_edge_list(in);
            if (objective == "alpha")
                return report_mis(cfg, g, max_independent_set(g, cfg.budget()), false);
            if (objective == "count")
                return report_mis(cfg, g, count_maximum_independent_sets(g, cfg.budget()), true);
            if (objective == "enumerate")
                return report_mis(cfg, g, enumerate_maximum_independent_sets(g, cap, cfg.budget()), true);
            const auto opts = cfg.domination();
            return report_domination(cfg, g,
                                     objective == "dom" ? min_dominating_set(g, opts)
                                                        : min_independent_dominating_set(g, opts));
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? int{ok} : int{usage};
    }

    try {
        return action ? action() : int{usage};
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const capacity_error& e) {
        std::cerr << "capacity exceeded: " << e.what() << '\n';
        return usage;
    } catch (const domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const format_error& e) {
        std::cerr << "format error: " << e.what() << '\n';
        return usage;
    } catch (const cache_error& e) {
        std::cerr << "cache error: " << e.what() << '\n';
        return failed;
    } catch (const error& e) {
        std::cerr << "validation failure: " << e.what() << '\n';
        return failed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return failed;
    }
}
