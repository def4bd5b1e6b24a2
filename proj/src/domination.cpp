#include "monogrid/domination.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>

#include "monogrid/errors.hpp"
#include "monogrid/mis.hpp"

namespace monogrid {

namespace {

using Rows = std::vector<Bitset>;

struct DomState {
    Bitset chosen;
    std::size_t count = 0;
    Bitset undominated;
    Bitset allowed;
};

/// Undominated vertex with the fewest remaining candidate dominators.
std::size_t pick_undominated(const Rows& closed, const DomState& s, std::size_t& options)
{
    std::size_t best = Bitset::npos;
    options = std::numeric_limits<std::size_t>::max();
    for (auto u = s.undominated.first(); u != Bitset::npos; u = s.undominated.next(u)) {
        const std::size_t k = closed[u].and_count(s.allowed);
        if (k < options) {
            options = k;
            best = u;
            if (k == 0)
                break;
        }
    }
    return best;
}

/// Candidates for dominating u, most new coverage first, lowest index on ties.
std::vector<std::size_t> ordered_candidates(const Rows& closed, const DomState& s, std::size_t u)
{
    std::vector<std::pair<std::size_t, std::size_t>> scored;
    (closed[u] & s.allowed).for_each(
        [&](std::size_t w) { scored.emplace_back(closed[w].and_count(s.undominated), w); });
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    std::vector<std::size_t> out;
    out.reserve(scored.size());
    for (auto& p : scored)
        out.push_back(p.second);
    return out;
}

/// Children of a search node in branching order; sibling i may not use
/// candidates 0..i-1, which keeps the subtrees disjoint.
template <typename F>
void for_each_child(const Rows& closed, bool independent, const DomState& s, F&& visit)
{
    std::size_t options = 0;
    const std::size_t u = pick_undominated(closed, s, options);
    if (options == 0)
        return;
    Bitset allowed = s.allowed;
    for (auto w : ordered_candidates(closed, s, u)) {
        DomState child{s.chosen, s.count + 1, s.undominated, allowed};
        child.chosen.set(w);
        child.undominated.subtract(closed[w]);
        child.allowed.reset(w);
        if (independent)
            child.allowed.subtract(closed[w]);
        if (!visit(std::move(child)))
            return;
        allowed.reset(w);
    }
}

/// Lower bound on the dominators still needed: max of a greedy packing of
/// undominated vertices with disjoint candidate sets and a coverage bound.
std::size_t lower_bound(const Rows& closed, const DomState& s)
{
    const std::size_t undominated = s.undominated.count();
    if (undominated == 0)
        return 0;
    std::vector<std::pair<std::size_t, std::size_t>> by_options;
    s.undominated.for_each([&](std::size_t u) { by_options.emplace_back(closed[u].and_count(s.allowed), u); });
    std::sort(by_options.begin(), by_options.end());
    Bitset used(s.allowed.width());
    std::size_t packing = 0;
    for (auto [k, u] : by_options) {
        if (k == 0)
            return std::numeric_limits<std::size_t>::max() / 2;
        const Bitset cand = closed[u] & s.allowed;
        if (!cand.intersects(used)) {
            ++packing;
            used |= cand;
        }
    }
    std::size_t max_cover = 0;
    s.allowed.for_each([&](std::size_t w) { max_cover = std::max(max_cover, closed[w].and_count(s.undominated)); });
    const std::size_t coverage = max_cover == 0 ? undominated : (undominated + max_cover - 1) / max_cover;
    return std::max(packing, coverage);
}

class DomSearch {
public:
    DomSearch(const Rows& closed, bool independent, BudgetGuard& guard, std::atomic<long long>& best, bool find_first)
        : closed_(closed), independent_(independent), guard_(guard), best_(best), find_first_(find_first)
    {
    }

    void run(const DomState& s)
    {
        if (done_)
            return;
        guard_.tick();
        if (s.undominated.none()) {
            offer(s);
            return;
        }
        const long long best = best_.load(std::memory_order_relaxed);
        if (static_cast<long long>(s.count + lower_bound(closed_, s)) >= best)
            return;
        for_each_child(closed_, independent_, s, [&](DomState child) {
            run(child);
            return !done_;
        });
    }

    std::optional<Bitset> incumbent() const
    {
        std::lock_guard lock(mutex_);
        return incumbent_;
    }

private:
    void offer(const DomState& s)
    {
        const auto size = static_cast<long long>(s.count);
        if (find_first_) {
            if (size < best_.load()) {
                std::lock_guard lock(mutex_);
                incumbent_ = s.chosen;
                done_ = true;
            }
            return;
        }
        long long cur = best_.load();
        while (size < cur) {
            if (best_.compare_exchange_weak(cur, size)) {
                std::lock_guard lock(mutex_);
                if (!incumbent_ || incumbent_->count() > s.count)
                    incumbent_ = s.chosen;
                return;
            }
        }
    }

    const Rows& closed_;
    bool independent_;
    BudgetGuard& guard_;
    std::atomic<long long>& best_;
    bool find_first_;
    bool done_ = false;
    mutable std::mutex mutex_;
    std::optional<Bitset> incumbent_;
};

Bitset greedy_dominating(const Rows& closed, std::size_t width, bool independent)
{
    Bitset undominated = Bitset::full(width);
    Bitset allowed = Bitset::full(width);
    Bitset chosen(width);
    while (undominated.any()) {
        std::size_t pick = Bitset::npos;
        std::size_t gain = 0;
        allowed.for_each([&](std::size_t w) {
            const std::size_t k = closed[w].and_count(undominated);
            if (k > gain) {
                gain = k;
                pick = w;
            }
        });
        chosen.set(pick);
        undominated.subtract(closed[pick]);
        allowed.reset(pick);
        if (independent)
            allowed.subtract(closed[pick]);
    }
    return chosen;
}

std::vector<DomState> dom_frontier(const Rows& closed, bool independent, std::size_t width, std::size_t depth)
{
    std::vector<DomState> tasks{DomState{Bitset(width), 0, Bitset::full(width), Bitset::full(width)}};
    for (std::size_t level = 0; level < depth; ++level) {
        std::vector<DomState> next;
        for (auto& t : tasks) {
            if (t.undominated.none()) {
                next.push_back(std::move(t));
                continue;
            }
            for_each_child(closed, independent, t, [&](DomState child) {
                next.push_back(std::move(child));
                return true;
            });
        }
        tasks = std::move(next);
    }
    return tasks;
}

DominationObjective solve_objective(const Graph& g, bool independent, const DominationOptions& options)
{
    if (g.size() > options.vertex_limit && !options.allow_large)
        throw capacity_error("exact domination is limited to " + std::to_string(options.vertex_limit) +
                             " vertices by default; " + g.tag() + " has " + std::to_string(g.size()));
    const std::size_t width = g.size();
    Rows closed = g.adjacency();
    for (std::size_t v = 0; v < width; ++v)
        closed[v].set(v);

    BudgetGuard guard(options.budget);
    const unsigned threads = std::max(1u, options.budget.threads);
    DominationObjective out;
    Bitset incumbent = greedy_dominating(closed, width, independent);
    try {
        const auto tasks = dom_frontier(closed, independent, width, 2);
        // value: shared incumbent across workers
        std::atomic<long long> best{static_cast<long long>(incumbent.count())};
        DomSearch opt(closed, independent, guard, best, false);
        try {
            parallel_for(tasks.size(), threads, [&](std::size_t i) { opt.run(tasks[i]); });
        } catch (const budget_exhausted&) {
            if (auto inc = opt.incumbent(); inc && inc->count() < incumbent.count())
                incumbent = *inc;
            throw;
        }
        const auto value = static_cast<std::size_t>(best.load());
        // witness: first solution of that size in task order
        std::vector<std::optional<Bitset>> found(tasks.size());
        std::atomic<std::size_t> found_at{std::numeric_limits<std::size_t>::max()};
        parallel_for(tasks.size(), threads, [&](std::size_t i) {
            if (found_at.load() < i)
                return;
            std::atomic<long long> target{static_cast<long long>(value) + 1};
            DomSearch first(closed, independent, guard, target, true);
            first.run(tasks[i]);
            found[i] = first.incumbent();
            if (found[i]) {
                std::size_t cur = found_at.load();
                while (i < cur && !found_at.compare_exchange_weak(cur, i)) {
                }
            }
        });
        const auto it = std::find_if(found.begin(), found.end(), [](const auto& f) { return f.has_value(); });
        if (it == found.end())
            throw validation_error("domination witness search found no set of the optimal size");
        out.value = value;
        out.witness = VertexSet::of(g, **it);
    } catch (const budget_exhausted& e) {
        out.exact = false;
        out.exhausted_budget = e.what;
        out.value = incumbent.count();
        out.witness = VertexSet::of(g, incumbent);
    }
    out.nodes = guard.nodes();
    out.elapsed = guard.elapsed();
    if (!is_dominating(g, out.witness) || out.witness.size() != out.value ||
        (independent && !is_independent(g, out.witness)))
        throw validation_error("domination witness failed verification");
    return out;
}

nlohmann::json objective_json(const Graph& g, const DominationObjective& o)
{
    nlohmann::json j;
    j["value"] = o.value;
    j["witness"] = vertex_set_json(g, o.witness);
    j["exact"] = o.exact;
    j["nodes"] = o.nodes;
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(o.elapsed).count();
    if (o.exhausted_budget)
        j["exhausted_budget"] = *o.exhausted_budget;
    return j;
}

} // namespace

bool is_k_dominating(const Graph& g, const VertexSet& s, std::size_t k)
{
    if (k == 0)
        throw domain_error("k must be at least 1");
    const Bitset in = s.bits(g);
    for (std::size_t v = 0; v < g.size(); ++v)
        if (!in.test(v) && g.neighbors(v).and_count(in) < k)
            return false;
    return true;
}

DominationReport min_dominating_set(const Graph& g, const DominationOptions& options)
{
    return {solve_objective(g, false, options), std::nullopt};
}

DominationReport min_independent_dominating_set(const Graph& g, const DominationOptions& options)
{
    return {std::nullopt, solve_objective(g, true, options)};
}

DominationReport solve_domination(const Graph& g, const DominationOptions& options)
{
    DominationReport r{solve_objective(g, false, options), solve_objective(g, true, options)};
    if (r.gamma->exact && r.idom->exact && r.gamma->value > r.idom->value)
        throw validation_error("gamma exceeds i on " + g.tag());
    return r;
}

DominationOracle brute_force_domination(const Graph& g)
{
    const std::size_t n = g.size();
    if (n > domination_brute_force_limit)
        throw capacity_error("domination oracle is limited to " + std::to_string(domination_brute_force_limit) +
                             " vertices, graph has " + std::to_string(n));
    std::vector<std::uint32_t> open(n), closed(n);
    for (std::size_t v = 0; v < n; ++v) {
        g.neighbors(v).for_each([&](std::size_t u) { open[v] |= std::uint32_t{1} << u; });
        closed[v] = open[v] | (std::uint32_t{1} << v);
    }
    const std::uint32_t all = n == 32 ? ~0u : ((std::uint32_t{1} << n) - 1);
    DominationOracle out{n, n};
    for (std::uint64_t mask = 0; mask <= all; ++mask) {
        const auto m = static_cast<std::uint32_t>(mask);
        const auto size = static_cast<std::size_t>(std::popcount(m));
        if (size >= out.idom)
            continue;
        std::uint32_t covered = 0;
        bool independent = true;
        for (std::uint32_t rest = m; rest; rest &= rest - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(rest));
            covered |= closed[v];
            if (open[v] & m)
                independent = false;
        }
        if (covered != all)
            continue;
        out.gamma = std::min(out.gamma, size);
        if (independent)
            out.idom = size;
    }
    return out;
}

std::size_t wagon_gamma3(std::size_t d)
{
    if (d < 14)
        throw domain_error("the gamma_3 formula is only conjectured for d >= 14");
    return (d * d + 7 * d - 23) / 14;
}

BollobasCockayneReport bollobas_cockayne_check(const Graph& g, std::size_t r, const DominationOptions& options)
{
    if (r < 2)
        throw domain_error("the i/gamma bound needs r >= 2");
    BollobasCockayneReport out;
    out.r = r;
    auto star = is_k1r_free(g, r + 1);
    if (!star.free) {
        out.star = std::move(star.witness);
        return out;
    }
    const auto rep = solve_domination(g, options);
    out.gamma = rep.gamma->value;
    out.idom = rep.idom->value;
    out.exact = rep.gamma->exact && rep.idom->exact;
    out.bound = static_cast<long long>(*out.gamma) * static_cast<long long>(r - 1) - static_cast<long long>(r - 2);
    out.holds = static_cast<long long>(*out.idom) <= *out.bound;
    return out;
}

std::string to_string(VerdictStatus s)
{
    switch (s) {
    case VerdictStatus::consistent:
        return "consistent";
    case VerdictStatus::violated:
        return "violated";
    case VerdictStatus::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

IGammaReport check_igamma_conjecture(std::size_t n, std::size_t d, const DominationOptions& options)
{
    IGammaReport out;
    out.n = n;
    out.d = d;
    const Graph g = build_graph(n, d);
    try {
        out.report = solve_domination(g, options);
    } catch (const capacity_error& e) {
        out.detail = e.what();
        return out;
    }
    const auto& gm = *out.report.gamma;
    const auto& id = *out.report.idom;
    if (!gm.exact || !id.exact) {
        out.detail = "budget exhausted";
        return out;
    }
    if (gm.value == id.value) {
        out.status = VerdictStatus::consistent;
        return out;
    }
    // an inequality is only reported after an independent re-check
    if (g.size() <= domination_brute_force_limit) {
        const auto oracle = brute_force_domination(g);
        if (oracle.gamma != gm.value || oracle.idom != id.value)
            throw validation_error("domination solver disagrees with the exhaustive oracle on " + g.tag());
    } else {
        DominationOptions again = options;
        again.budget.threads = 1;
        const auto recheck = min_independent_dominating_set(g, again);
        if (!recheck.idom->exact) {
            out.detail = "inequality could not be re-verified within budget";
            return out;
        }
        if (recheck.idom->value != id.value)
            throw validation_error("independent domination re-search disagrees on " + g.tag());
    }
    out.reverified = true;
    out.status = VerdictStatus::violated;
    out.detail = "gamma = " + std::to_string(gm.value) + " < i = " + std::to_string(id.value);
    return out;
}

nlohmann::json to_json(const Graph& g, const DominationReport& r)
{
    nlohmann::json j;
    j["graph"] = g.tag();
    j["gamma"] = r.gamma ? objective_json(g, *r.gamma) : nlohmann::json(nullptr);
    j["idom"] = r.idom ? objective_json(g, *r.idom) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const BollobasCockayneReport& r)
{
    nlohmann::json j;
    j["r"] = r.r;
    j["gamma"] = r.gamma ? nlohmann::json(*r.gamma) : nlohmann::json(nullptr);
    j["idom"] = r.idom ? nlohmann::json(*r.idom) : nlohmann::json(nullptr);
    j["bound"] = r.bound ? nlohmann::json(*r.bound) : nlohmann::json(nullptr);
    j["holds"] = r.holds;
    j["exact"] = r.exact;
    j["star"] = r.star ? to_json(*r.star) : nlohmann::json(nullptr);
    return j;
}

} // namespace monogrid
