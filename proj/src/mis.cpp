#include "monogrid/mis.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <limits>
#include <mutex>
#include <set>

#include "monogrid/errors.hpp"
#include "search_support.hpp"

namespace monogrid {

namespace {

using detail::Rows;

/// Branch-and-bound for alpha over a residual vertex set. The incumbent is
/// shared (and only ever raised) so workers on disjoint subtrees prune
/// against each other.
class Maximizer {
public:
    Maximizer(const Rows& adj, BudgetGuard& guard, std::atomic<long long>& best) : adj_(adj), guard_(guard), best_(best)
    {
    }

    void run(Bitset residual, Bitset chosen, std::size_t chosen_count)
    {
        guard_.tick();
        // degree <= 1 vertices can always be taken into some optimum
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto v = residual.first(); v != Bitset::npos; v = residual.next(v)) {
                const std::size_t deg = adj_[v].and_count(residual);
                if (deg <= 1) {
                    residual.subtract(adj_[v]);
                    residual.reset(v);
                    chosen.set(v);
                    ++chosen_count;
                    changed = true;
                }
            }
        }
        if (residual.none()) {
            offer(chosen, chosen_count);
            return;
        }
        const long long best = best_.load(std::memory_order_relaxed);
        const std::size_t enough = best < static_cast<long long>(chosen_count)
                                       ? 0
                                       : static_cast<std::size_t>(best) - chosen_count + 1;
        if (enough > 0 && chosen_count + detail::clique_cover(adj_, residual, enough) <= static_cast<std::size_t>(best))
            return;
        const std::size_t v = detail::branch_vertex(adj_, residual);
        {
            Bitset inc = residual;
            inc.subtract(adj_[v]);
            inc.reset(v);
            Bitset with = chosen;
            with.set(v);
            run(std::move(inc), std::move(with), chosen_count + 1);
        }
        residual.reset(v);
        run(std::move(residual), std::move(chosen), chosen_count);
    }

    std::optional<Bitset> incumbent() const
    {
        std::lock_guard lock(mutex_);
        return incumbent_;
    }

private:
    void offer(const Bitset& chosen, std::size_t size)
    {
        const auto s = static_cast<long long>(size);
        long long cur = best_.load();
        while (s > cur) {
            if (best_.compare_exchange_weak(cur, s)) {
                std::lock_guard lock(mutex_);
                if (!incumbent_ || incumbent_->count() < size)
                    incumbent_ = chosen;
                return;
            }
        }
    }

    const Rows& adj_;
    BudgetGuard& guard_;
    std::atomic<long long>& best_;
    mutable std::mutex mutex_;
    std::optional<Bitset> incumbent_;
};

struct Tally {
    BigCount count = 0;
    Bitset first;
};

/// Counts independent sets of exact size `need` inside a residual set R,
/// relying on need >= alpha(R) (every caller guarantees it), so these are
/// exactly the maximum independent sets of G[R] when need == alpha(R).
class Counter {
public:
    Counter(const Rows& adj, BudgetGuard& guard, bool find_only) : adj_(adj), guard_(guard), find_only_(find_only) {}

    Tally count(const Bitset& residual, std::size_t need)
    {
        guard_.tick();
        const std::size_t width = residual.width();
        if (need == 0)
            return {1, Bitset(width)};
        if (residual.count() < need)
            return {0, Bitset(width)};

        Bitset forced(width);
        residual.for_each([&](std::size_t v) {
            if (!adj_[v].intersects(residual))
                forced.set(v);
        });
        if (forced.any()) {
            const std::size_t k = forced.count();
            if (k > need)
                return {0, Bitset(width)};
            Tally t = count(residual - forced, need - k);
            t.first |= forced;
            return t;
        }
        if (detail::clique_cover(adj_, residual, need) < need)
            return {0, Bitset(width)};

        auto comps = detail::components(adj_, residual);
        if (comps.size() > 1)
            return count_components(std::move(comps), need);

        const std::size_t v = detail::branch_vertex(adj_, residual);
        Bitset inc = residual;
        inc.subtract(adj_[v]);
        inc.reset(v);
        Tally with = count(inc, need - 1);
        if (with.count > 0)
            with.first.set(v);
        if (find_only_ && with.count > 0)
            return with;
        Bitset exc = residual;
        exc.reset(v);
        Tally without = count(exc, need);
        if (with.count == 0)
            return without;
        with.count += without.count;
        return with;
    }

private:
    Tally count_components(std::vector<Bitset> comps, std::size_t need)
    {
        const std::size_t width = comps.front().width();
        std::stable_sort(comps.begin(), comps.end(),
                         [](const Bitset& a, const Bitset& b) { return a.count() < b.count(); });
        std::vector<std::size_t> bound(comps.size());
        std::size_t bound_sum = 0;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            bound[i] = detail::clique_cover(adj_, comps[i], std::numeric_limits<std::size_t>::max());
            bound_sum += bound[i];
        }
        if (bound_sum < need)
            return {0, Bitset(width)};
        // replace each bound by the component's exact alpha, failing early
        // as soon as the remaining bounds cannot reach `need`
        for (std::size_t i = 0; i < comps.size(); ++i) {
            const std::size_t others = bound_sum - bound[i];
            const long long floor = static_cast<long long>(need) - static_cast<long long>(others);
            std::atomic<long long> best{std::max(floor, 1LL) - 1};
            Maximizer m(adj_, guard_, best);
            m.run(comps[i], Bitset(width), 0);
            const auto alpha = static_cast<std::size_t>(best.load());
            if (static_cast<long long>(alpha) < floor)
                return {0, Bitset(width)};
            bound_sum = others + alpha;
            bound[i] = alpha;
        }
        if (bound_sum != need)
            return {0, Bitset(width)};
        Tally out{1, Bitset(width)};
        for (std::size_t i = 0; i < comps.size(); ++i) {
            Tally t = count(comps[i], bound[i]);
            if (t.count == 0)
                return {0, Bitset(width)};
            out.count *= t.count;
            out.first |= t.first;
        }
        return out;
    }

    const Rows& adj_;
    BudgetGuard& guard_;
    bool find_only_;
};

class Enumerator {
public:
    Enumerator(const Rows& adj, BudgetGuard& guard, std::size_t cap, std::vector<Bitset>& out)
        : adj_(adj), guard_(guard), cap_(cap), out_(out)
    {
    }

    void run(Bitset residual, Bitset chosen, std::size_t need)
    {
        guard_.tick();
        if (out_.size() >= cap_)
            return;
        if (need == 0) {
            out_.push_back(std::move(chosen));
            return;
        }
        if (residual.count() < need)
            return;
        Bitset forced(residual.width());
        residual.for_each([&](std::size_t v) {
            if (!adj_[v].intersects(residual))
                forced.set(v);
        });
        if (forced.any()) {
            const std::size_t k = forced.count();
            if (k > need)
                return;
            residual.subtract(forced);
            chosen |= forced;
            run(std::move(residual), std::move(chosen), need - k);
            return;
        }
        if (detail::clique_cover(adj_, residual, need) < need)
            return;
        const std::size_t v = detail::branch_vertex(adj_, residual);
        Bitset inc = residual;
        inc.subtract(adj_[v]);
        inc.reset(v);
        Bitset with = chosen;
        with.set(v);
        run(std::move(inc), std::move(with), need - 1);
        residual.reset(v);
        run(std::move(residual), std::move(chosen), need);
    }

private:
    const Rows& adj_;
    BudgetGuard& guard_;
    std::size_t cap_;
    std::vector<Bitset>& out_;
};

/// Greedy minimum-degree independent set; a quick incumbent.
Bitset greedy_independent_set(const Rows& adj, std::size_t width)
{
    Bitset residual = Bitset::full(width);
    Bitset chosen(width);
    while (residual.any()) {
        std::size_t pick = Bitset::npos;
        std::size_t pick_deg = std::numeric_limits<std::size_t>::max();
        residual.for_each([&](std::size_t v) {
            const std::size_t deg = adj[v].and_count(residual);
            if (deg < pick_deg) {
                pick_deg = deg;
                pick = v;
            }
        });
        chosen.set(pick);
        residual.subtract(adj[pick]);
        residual.reset(pick);
    }
    return chosen;
}

struct AlphaPhase {
    std::size_t alpha = 0;
    Bitset incumbent;
};

AlphaPhase solve_alpha(const Rows& adj, std::size_t width, const std::vector<detail::Task>& tasks, BudgetGuard& guard,
                       unsigned threads, AlphaPhase& progress)
{
    progress.incumbent = greedy_independent_set(adj, width);
    progress.alpha = progress.incumbent.count();
    std::atomic<long long> best{static_cast<long long>(progress.alpha)};
    Maximizer m(adj, guard, best);
    try {
        parallel_for(tasks.size(), threads,
                     [&](std::size_t i) { m.run(tasks[i].residual, tasks[i].chosen, tasks[i].chosen_count); });
    } catch (const budget_exhausted&) {
        if (auto inc = m.incumbent(); inc && inc->count() > progress.alpha) {
            progress.incumbent = *inc;
            progress.alpha = inc->count();
        }
        throw;
    }
    if (auto inc = m.incumbent(); inc && inc->count() > progress.alpha)
        return {inc->count(), *inc};
    return progress;
}

/// Sum of per-task tallies; the witness is the first solution of the
/// lowest-index task that has one.
Tally solve_count(const Rows& adj, std::size_t width, const std::vector<detail::Task>& tasks, std::size_t alpha,
                  BudgetGuard& guard, unsigned threads, bool find_only)
{
    std::vector<Tally> results(tasks.size());
    std::atomic<std::size_t> found_at{std::numeric_limits<std::size_t>::max()};
    parallel_for(tasks.size(), threads, [&](std::size_t i) {
        const auto& t = tasks[i];
        results[i] = {0, Bitset(width)};
        if (t.chosen_count > alpha)
            return;
        if (find_only && found_at.load() < i)
            return;
        Counter c(adj, guard, find_only);
        results[i] = c.count(t.residual, alpha - t.chosen_count);
        if (results[i].count > 0) {
            results[i].first |= t.chosen;
            std::size_t cur = found_at.load();
            while (i < cur && !found_at.compare_exchange_weak(cur, i)) {
            }
        }
    });
    Tally total{0, Bitset(width)};
    for (auto& r : results) {
        if (r.count == 0)
            continue;
        if (total.count == 0)
            total.first = r.first;
        total.count += r.count;
        if (find_only)
            break;
    }
    return total;
}

enum class Mode { witness, count, enumerate };

SolveReport run_solver(const Graph& g, const Budget& budget, Mode mode, std::size_t cap)
{
    SolveReport report;
    BudgetGuard guard(budget);
    const Rows& adj = g.adjacency();
    const std::size_t width = g.size();
    const unsigned threads = std::max(1u, budget.threads);
    const auto tasks = detail::make_frontier(adj, width);

    AlphaPhase progress;
    bool alpha_done = false;
    try {
        const AlphaPhase phase = solve_alpha(adj, width, tasks, guard, threads, progress);
        report.objective = phase.alpha;
        progress = phase;
        alpha_done = true;
        const Tally tally = solve_count(adj, width, tasks, phase.alpha, guard, threads, mode == Mode::witness);
        if (tally.count == 0)
            throw validation_error("counting phase found no set of size alpha");
        if (mode != Mode::witness)
            report.count = tally.count;
        if (mode == Mode::enumerate) {
            std::vector<Bitset> sets;
            for (const auto& t : tasks) {
                if (sets.size() >= cap)
                    break;
                if (t.chosen_count > phase.alpha)
                    continue;
                Enumerator e(adj, guard, cap, sets);
                e.run(t.residual, t.chosen, phase.alpha - t.chosen_count);
            }
            for (const auto& s : sets)
                report.witnesses.push_back(VertexSet::of(g, s));
            std::sort(report.witnesses.begin(), report.witnesses.end());
            report.witnesses_complete = BigCount(report.witnesses.size()) == tally.count;
        } else {
            report.witnesses.push_back(VertexSet::of(g, tally.first));
        }
    } catch (const budget_exhausted& e) {
        report.exact = false;
        report.objective_exact = alpha_done;
        report.exhausted_budget = e.what;
        report.objective = progress.alpha;
        report.count.reset();
        report.witnesses.clear();
        if (width > 0)
            report.witnesses.push_back(VertexSet::of(g, progress.incumbent));
        report.witnesses_complete = false;
    }
    report.nodes_explored = guard.nodes();
    report.elapsed = guard.elapsed();
    return report;
}

void brute_force(const Graph& g, std::size_t v, std::uint32_t blocked, std::size_t size, std::size_t& best,
                 std::uint64_t& count, std::uint64_t& nodes)
{
    ++nodes;
    if (v == g.size()) {
        if (size > best) {
            best = size;
            count = 1;
        } else if (size == best) {
            ++count;
        }
        return;
    }
    brute_force(g, v + 1, blocked, size, best, count, nodes);
    if (!(blocked >> v & 1u)) {
        std::uint32_t nb = 0;
        g.neighbors(v).for_each([&](std::size_t u) { nb |= std::uint32_t{1} << u; });
        brute_force(g, v + 1, blocked | nb, size + 1, best, count, nodes);
    }
}

} // namespace

bool is_independent(const Graph& g, const VertexSet& s)
{
    const Bitset bits = s.bits(g);
    for (auto v : s.members())
        if (g.neighbors(v).intersects(bits))
            return false;
    return true;
}

SolveReport max_independent_set(const Graph& g, const Budget& budget)
{
    return run_solver(g, budget, Mode::witness, 0);
}

SolveReport count_maximum_independent_sets(const Graph& g, const Budget& budget)
{
    return run_solver(g, budget, Mode::count, 0);
}

SolveReport enumerate_maximum_independent_sets(const Graph& g, std::size_t cap, const Budget& budget)
{
    if (cap == 0)
        throw domain_error("enumeration cap must be at least 1");
    return run_solver(g, budget, Mode::enumerate, cap);
}

SolveReport brute_force_alpha(const Graph& g)
{
    if (g.size() > brute_force_vertex_limit)
        throw capacity_error("brute-force oracle is limited to " + std::to_string(brute_force_vertex_limit) +
                             " vertices, graph has " + std::to_string(g.size()));
    const auto start = std::chrono::steady_clock::now();
    std::size_t best = 0;
    std::uint64_t count = 0;
    std::uint64_t nodes = 0;
    brute_force(g, 0, 0, 0, best, count, nodes);
    SolveReport r;
    r.objective = best;
    r.count = count;
    r.nodes_explored = nodes;
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

Graph import_graph(const std::vector<std::pair<std::size_t, std::size_t>>& edges, std::size_t vertex_count)
{
    std::vector<Bitset> adj(vertex_count, Bitset(vertex_count));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count)
            throw format_error("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") outside " +
                               std::to_string(vertex_count) + " vertices");
        if (u == v)
            throw format_error("self-loop at vertex " + std::to_string(u));
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
            throw format_error("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        adj[u].set(v);
        adj[v].set(u);
    }
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(vertex_count);
    for (auto [u, v] : seen) {
        mix(u);
        mix(v);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return Graph("import:" + std::to_string(vertex_count) + ":" + buf, std::move(adj));
}

std::string to_decimal(const BigCount& c)
{
    return c.str();
}

nlohmann::json vertex_set_json(const Graph& g, const VertexSet& s)
{
    s.check_owner(g);
    nlohmann::json arr = nlohmann::json::array();
    if (!g.labels().empty()) {
        for (auto m : s.members())
            arr.push_back(g.label(m).exponents());
    } else {
        for (auto m : s.members())
            arr.push_back(m);
    }
    return arr;
}

nlohmann::json to_json(const Graph& g, const SolveReport& report)
{
    nlohmann::json j;
    j["graph"] = g.tag();
    j["objective"] = report.objective;
    j["objective_exact"] = report.objective_exact;
    j["count"] = report.count ? nlohmann::json(to_decimal(*report.count)) : nlohmann::json(nullptr);
    nlohmann::json w = nlohmann::json::array();
    for (const auto& s : report.witnesses)
        w.push_back(vertex_set_json(g, s));
    j["witnesses"] = std::move(w);
    j["witnesses_complete"] = report.witnesses_complete;
    j["nodes"] = report.nodes_explored;
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(report.elapsed).count();
    j["exact"] = report.exact;
    if (report.exhausted_budget)
        j["exhausted_budget"] = *report.exhausted_budget;
    return j;
}

} // namespace monogrid
