#pragma once

// Shared pieces of the bit-row branch-and-bound searches.

#include <cstddef>
#include <vector>

#include "monogrid/bitset.hpp"

namespace monogrid::detail {

using Rows = std::vector<Bitset>;

/// Number of cliques in a greedy clique cover of G[R] (lowest index first),
/// an upper bound on alpha(G[R]). Stops once `enough` cliques are counted.
inline std::size_t clique_cover(const Rows& adj, const Bitset& residual, std::size_t enough)
{
    Bitset pool = residual;
    std::size_t cliques = 0;
    while (cliques < enough) {
        const std::size_t v = pool.first();
        if (v == Bitset::npos)
            break;
        pool.reset(v);
        Bitset cand = pool & adj[v];
        while (cand.any()) {
            const std::size_t u = cand.first();
            pool.reset(u);
            cand &= adj[u];
        }
        ++cliques;
    }
    return cliques;
}

/// Maximum degree vertex within R; lowest index on ties.
inline std::size_t branch_vertex(const Rows& adj, const Bitset& residual)
{
    std::size_t best = Bitset::npos;
    std::size_t best_deg = 0;
    residual.for_each([&](std::size_t v) {
        const std::size_t deg = adj[v].and_count(residual);
        if (best == Bitset::npos || deg > best_deg) {
            best = v;
            best_deg = deg;
        }
    });
    return best;
}

/// Connected components of G[R], ordered by lowest member.
inline std::vector<Bitset> components(const Rows& adj, const Bitset& residual)
{
    std::vector<Bitset> out;
    Bitset left = residual;
    while (left.any()) {
        Bitset comp(residual.width());
        Bitset frontier(residual.width());
        frontier.set(left.first());
        while (frontier.any()) {
            comp |= frontier;
            left.subtract(frontier);
            Bitset grow(residual.width());
            frontier.for_each([&](std::size_t u) { grow |= adj[u]; });
            grow &= left;
            frontier = std::move(grow);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

struct Task {
    Bitset residual;
    Bitset chosen;
    std::size_t chosen_count = 0;
};

/// Top of the include/exclude branching tree, expanded level by level up to
/// `depth` levels. Depends only on the graph, so every worker count sees the
/// same task list in the same (depth-first) order.
inline std::vector<Task> make_frontier(const Rows& adj, std::size_t width, std::size_t depth = 6)
{
    std::vector<Task> tasks{Task{Bitset::full(width), Bitset(width), 0}};
    for (std::size_t level = 0; level < depth; ++level) {
        std::vector<Task> next;
        next.reserve(tasks.size() * 2);
        for (auto& t : tasks) {
            if (t.residual.none()) {
                next.push_back(std::move(t));
                continue;
            }
            const std::size_t v = branch_vertex(adj, t.residual);
            Task inc{t.residual, t.chosen, t.chosen_count + 1};
            inc.residual.subtract(adj[v]);
            inc.residual.reset(v);
            inc.chosen.set(v);
            next.push_back(std::move(inc));
            t.residual.reset(v);
            next.push_back(std::move(t));
        }
        tasks = std::move(next);
    }
    return tasks;
}

} // namespace monogrid::detail
