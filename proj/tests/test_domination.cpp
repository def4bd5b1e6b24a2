#include <doctest.h>

#include <numeric>
#include <random>

#include "monogrid/closed_forms.hpp"
#include "monogrid/domination.hpp"
#include "monogrid/errors.hpp"
#include "monogrid/mis.hpp"

using namespace monogrid;

namespace {

Graph complete_graph(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return import_graph(edges, n);
}

Graph double_star()
{
    const Graph g = build_graph(3, 4);
    const std::vector<ExponentVector> x = {{3, 0, 1}, {2, 2, 0}, {2, 1, 1}, {1, 1, 2}, {1, 0, 3}, {0, 2, 2}};
    return induced_subgraph(g, VertexSet::of_monomials(g, x));
}

void check_witnesses(const Graph& g, const DominationReport& r)
{
    REQUIRE(r.gamma);
    REQUIRE(r.idom);
    CHECK(r.gamma->witness.size() == r.gamma->value);
    CHECK(r.idom->witness.size() == r.idom->value);
    CHECK(is_dominating(g, r.gamma->witness));
    CHECK(is_dominating(g, r.idom->witness));
    CHECK(is_independent(g, r.idom->witness));
    CHECK(r.gamma->value <= r.idom->value);
}

} // namespace

TEST_CASE("k-domination predicate")
{
    const Graph g = build_graph(3, 12);
    const auto unique = construct_unique_mis_3(g);
    CHECK(is_k_dominating(g, unique, 2));
    CHECK_FALSE(is_k_dominating(g, unique, 3));
    for (std::size_t k = 1; k <= 5; ++k)
        CHECK(is_k_dominating(g, VertexSet::all_of(g), k));
    CHECK_FALSE(is_dominating(g, VertexSet::empty_of(g)));
}

TEST_CASE("small domination numbers")
{
    const Graph h = double_star();
    const auto r = solve_domination(h);
    CHECK(r.gamma->value == 2);
    CHECK(r.idom->value == 3);
    check_witnesses(h, r);

    const Graph single = build_graph(3, 0);
    CHECK(min_dominating_set(single).gamma->value == 1);

    const Graph p5 = build_graph(2, 4);
    CHECK(min_dominating_set(p5).gamma->value == 2);
    CHECK(min_independent_dominating_set(p5).idom->value == 2);

    for (std::size_t n = 1; n <= 7; ++n) {
        const auto k = solve_domination(complete_graph(n));
        CHECK(k.gamma->value == 1);
        CHECK(k.idom->value == 1);
    }
}

TEST_CASE("known values of gamma and i on triangular and tetrahedral grids")
{
    // independently confirmed with an integer program
    const std::size_t g3[] = {1, 1, 2, 3, 3, 5, 6, 7, 9, 10, 13};
    for (std::size_t d = 0; d <= 10; ++d) {
        const Graph g = build_graph(3, d);
        const auto r = solve_domination(g);
        CHECK(r.gamma->value == g3[d]);
        CHECK(r.idom->value == g3[d]);
        check_witnesses(g, r);
    }
    const std::size_t g4[] = {1, 1, 2, 4, 6};
    for (std::size_t d = 0; d <= 4; ++d) {
        const auto r = solve_domination(build_graph(4, d));
        CHECK(r.gamma->value == g4[d]);
        CHECK(r.idom->value == g4[d]);
    }
}

TEST_CASE("solver agrees with the exhaustive scan")
{
    std::mt19937_64 rng(99);
    std::vector<Graph> hosts;
    for (std::size_t d = 2; d <= 6; ++d)
        hosts.push_back(build_graph(3, d));
    hosts.push_back(build_graph(4, 3));
    hosts.push_back(build_graph(5, 2));
    for (int t = 0; t < 200; ++t) {
        const Graph& host = hosts[rng() % hosts.size()];
        std::vector<std::size_t> all(host.size());
        std::iota(all.begin(), all.end(), std::size_t{0});
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(1 + rng() % std::min<std::size_t>(18, host.size()));
        const Graph g = induced_subgraph(host, VertexSet::of(host, all));
        const auto fast = solve_domination(g);
        const auto slow = brute_force_domination(g);
        CHECK(fast.gamma->value == slow.gamma);
        CHECK(fast.idom->value == slow.idom);
        check_witnesses(g, fast);
        CHECK(fast.idom->value <= max_independent_set(g).objective);
    }
    CHECK_THROWS_AS(brute_force_domination(build_graph(3, 6)), capacity_error);
}

TEST_CASE("maximum independent sets dominate")
{
    for (auto [n, d] : {std::pair<std::size_t, std::size_t>{3, 6}, {3, 10}, {4, 3}, {5, 3}}) {
        const Graph g = build_graph(n, d);
        for (const auto& s : enumerate_maximum_independent_sets(g, 1000).witnesses)
            CHECK(is_dominating(g, s));
    }
}

TEST_CASE("unique optima are 2-dominating")
{
    for (std::size_t d : {0, 3, 9, 12, 15, 18}) {
        const Graph g = build_graph(3, d);
        CHECK(is_k_dominating(g, construct_unique_mis_3(g), 2));
    }
    for (std::size_t d : {0, 2, 4, 6, 8, 10}) {
        const Graph g = build_graph(4, d);
        CHECK(is_k_dominating(g, construct_unique_mis_4(g), 2));
    }
}

TEST_CASE("results do not depend on the worker count")
{
    for (std::size_t d : {7, 9}) {
        const Graph g = build_graph(3, d);
        DominationOptions one;
        const auto base = solve_domination(g, one);
        for (unsigned t : {2u, 8u}) {
            DominationOptions many;
            many.budget.threads = t;
            const auto r = solve_domination(g, many);
            CHECK(r.gamma->value == base.gamma->value);
            CHECK(r.idom->value == base.idom->value);
            CHECK(r.gamma->witness == base.gamma->witness);
            CHECK(r.idom->witness == base.idom->witness);
        }
    }
}

TEST_CASE("size policy and budgets")
{
    const Graph big = build_graph(3, 15);
    CHECK_THROWS_AS(min_dominating_set(big), capacity_error);

    DominationOptions tight;
    tight.budget.node_limit = 20;
    const Graph g = build_graph(3, 10);
    const auto r = min_dominating_set(g, tight);
    CHECK_FALSE(r.gamma->exact);
    CHECK(r.gamma->exhausted_budget.has_value());
    // an inexact value is still a genuine dominating set, so an upper bound
    CHECK(is_dominating(g, r.gamma->witness));
    CHECK(r.gamma->value >= 13);
}

TEST_CASE("wagon formula arithmetic")
{
    CHECK(wagon_gamma3(14) == 19);
    CHECK(wagon_gamma3(15) == 21);
    CHECK(wagon_gamma3(21) == 40);
    CHECK_THROWS_AS(wagon_gamma3(13), domain_error);
}

TEST_CASE("i/gamma bound for star-free graphs")
{
    const auto g32 = bollobas_cockayne_check(build_graph(3, 2), 2);
    CHECK_FALSE(g32.star.has_value());
    CHECK(g32.gamma == 2u);
    CHECK(g32.idom == 2u);
    CHECK(g32.holds);

    for (std::size_t d = 0; d <= 8; ++d) {
        const auto p = bollobas_cockayne_check(build_graph(2, d), 2);
        CHECK_FALSE(p.star.has_value());
        CHECK(p.holds);
    }
    const auto k = bollobas_cockayne_check(complete_graph(5), 2);
    CHECK(k.gamma == 1u);
    CHECK(k.idom == 1u);
    CHECK(k.bound == 1);
    CHECK(k.holds);

    // G_3(3) has an induced claw, so the bound does not apply
    const auto claw = bollobas_cockayne_check(build_graph(3, 3), 2);
    CHECK(claw.star.has_value());
    CHECK_THROWS_AS(bollobas_cockayne_check(build_graph(3, 2), 1), domain_error);
}

TEST_CASE("i = gamma checks")
{
    for (std::size_t n : {1, 2}) {
        for (std::size_t d = 0; d <= 8; ++d) {
            const auto r = check_igamma_conjecture(n, d);
            CHECK(r.status == VerdictStatus::consistent);
        }
    }
    CHECK(check_igamma_conjecture(3, 2).status == VerdictStatus::consistent);

    const auto refused = check_igamma_conjecture(3, 15);
    CHECK(refused.status == VerdictStatus::inconclusive);

    DominationOptions tight;
    tight.budget.node_limit = 5;
    CHECK(check_igamma_conjecture(3, 9, tight).status == VerdictStatus::inconclusive);
}

TEST_CASE("domination json")
{
    const Graph h = double_star();
    const auto j = to_json(h, solve_domination(h));
    CHECK(j["gamma"]["value"] == 2);
    CHECK(j["idom"]["value"] == 3);
}
