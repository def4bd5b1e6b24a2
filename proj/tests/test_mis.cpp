#include <doctest.h>

#include <numeric>
#include <random>

#include "monogrid/errors.hpp"
#include "monogrid/graph.hpp"
#include "monogrid/mis.hpp"

using namespace monogrid;

namespace {

Budget threads(unsigned t)
{
    Budget b;
    b.threads = t;
    return b;
}

Graph random_induced(std::mt19937_64& rng, const Graph& host, std::size_t max_size)
{
    std::vector<std::size_t> all(host.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(1 + rng() % std::min(max_size, host.size()));
    return induced_subgraph(host, VertexSet::of(host, all));
}

BigCount count_of(std::size_t n, std::size_t d)
{
    return *count_maximum_independent_sets(build_graph(n, d)).count;
}

} // namespace

TEST_CASE("independence predicate")
{
    const Graph g = build_graph(3, 2);
    const std::vector<ExponentVector> squares = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
    CHECK(is_independent(g, VertexSet::of_monomials(g, squares)));
    CHECK(is_independent(g, VertexSet::empty_of(g)));
    const std::vector<ExponentVector> edge = {{2, 0, 0}, {1, 1, 0}};
    CHECK_FALSE(is_independent(g, VertexSet::of_monomials(g, edge)));
}

TEST_CASE("independence numbers")
{
    CHECK(max_independent_set(build_graph(3, 6)).objective == 10);
    CHECK(max_independent_set(build_graph(3, 12)).objective == 31);
    CHECK(max_independent_set(build_graph(4, 8)).objective == 45);
}

TEST_CASE("counts of maximum independent sets")
{
    CHECK(count_of(3, 6) == 2);
    const int a4[] = {1, 4, 1, 80, 1, 944, 1};
    for (std::size_t d = 0; d < 7; ++d)
        CHECK(count_of(4, d) == a4[d]);
    const int a5[] = {1, 5, 1, 705, 5};
    for (std::size_t d = 0; d < 5; ++d)
        CHECK(count_of(5, d) == a5[d]);
    // path on 2k vertices has k + 1 maximum independent sets
    for (std::size_t k = 1; k <= 6; ++k)
        CHECK(count_of(2, 2 * k - 1) == k + 1);
}

TEST_CASE("enumeration")
{
    const Graph g6 = build_graph(3, 6);
    const auto two = enumerate_maximum_independent_sets(g6, 10);
    CHECK(two.witnesses.size() == 2);
    CHECK(two.witnesses_complete);
    CHECK(two.witnesses[0] < two.witnesses[1]);
    CHECK(two.witnesses[0] != two.witnesses[1]);

    for (std::size_t n = 1; n <= 4; ++n) {
        const auto one = enumerate_maximum_independent_sets(build_graph(n, 0), 10);
        CHECK(one.witnesses.size() == 1);
    }

    const Graph g10 = build_graph(3, 10);
    const auto all = enumerate_maximum_independent_sets(g10, 50);
    CHECK(all.witnesses.size() == 27);
    CHECK(*all.count == 27);
    for (std::size_t i = 1; i < all.witnesses.size(); ++i)
        CHECK(all.witnesses[i - 1] < all.witnesses[i]);

    const auto some = enumerate_maximum_independent_sets(g10, 5);
    CHECK(some.witnesses.size() == 5);
    CHECK_FALSE(some.witnesses_complete);
    CHECK(*some.count == 27);

    CHECK_THROWS_AS(enumerate_maximum_independent_sets(g10, 0), domain_error);
}

TEST_CASE("complete enumeration length equals the count")
{
    for (auto [n, d] : {std::pair<std::size_t, std::size_t>{3, 7}, {3, 8}, {4, 3}, {4, 5}, {5, 3}, {6, 3}}) {
        const Graph g = build_graph(n, d);
        const auto e = enumerate_maximum_independent_sets(g, 5000);
        REQUIRE(e.witnesses_complete);
        CHECK(BigCount(e.witnesses.size()) == *e.count);
        for (const auto& w : e.witnesses) {
            CHECK(is_independent(g, w));
            CHECK(w.size() == e.objective);
        }
    }
}

TEST_CASE("brute-force oracle")
{
    auto check = [](const Graph& g, std::size_t alpha, int count) {
        const auto r = brute_force_alpha(g);
        CHECK(r.objective == alpha);
        CHECK(*r.count == count);
    };
    check(build_graph(3, 2), 3, 1);
    check(build_graph(2, 5), 3, 4);
    for (std::size_t n = 1; n <= 5; ++n)
        check(build_graph(n, 1), 1, static_cast<int>(n));
    CHECK_THROWS_AS(brute_force_alpha(build_graph(3, 6)), capacity_error);
}

TEST_CASE("solver agrees with the oracle on random induced subgraphs")
{
    std::mt19937_64 rng(12345);
    std::vector<Graph> hosts;
    for (std::size_t d = 0; d <= 6; ++d)
        hosts.push_back(build_graph(3, d));
    for (int t = 0; t < 200; ++t) {
        const Graph& host = hosts[rng() % hosts.size()];
        const Graph g = random_induced(rng, host, 20);
        const auto fast = count_maximum_independent_sets(g);
        const auto slow = brute_force_alpha(g);
        CHECK(fast.objective == slow.objective);
        CHECK(*fast.count == *slow.count);
        const auto& w = fast.witnesses.front();
        CHECK(w.size() == fast.objective);
        CHECK(is_independent(g, w));
        // maximality: every outside vertex has a neighbor in the witness
        const Bitset bits = w.bits(g);
        for (std::size_t v = 0; v < g.size(); ++v)
            if (!bits.test(v))
                CHECK(g.neighbors(v).intersects(bits));
    }
}

TEST_CASE("results do not depend on the worker count")
{
    for (auto [n, d] : {std::pair<std::size_t, std::size_t>{3, 10}, {4, 5}, {4, 6}, {5, 3}}) {
        const Graph g = build_graph(n, d);
        const auto one = count_maximum_independent_sets(g, threads(1));
        for (unsigned t : {2u, 8u}) {
            const auto many = count_maximum_independent_sets(g, threads(t));
            CHECK(many.objective == one.objective);
            CHECK(*many.count == *one.count);
            CHECK(many.witnesses == one.witnesses);
            CHECK(max_independent_set(g, threads(t)).witnesses == max_independent_set(g, threads(1)).witnesses);
        }
    }
}

TEST_CASE("alpha of triangular grids never decreases")
{
    std::size_t prev = 0;
    for (std::size_t d = 0; d <= 12; ++d) {
        const auto a = max_independent_set(build_graph(3, d)).objective;
        CHECK(a >= prev);
        prev = a;
    }
}

TEST_CASE("imported graphs")
{
    auto solve = [](std::vector<std::pair<std::size_t, std::size_t>> edges, std::size_t v) {
        return count_maximum_independent_sets(import_graph(edges, v));
    };
    const auto tri = solve({{0, 1}, {1, 2}, {0, 2}}, 3);
    CHECK(tri.objective == 1);
    CHECK(*tri.count == 3);
    const auto c6 = solve({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}, 6);
    CHECK(c6.objective == 3);
    CHECK(*c6.count == 2);
    const auto empty = solve({}, 4);
    CHECK(empty.objective == 4);
    CHECK(*empty.count == 1);

    CHECK_THROWS_AS(import_graph({{0, 0}}, 2), format_error);
    CHECK_THROWS_AS(import_graph({{0, 1}, {1, 0}}, 2), format_error);
    CHECK_THROWS_AS(import_graph({{0, 5}}, 2), format_error);
}

TEST_CASE("exhausted budgets are reported, never guessed")
{
    const Graph g = build_graph(4, 7);
    Budget b;
    b.node_limit = 50;
    const auto r = count_maximum_independent_sets(g, b);
    CHECK_FALSE(r.exact);
    CHECK_FALSE(r.count.has_value());
    REQUIRE(r.exhausted_budget.has_value());
    CHECK(r.exhausted_budget->find("node") != std::string::npos);
    // the incumbent is still a genuine independent set
    REQUIRE(r.witnesses.size() == 1);
    CHECK(is_independent(g, r.witnesses.front()));
    CHECK(r.witnesses.front().size() == r.objective);
    CHECK(r.objective <= 30);

    Budget t;
    t.time_limit = std::chrono::milliseconds(1);
    const auto timed = count_maximum_independent_sets(build_graph(5, 6), t);
    CHECK_FALSE(timed.exact);
    REQUIRE(timed.exhausted_budget.has_value());
}

TEST_CASE("alpha can be settled while the count is not")
{
    const Graph g = build_graph(4, 7);
    const auto full = count_maximum_independent_sets(g);
    Budget b;
    b.node_limit = max_independent_set(g).nodes_explored + 10;
    const auto partial = count_maximum_independent_sets(g, b);
    CHECK_FALSE(partial.exact);
    CHECK(partial.objective_exact);
    CHECK(partial.objective == full.objective);
    CHECK(partial.nodes_explored <= *b.node_limit + 1);
    CHECK(full.objective == 30);
    CHECK(*full.count == 3836);
}

TEST_CASE("json report")
{
    const Graph g = build_graph(3, 2);
    const auto j = to_json(g, count_maximum_independent_sets(g));
    CHECK(j["objective"] == 3);
    CHECK(j["count"] == "1");
    CHECK(j["exact"] == true);
    CHECK(j["graph"] == "G_3(2)");
    CHECK(j["witnesses"][0].size() == 3);
    CHECK(j["witnesses"][0][0] == nlohmann::json::array({2, 0, 0}));
}
