#include <doctest.h>

#include <random>

#include "monogrid/errors.hpp"
#include "monogrid/graph.hpp"
#include "monogrid/mis.hpp"

using namespace monogrid;

namespace {

std::size_t binom(std::size_t n, std::size_t k)
{
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

bool same_edges_under(const Graph& a, const Graph& b, const std::vector<std::size_t>& map)
{
    return a.size() == b.size() && is_isomorphism(a, b, map);
}

} // namespace

TEST_CASE("monomials of G_3(2) in canonical order")
{
    const auto m = enumerate_monomials(3, 2);
    REQUIRE(m.size() == 6);
    const std::vector<std::string> names = {"x1^2", "x1x2", "x1x3", "x2^2", "x2x3", "x3^2"};
    for (std::size_t i = 0; i < m.size(); ++i)
        CHECK(m[i].to_monomial_string() == names[i]);
    CHECK(m[0].to_plain_string() == "2 0 0");
}

TEST_CASE("degree zero gives the empty product")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto m = enumerate_monomials(n, 0);
        REQUIRE(m.size() == 1);
        CHECK(m[0].degree() == 0);
        CHECK(m[0].variables() == n);
        CHECK(m[0].to_monomial_string() == "1");
    }
}

TEST_CASE("vertex counts are binomials")
{
    CHECK(enumerate_monomials(4, 8).size() == 165);
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t d = 0; d <= 10; ++d) {
            CHECK(monomial_count(n, d) == binom(n + d - 1, n - 1));
            CHECK(build_graph(n, d).size() == binom(n + d - 1, n - 1));
        }
}

TEST_CASE("enumeration is strictly decreasing")
{
    const auto m = enumerate_monomials(4, 6);
    for (std::size_t i = 1; i < m.size(); ++i)
        CHECK(m[i - 1] > m[i]);
}

TEST_CASE("size cap and domain errors")
{
    CHECK_THROWS_AS(enumerate_monomials(4, 8, 100), capacity_error);
    CHECK_THROWS_AS(build_graph(6, 10, BuildOptions{1000}), capacity_error);
    CHECK_THROWS_AS(enumerate_monomials(0, 3), domain_error);
    try {
        build_graph(4, 8, BuildOptions{100});
        FAIL("expected capacity_error");
    } catch (const capacity_error& e) {
        CHECK(std::string(e.what()).find("100") != std::string::npos);
    }
}

TEST_CASE("adjacency examples")
{
    const ExponentVector x1sq{2, 0, 0}, x1x2{1, 1, 0}, x2sq{0, 2, 0};
    CHECK(adjacent(x1sq, x1x2));
    CHECK_FALSE(adjacent(x1sq, x1sq));
    CHECK_FALSE(adjacent(x1sq, x2sq));
    CHECK_THROWS_AS(adjacent(ExponentVector{1, 1}, ExponentVector{1, 0, 1}), shape_error);
    CHECK_THROWS_AS(adjacent(ExponentVector{2, 0}, ExponentVector{1, 0}), shape_error);
}

TEST_CASE("lcm and L1 criteria agree on random pairs")
{
    std::mt19937_64 rng(7);
    for (auto [n, d] : {std::pair<std::size_t, std::size_t>{2, 5}, {3, 6}, {4, 5}, {5, 4}, {6, 3}}) {
        const auto m = enumerate_monomials(n, d);
        for (int t = 0; t < 1000; ++t) {
            const auto& f = m[rng() % m.size()];
            const auto& g = m[rng() % m.size()];
            CHECK(adjacent_by_lcm(f, g) == adjacent_by_l1(f, g));
        }
    }
}

TEST_CASE("small graphs have the expected shape")
{
    const Graph g32 = build_graph(3, 2);
    CHECK(g32.size() == 6);
    CHECK(g32.edge_count() == 9);
    CHECK(g32.tag() == "G_3(2)");

    for (std::size_t d = 0; d <= 8; ++d) {
        const Graph p = build_graph(2, d);
        CHECK(p.edge_count() == d);
        for (std::size_t v = 0; v + 1 < p.size(); ++v)
            CHECK(p.has_edge(v, v + 1));
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        const Graph k = build_graph(n, 1);
        CHECK(k.edge_count() == n * (n - 1) / 2);
    }
}

TEST_CASE("adjacency is symmetric, irreflexive and matches L1 distance")
{
    for (auto [n, d] : {std::pair<std::size_t, std::size_t>{3, 5}, {4, 4}, {5, 3}}) {
        const Graph g = build_graph(n, d);
        for (std::size_t u = 0; u < g.size(); ++u) {
            CHECK_FALSE(g.has_edge(u, u));
            for (std::size_t v = 0; v < g.size(); ++v) {
                CHECK(g.has_edge(u, v) == g.has_edge(v, u));
                if (u != v)
                    CHECK(g.has_edge(u, v) == adjacent_by_l1(g.label(u), g.label(v)));
            }
        }
    }
}

TEST_CASE("builds are deterministic")
{
    CHECK(build_graph(4, 6) == build_graph(4, 6));
    CHECK(build_graph(3, 9).adjacency() == build_graph(3, 9).adjacency());
}

TEST_CASE("slices are copies of smaller grids")
{
    for (std::size_t n = 3; n <= 5; ++n) {
        for (std::size_t d = 0; d <= 8; ++d) {
            const Graph g = build_graph(n, d);
            for (std::size_t var = 1; var <= n; ++var) {
                for (std::size_t e = 0; e <= d; ++e) {
                    const Slice s = slice(g, var, e);
                    const Graph target = build_graph(n - 1, d - e);
                    REQUIRE(s.induced.size() == target.size());
                    std::vector<std::size_t> map(s.induced.size());
                    for (std::size_t i = 0; i < map.size(); ++i)
                        map[i] = target.require_index(s.relabeled[i]);
                    CHECK(same_edges_under(s.induced, target, map));
                }
            }
        }
    }
}

TEST_CASE("slice edge cases")
{
    const Graph g = build_graph(4, 8);
    const std::vector<std::size_t> sizes = {1, 3, 6, 10, 15, 21, 28, 36, 45};
    for (std::size_t a = 0; a <= 8; ++a)
        CHECK(slice(g, 1, 8 - a).members.size() == sizes[a]);
    const Slice top = slice(g, 2, 8);
    REQUIRE(top.members.size() == 1);
    CHECK(g.label(top.members.members()[0]) == ExponentVector{0, 8, 0, 0});
    CHECK_THROWS_AS(slice(g, 0, 1), index_error);
    CHECK_THROWS_AS(slice(g, 5, 1), index_error);
    CHECK_THROWS_AS(slice(g, 1, 9), index_error);
}

TEST_CASE("induced subgraphs")
{
    const Graph g = build_graph(3, 4);
    CHECK(induced_subgraph(g, VertexSet::all_of(g)) == g);
    const Graph empty = induced_subgraph(g, VertexSet::empty_of(g));
    CHECK(empty.size() == 0);

    const std::vector<ExponentVector> x = {{3, 0, 1}, {2, 2, 0}, {2, 1, 1}, {1, 1, 2}, {1, 0, 3}, {0, 2, 2}};
    const Graph h = induced_subgraph(g, VertexSet::of_monomials(g, x));
    CHECK(h.size() == 6);
    // a double star: x1^2x2x3 and x1x2x3^2 joined, with two leaves each
    CHECK(h.edge_count() == 5);
    std::vector<std::size_t> degrees;
    for (std::size_t v = 0; v < h.size(); ++v)
        degrees.push_back(h.degree(v));
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<std::size_t>{1, 1, 1, 1, 3, 3});
}

TEST_CASE("vertex sets remember their graph")
{
    const Graph a = build_graph(3, 3);
    const Graph b = build_graph(3, 4);
    const auto s = VertexSet::of(a, std::vector<std::size_t>{0, 1});
    CHECK_THROWS_AS(s.check_owner(b), identity_error);
    CHECK_THROWS_AS(is_independent(b, s), identity_error);
    CHECK_THROWS_AS(VertexSet::of(a, std::vector<std::size_t>{99}), index_error);
}

TEST_CASE("deleting the outer rows leaves smaller triangles")
{
    for (std::size_t d = 2; d <= 9; ++d) {
        const Graph g = build_graph(3, d);
        CHECK(delete_vertices(g, VertexSet::empty_of(g)).adjacency() == g.adjacency());

        std::vector<ExponentVector> x, xy;
        for (std::size_t i = 0; i <= d; ++i) {
            x.push_back({0, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(d - i)});
            xy.push_back(x.back());
        }
        for (std::size_t i = 0; i < d; ++i)
            xy.push_back({1, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(d - 1 - i)});

        for (auto [set, drop] : {std::pair{&x, 1u}, std::pair{&xy, 2u}}) {
            const Graph rest = delete_vertices(g, VertexSet::of_monomials(g, *set));
            const Graph target = build_graph(3, d - drop);
            const auto map = label_map(rest, target, [drop](const ExponentVector& v) {
                auto e = v.exponents();
                e[0] -= drop;
                return ExponentVector(e);
            });
            REQUIRE(map);
            CHECK(rest.size() == target.size());
            CHECK(is_isomorphism(rest, target, *map));
        }
    }
}

TEST_CASE("rim layers")
{
    auto sizes = [](std::size_t a) {
        std::vector<std::size_t> out;
        for (const auto& l : rim_cycle_decomposition(build_graph(3, a)))
            out.push_back(l.members.size());
        return out;
    };
    CHECK(sizes(6) == std::vector<std::size_t>{18, 9, 1});
    CHECK(sizes(4) == std::vector<std::size_t>{12, 3});
    const auto zero = rim_cycle_decomposition(build_graph(3, 0));
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].degenerate);

    for (std::size_t a = 0; a <= 15; ++a) {
        const Graph g = build_graph(3, a);
        const auto layers = rim_cycle_decomposition(g);
        Bitset seen(g.size());
        for (const auto& l : layers) {
            const Bitset bits = l.members.bits(g);
            CHECK_FALSE(seen.intersects(bits));
            seen |= bits;
            if (l.degenerate) {
                CHECK(l.members.size() == 1);
                continue;
            }
            CHECK(l.members.size() == 3 * a - 9 * l.level);
            // walk order is a Hamiltonian cycle of the layer; beyond it the
            // layer has one chord at each corner (a triangle when the side is 2)
            REQUIRE(l.cycle.size() == l.members.size());
            std::size_t degree_sum = 0;
            for (std::size_t i = 0; i < l.cycle.size(); ++i) {
                const auto u = l.cycle[i];
                CHECK(bits.test(u));
                CHECK(g.has_edge(u, l.cycle[(i + 1) % l.cycle.size()]));
                degree_sum += g.neighbors(u).and_count(bits);
            }
            const std::size_t side = a - 3 * l.level;
            CHECK(degree_sum / 2 == 3 * side + (side >= 2 ? 3 : 0));
        }
        CHECK(seen.count() == g.size());
    }
    CHECK_THROWS(rim_cycle_decomposition(build_graph(4, 3)));
}
