#include <doctest.h>

#include <sstream>

#include "monogrid/closed_forms.hpp"
#include "monogrid/errors.hpp"
#include "monogrid/io.hpp"
#include "monogrid/mis.hpp"
#include "monogrid/render.hpp"

using namespace monogrid;

namespace {

std::size_t occurrences(const std::string& hay, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

Graph parse(const std::string& text)
{
    std::istringstream in(text);
    return read_edge_list(in);
}

} // namespace

TEST_CASE("dot output")
{
    const Graph g = build_graph(3, 2);
    std::ostringstream out;
    const std::vector<ExponentVector> hl = {{2, 0, 0}};
    write_dot(out, g, VertexSet::of_monomials(g, hl));
    const auto s = out.str();
    CHECK(s.rfind("graph \"G_3(2)\"", 0) == 0);
    CHECK(occurrences(s, " -- ") == 9);
    CHECK(occurrences(s, "fillcolor=red") == 1);
    CHECK(s.find("\"x1^2\"") != std::string::npos);

    std::ostringstream big;
    write_dot(big, build_graph(4, 8));
    CHECK(occurrences(big.str(), ";\n") - occurrences(big.str(), " -- ") == 166);
}

TEST_CASE("vertex lists round trip")
{
    const auto m = enumerate_monomials(4, 3);
    std::ostringstream out;
    write_vertex_list(out, m);
    std::istringstream in("# comment\n\n" + out.str());
    CHECK(read_vertex_list(in) == m);

    std::istringstream mixed("1 0\n1 0 0\n");
    CHECK_THROWS_AS(read_vertex_list(mixed), format_error);
    std::istringstream junk("1 x 0\n");
    CHECK_THROWS(read_vertex_list(junk));
}

TEST_CASE("edge lists round trip")
{
    const Graph g = build_graph(2, 4);
    std::ostringstream out;
    write_edge_list(out, g);
    CHECK(out.str() == "p 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n");
    const Graph back = parse(out.str());
    CHECK(back.adjacency() == g.adjacency());
    CHECK(count_maximum_independent_sets(back).objective == 3);
}

TEST_CASE("edge list dialects and errors")
{
    const Graph c = parse("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(c.size() == 3);
    CHECK(c.edge_count() == 3);
    CHECK(parse("p col 4 0\n").size() == 4);

    CHECK_THROWS_AS(parse("e 1 2\n"), format_error);
    CHECK_THROWS_AS(parse("p 3 2\ne 1 2\n"), format_error);
    CHECK_THROWS_AS(parse("p 3 1\ne 1 1\n"), format_error);
    CHECK_THROWS_AS(parse("p 3 2\ne 1 2\ne 2 1\n"), format_error);
    CHECK_THROWS_AS(parse("p 3 1\ne 1 4\n"), format_error);
    CHECK_THROWS_AS(parse("p 3 1\ne 0 1\n"), format_error);
    CHECK_THROWS_AS(parse("p 3 1\nx 1 2\n"), format_error);
    CHECK_THROWS_AS(parse(""), format_error);
    CHECK_THROWS_AS(parse("p 3 0\np 3 0\n"), format_error);
}

TEST_CASE("triangular layout")
{
    const Graph g = build_graph(3, 2);
    const auto pos = lattice_layout(g);
    // x1^d at the apex, x2^d bottom left, x3^d bottom right
    const auto apex = pos[g.require_index({2, 0, 0})];
    const auto left = pos[g.require_index({0, 2, 0})];
    const auto right = pos[g.require_index({0, 0, 2})];
    CHECK(apex.x == doctest::Approx(1.0));
    CHECK(apex.y == doctest::Approx(std::sqrt(3.0)));
    CHECK(left.x == doctest::Approx(0.0));
    CHECK(left.y == doctest::Approx(0.0));
    CHECK(right.x == doctest::Approx(2.0));
    // every edge has unit length
    for (auto [u, v] : g.edges())
        CHECK(std::hypot(pos[u].x - pos[v].x, pos[u].y - pos[v].y) == doctest::Approx(1.0));
}

TEST_CASE("tetrahedral layout keeps slices apart")
{
    const Graph g = build_graph(4, 3);
    const auto pos = lattice_layout(g);
    for (auto [u, v] : g.edges())
        if (g.label(u)[0] == g.label(v)[0])
            CHECK(std::hypot(pos[u].x - pos[v].x, pos[u].y - pos[v].y) == doctest::Approx(1.0));
    // slices are ordered left to right by increasing remaining degree
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = 0; v < g.size(); ++v)
            if (g.label(u)[0] > g.label(v)[0])
                CHECK(pos[u].x < pos[v].x);
}

TEST_CASE("figures")
{
    const Graph g0 = build_graph(3, 0);
    const auto svg0 = render_figure(g0, std::nullopt, FigureFormat::svg);
    CHECK(occurrences(svg0, "<circle") == 1);
    CHECK(occurrences(svg0, "<line") == 0);

    const Graph g12 = build_graph(3, 12);
    const auto hl = construct_unique_mis_3(g12);
    const auto svg = render_figure(g12, hl, FigureFormat::svg);
    CHECK(occurrences(svg, "<circle") == 91);
    CHECK(occurrences(svg, "fill=\"red\"") == 31);
    CHECK(occurrences(svg, "<line") == g12.edge_count());

    const auto tikz = render_figure(g12, hl, FigureFormat::tikz);
    CHECK(tikz.rfind("\\begin{tikzpicture}", 0) == 0);
    CHECK(occurrences(tikz, "fill=red!") == 31);
    CHECK(occurrences(tikz, "\\node") == 91);

    const Graph g8 = build_graph(4, 8);
    const auto s8 = construct_unique_mis_4(g8);
    CHECK(occurrences(render_figure(g8, s8, FigureFormat::svg), "fill=\"red\"") == 45);
    CHECK(slice_highlight_counts(g8, s8) == std::vector<std::size_t>{1, 0, 3, 1, 6, 3, 10, 6, 15});

    CHECK_THROWS_AS(render_figure(build_graph(5, 2), std::nullopt, FigureFormat::svg), usage_error);
    CHECK_THROWS_AS(render_figure(build_graph(2, 2), std::nullopt, FigureFormat::tikz), usage_error);
}
