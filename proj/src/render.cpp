#include "monogrid/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "monogrid/errors.hpp"

namespace monogrid {

namespace {

const double row_height = std::sqrt(3.0) / 2.0;

void require_drawable(const Graph& g)
{
    if (!g.is_complete_monomial_graph() || !g.shape() || (g.shape()->n != 3 && g.shape()->n != 4))
        throw usage_error("figures are drawn for G_3(d) and G_4(d) only");
}

Point triangle_point(double e_top, double e_right)
{
    return {e_right + e_top / 2.0, e_top * row_height};
}

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s = buf;
    while (!s.empty() && s.back() == '0')
        s.pop_back();
    if (!s.empty() && s.back() == '.')
        s.pop_back();
    return s == "-0" ? "0" : s;
}

} // namespace

std::vector<Point> lattice_layout(const Graph& g)
{
    require_drawable(g);
    const auto [n, d] = *g.shape();
    std::vector<Point> out(g.size());
    if (n == 3) {
        for (std::size_t v = 0; v < g.size(); ++v)
            out[v] = triangle_point(g.label(v)[0], g.label(v)[2]);
        return out;
    }
    // slice a occupies width a, slices separated by one unit
    std::vector<double> offset(d + 1, 0.0);
    for (std::size_t a = 1; a <= d; ++a)
        offset[a] = offset[a - 1] + static_cast<double>(a - 1) + 1.5;
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto& m = g.label(v);
        const std::size_t a = d - m[0];
        Point p = triangle_point(m[1], m[3]);
        p.x += offset[a];
        out[v] = p;
    }
    return out;
}

std::string render_figure(const Graph& g, const std::optional<VertexSet>& highlight, FigureFormat format)
{
    const auto pos = lattice_layout(g);
    Bitset marked(g.size());
    if (highlight)
        marked = highlight->bits(g);
    const auto edges = g.edges();
    std::ostringstream out;
    if (format == FigureFormat::tikz) {
        out << "\\begin{tikzpicture}[scale=0.75]\n";
        for (auto [u, v] : edges)
            out << "  \\draw (" << num(pos[u].x) << "," << num(pos[u].y) << ") -- (" << num(pos[v].x) << ","
                << num(pos[v].y) << ");\n";
        for (std::size_t v = 0; v < g.size(); ++v) {
            out << "  \\node[draw, circle, " << (marked.test(v) ? "fill=red!" : "fill=white") << ", scale=0.65] at ("
                << num(pos[v].x) << "," << num(pos[v].y) << ") {};\n";
        }
        out << "\\end{tikzpicture}\n";
        return out.str();
    }
    double max_x = 0;
    double max_y = 0;
    for (const auto& p : pos) {
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    const double unit = 40.0;
    const double margin = 20.0;
    const double w = max_x * unit + 2 * margin;
    const double h = max_y * unit + 2 * margin;
    auto sx = [&](const Point& p) { return num(margin + p.x * unit); };
    auto sy = [&](const Point& p) { return num(h - margin - p.y * unit); };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h)
        << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n";
    out << "  <g stroke=\"black\" stroke-width=\"1.5\">\n";
    for (auto [u, v] : edges)
        out << "    <line x1=\"" << sx(pos[u]) << "\" y1=\"" << sy(pos[u]) << "\" x2=\"" << sx(pos[v]) << "\" y2=\""
            << sy(pos[v]) << "\"/>\n";
    out << "  </g>\n  <g stroke=\"black\" stroke-width=\"1\">\n";
    for (std::size_t v = 0; v < g.size(); ++v)
        out << "    <circle cx=\"" << sx(pos[v]) << "\" cy=\"" << sy(pos[v]) << "\" r=\"6\" fill=\""
            << (marked.test(v) ? "red" : "white") << "\"/>\n";
    out << "  </g>\n</svg>\n";
    return out.str();
}

std::vector<std::size_t> slice_highlight_counts(const Graph& g, const VertexSet& highlight)
{
    if (!g.is_complete_monomial_graph() || !g.shape() || g.shape()->n != 4)
        throw usage_error("slice tallies are defined for G_4(d)");
    const std::size_t d = g.shape()->d;
    std::vector<std::size_t> out(d + 1, 0);
    highlight.check_owner(g);
    for (auto v : highlight.members())
        ++out[d - g.label(v)[0]];
    return out;
}

} // namespace monogrid
