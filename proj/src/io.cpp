#include "monogrid/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "monogrid/errors.hpp"
#include "monogrid/mis.hpp"

namespace monogrid {

namespace {

std::string dot_name(const Graph& g, std::size_t v)
{
    if (!g.labels().empty())
        return "\"" + g.label(v).to_monomial_string() + "\"";
    return "v" + std::to_string(v);
}

} // namespace

void write_dot(std::ostream& out, const Graph& g, const std::optional<VertexSet>& highlight)
{
    Bitset marked(g.size());
    if (highlight)
        marked = highlight->bits(g);
    out << "graph \"" << g.tag() << "\" {\n";
    out << "  node [shape=circle];\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
        out << "  " << dot_name(g, v);
        if (marked.test(v))
            out << " [style=filled, fillcolor=red]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges())
        out << "  " << dot_name(g, u) << " -- " << dot_name(g, v) << ";\n";
    out << "}\n";
}

void write_vertex_list(std::ostream& out, const std::vector<ExponentVector>& vertices)
{
    for (const auto& v : vertices)
        out << v.to_plain_string() << '\n';
}

std::vector<ExponentVector> read_vertex_list(std::istream& in)
{
    std::vector<ExponentVector> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#')
            continue;
        out.push_back(parse_exponents(line));
        if (out.back().variables() != out.front().variables())
            throw format_error("vertex list mixes variable counts");
    }
    return out;
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    const auto edges = g.edges();
    out << "p " << g.size() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_edge_list(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> vertices;
    std::size_t declared_edges = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind == "c")
            continue;
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (kind == "p") {
            if (vertices)
                throw format_error(where + "second problem line");
            std::string first;
            ls >> first;
            if (first == "edge" || first == "col" || first == "edges")
                ls >> first;
            std::size_t v = 0;
            try {
                std::size_t used = 0;
                v = std::stoul(first, &used);
                if (used != first.size())
                    throw format_error(where + "bad vertex count");
            } catch (const std::logic_error&) {
                throw format_error(where + "bad vertex count");
            }
            if (!(ls >> declared_edges))
                throw format_error(where + "bad edge count");
            vertices = v;
        } else if (kind == "e") {
            if (!vertices)
                throw format_error(where + "edge before problem line");
            long long u = 0;
            long long v = 0;
            if (!(ls >> u >> v))
                throw format_error(where + "malformed edge");
            if (u < 1 || v < 1 || static_cast<std::size_t>(u) > *vertices || static_cast<std::size_t>(v) > *vertices)
                throw format_error(where + "edge endpoint out of range");
            edges.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
        } else {
            throw format_error(where + "unknown line type '" + kind + "'");
        }
    }
    if (!vertices)
        throw format_error("missing problem line");
    if (edges.size() != declared_edges)
        throw format_error("header declares " + std::to_string(declared_edges) + " edges, found " +
                           std::to_string(edges.size()));
    return import_graph(edges, *vertices);
}

} // namespace monogrid
