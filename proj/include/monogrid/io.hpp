#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "monogrid/graph.hpp"

namespace monogrid {

/// Undirected DOT. Labeled graphs use monomial names; vertices in
/// `highlight` are drawn filled red.
void write_dot(std::ostream& out, const Graph& g, const std::optional<VertexSet>& highlight = std::nullopt);

/// One vertex per line as space separated exponents ("2 0 0").
void write_vertex_list(std::ostream& out, const std::vector<ExponentVector>& vertices);
std::vector<ExponentVector> read_vertex_list(std::istream& in);

/// "p <vertices> <edges>" followed by "e <u> <v>" lines, 1-based.
void write_edge_list(std::ostream& out, const Graph& g);

/// Reads the edge-list format above. Also accepts "c" comment lines and
/// the "p edge V E" / "p col V E" header spelling. Self-loops and
/// duplicate edges are format errors, as is an edge count that does not
/// match the header.
Graph read_edge_list(std::istream& in);

} // namespace monogrid
