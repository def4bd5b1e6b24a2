#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monogrid/graph.hpp"

namespace monogrid {

struct Point {
    double x = 0;
    double y = 0;
};

/// Drawing positions in lattice units (unit edge, row height sqrt(3)/2).
/// G_3(d): x1^d at the apex, x2^d bottom left, x3^d bottom right.
/// G_4(d): each x1-slice drawn as its own triangle, slices left to right
/// by increasing degree of the remaining variables.
std::vector<Point> lattice_layout(const Graph& g);

enum class FigureFormat { svg, tikz };

std::string render_figure(const Graph& g, const std::optional<VertexSet>& highlight, FigureFormat format);

/// Highlighted vertices per x1-slice of G_4(d), slice a holding x1^(d-a).
std::vector<std::size_t> slice_highlight_counts(const Graph& g, const VertexSet& highlight);

} // namespace monogrid
