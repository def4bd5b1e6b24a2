#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "monogrid/budget.hpp"
#include "monogrid/graph.hpp"

namespace monogrid {

using BigCount = boost::multiprecision::cpp_int;

/// Result of an exact maximum-independent-set computation.
///
/// When `exact` is false the objective is only the best size found before
/// `exhausted_budget` ran out, and `count` is absent.
struct SolveReport {
    std::size_t objective = 0;
    /// True once alpha itself is settled, even if a later phase ran out.
    bool objective_exact = true;
    std::optional<BigCount> count;
    std::vector<VertexSet> witnesses;
    /// False when enumeration stopped at its cap before listing everything.
    bool witnesses_complete = true;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
    bool exact = true;
    std::optional<std::string> exhausted_budget;
};

bool is_independent(const Graph& g, const VertexSet& s);

/// alpha(g) with one witness. The witness is the first maximum independent
/// set in the solver's search order, so it does not depend on thread count.
SolveReport max_independent_set(const Graph& g, const Budget& budget = {});

/// alpha(g) and the exact number of maximum independent sets.
SolveReport count_maximum_independent_sets(const Graph& g, const Budget& budget = {});

/// Up to `cap` maximum independent sets, sorted by member index sequence,
/// plus the total count.
SolveReport enumerate_maximum_independent_sets(const Graph& g, std::size_t cap, const Budget& budget = {});

inline constexpr std::size_t brute_force_vertex_limit = 25;

/// alpha and count by complete unpruned recursion over all independent sets.
/// Oracle for testing; refuses graphs above brute_force_vertex_limit.
SolveReport brute_force_alpha(const Graph& g);

/// Graph from a 0-based simple edge list. Self-loops, out-of-range
/// endpoints, and duplicate edges are format errors.
Graph import_graph(const std::vector<std::pair<std::size_t, std::size_t>>& edges, std::size_t vertex_count);

std::string to_decimal(const BigCount& c);

/// JSON form: objective, count (decimal string), witnesses (exponent arrays
/// for labeled graphs, index arrays otherwise), nodes, elapsed_ms, exact.
nlohmann::json to_json(const Graph& g, const SolveReport& report);

/// Witness as JSON: exponent-vector arrays when labeled, else indices.
nlohmann::json vertex_set_json(const Graph& g, const VertexSet& s);

} // namespace monogrid
