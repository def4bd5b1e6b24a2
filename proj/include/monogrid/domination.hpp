#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "monogrid/budget.hpp"
#include "monogrid/graph.hpp"
#include "monogrid/stars.hpp"

namespace monogrid {

inline constexpr std::size_t default_domination_vertex_limit = 120;

struct DominationOptions {
    Budget budget;
    /// Exact domination is refused above this many vertices unless
    /// `allow_large` is set.
    std::size_t vertex_limit = default_domination_vertex_limit;
    bool allow_large = false;
};

struct DominationObjective {
    /// Exact minimum when `exact`, else the best size found so far.
    std::size_t value = 0;
    VertexSet witness;
    bool exact = true;
    std::optional<std::string> exhausted_budget;
    std::uint64_t nodes = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// gamma and/or i for one graph; an absent field was not requested.
struct DominationReport {
    std::optional<DominationObjective> gamma;
    std::optional<DominationObjective> idom;
};

/// Every vertex outside s has at least k neighbors in s.
bool is_k_dominating(const Graph& g, const VertexSet& s, std::size_t k);
inline bool is_dominating(const Graph& g, const VertexSet& s) { return is_k_dominating(g, s, 1); }

DominationReport min_dominating_set(const Graph& g, const DominationOptions& options = {});
DominationReport min_independent_dominating_set(const Graph& g, const DominationOptions& options = {});
DominationReport solve_domination(const Graph& g, const DominationOptions& options = {});

inline constexpr std::size_t domination_brute_force_limit = 22;

struct DominationOracle {
    std::size_t gamma = 0;
    std::size_t idom = 0;
};

/// gamma and i by exhaustive subset scan in increasing size order.
DominationOracle brute_force_domination(const Graph& g);

/// floor((d^2 + 7d - 23) / 14), the conjectured gamma_3(d) for d >= 14.
std::size_t wagon_gamma3(std::size_t d);

struct BollobasCockayneReport {
    std::size_t r = 0;
    /// Present when g is K_{1,r+1}-free and both numbers were computed.
    std::optional<std::size_t> idom;
    std::optional<std::size_t> gamma;
    std::optional<long long> bound;
    bool holds = false;
    bool exact = true;
    /// Present instead of the numbers when g contains an induced K_{1,r+1}.
    std::optional<StarWitness> star;
};

/// i(g) <= gamma(g)(r-1) - (r-2) for K_{1,r+1}-free g. A false `holds` on
/// exact numbers means a solver bug.
BollobasCockayneReport bollobas_cockayne_check(const Graph& g, std::size_t r, const DominationOptions& options = {});

enum class VerdictStatus { consistent, violated, inconclusive };
std::string to_string(VerdictStatus s);

struct IGammaReport {
    std::size_t n = 0;
    std::size_t d = 0;
    DominationReport report;
    VerdictStatus status = VerdictStatus::inconclusive;
    /// Inequalities are re-checked (oracle on small graphs, targeted
    /// re-search otherwise) before being reported.
    bool reverified = false;
    std::string detail;
};

IGammaReport check_igamma_conjecture(std::size_t n, std::size_t d, const DominationOptions& options = {});

nlohmann::json to_json(const Graph& g, const DominationReport& r);
nlohmann::json to_json(const BollobasCockayneReport& r);

} // namespace monogrid
