#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "monogrid/graph.hpp"

namespace monogrid {

/// Induced K_{1,r}: a center adjacent to r pairwise non-adjacent leaves.
/// Monomials are filled in for labeled graphs.
struct StarWitness {
    std::size_t center = 0;
    std::vector<std::size_t> leaves;
    std::optional<ExponentVector> center_monomial;
    std::vector<ExponentVector> leaf_monomials;
};

struct StarFreeness {
    bool free = true;
    std::optional<StarWitness> witness;
};

/// Searches every vertex neighborhood for an independent set of size r
/// (with the exact solver on the induced neighborhood).
StarFreeness is_k1r_free(const Graph& g, std::size_t r);

/// The closed criterion for G_n(d): K_{1,r}-free iff d < r or n < r.
bool k1r_free_criterion(std::size_t n, std::size_t d, std::size_t r);

/// Explicit star in G_n(d) with center x1^(d-r+1) x2 ... xr and leaves
/// (x_i / x_{i+1}) * center for i < r and (x_r / x_1) * center. Needs
/// d >= r and n >= r. For r = 1 the leaf is (x_2 / x_1) * center, which
/// needs n >= 2: G_1(d) is a single vertex and has no K_{1,1}.
StarWitness build_star_witness(std::size_t n, std::size_t d, std::size_t r);

/// Checks the witness is an induced K_{1,r} of `g`.
bool verify_star(const Graph& g, const StarWitness& w);

nlohmann::json to_json(const StarWitness& w);

} // namespace monogrid
