#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "monogrid/graph.hpp"
#include "monogrid/monomial.hpp"

namespace monogrid {

enum class Applicability { exact, exceptional, conjectural };
std::string to_string(Applicability a);

struct FormulaValue {
    std::uint64_t value = 0;
    Applicability applicability = Applicability::exact;
    friend bool operator==(const FormulaValue&, const FormulaValue&) = default;
};

/// ceil((d+2)(d+1)/6). The formula does not hold at d = 2 and d = 4; there
/// the true alpha_3 (computed once by the exact solver) is returned and
/// flagged exceptional.
FormulaValue alpha3_formula(std::uint64_t d);

/// d = 2k+1: (k+2)(2k+3)(k+1)/6;  d = 2k: ((k+1)^3 + 2(k+1))/3.
FormulaValue alpha4_formula(std::uint64_t d);

/// Frozen alpha_3 at the two exceptional degrees.
inline constexpr std::uint64_t alpha3_at_2 = 3;
inline constexpr std::uint64_t alpha3_at_4 = 6;

/// Outcome of an arithmetic identity check; `failures` lists each broken
/// identity as readable text.
struct IdentityReport {
    std::vector<std::string> checked;
    std::vector<std::string> failures;
    bool ok() const noexcept { return failures.empty(); }
};

/// alpha_3 step identities (k >= 3) and alpha_4 step identities (k >= 1).
/// Throws validation_error on any failure.
IdentityReport verify_difference_identities(std::uint64_t k);

/// 1 iff m = 0 (mod 3).
std::uint64_t epsilon(std::uint64_t m);

/// Rim-layer sum identities over the cycle lengths 3m - 9i. Throws
/// validation_error on any failure.
IdentityReport verify_sum_identities(std::uint64_t m);

/// Rim skeleton of G_3(d) for 3 | d: x1^(d-3i)x2^(3i), x1^(d-3i)x3^(3i),
/// x2^(d-3i)x3^(3i) with shared corners listed once.
std::vector<ExponentVector> rim_skeleton_3(std::uint64_t d);

/// Maximum independent set of G_3(d), 3 | d, by peeling: skeleton of the
/// outer rim plus x1x2x3 times the set for d - 3.
std::vector<ExponentVector> unique_mis_3_monomials(std::uint64_t d);
VertexSet construct_unique_mis_3(const Graph& g);

/// Monomials of G_4(d), d even, whose exponents are all even or all odd.
std::vector<ExponentVector> unique_mis_4_monomials(std::uint64_t d);
VertexSet construct_unique_mis_4(const Graph& g);

/// binom(d/2+3, 3) + binom(d/2+1, 3): size of the parity set for even d.
std::uint64_t parity_set_size(std::uint64_t d);

/// Alternating half of an even rim cycle that contains `anchor`; for a
/// degenerate layer, the single vertex. The half is independent only when it
/// contains the corners: anchoring elsewhere picks both ends of a chord.
VertexSet construct_rim_independent_choice(const Graph& g, const RimLayer& layer, std::size_t anchor);

} // namespace monogrid
