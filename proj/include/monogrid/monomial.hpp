#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace monogrid {

/// Exponent vector of a monomial x_1^e_1 ... x_n^e_n. The degree is the
/// exponent sum; the vector is the vertex identity in G_n(d).
class ExponentVector {
public:
    using value_type = std::uint32_t;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<value_type> exps);
    ExponentVector(std::initializer_list<value_type> exps) : ExponentVector(std::vector<value_type>(exps)) {}

    std::size_t variables() const noexcept { return exps_.size(); }
    std::uint32_t degree() const noexcept { return degree_; }
    value_type operator[](std::size_t i) const noexcept { return exps_[i]; }
    const std::vector<value_type>& exponents() const noexcept { return exps_; }

    value_type min_exponent() const noexcept;

    /// "x1^2x2", or "1" for the empty product.
    std::string to_monomial_string() const;
    /// "2 1 0" (space separated exponents).
    std::string to_plain_string() const;

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept { return a.exps_ == b.exps_; }
    friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) noexcept { return a.exps_ <=> b.exps_; }

private:
    std::vector<value_type> exps_;
    std::uint32_t degree_ = 0;
};

/// binomial(n+d-1, n-1); saturates at SIZE_MAX.
std::size_t monomial_count(std::size_t n, std::size_t d) noexcept;

inline constexpr std::size_t default_vertex_cap = 100000;

/// All degree-d exponent vectors in n variables, lexicographically
/// decreasing (x1-major). Throws capacity_error beyond `vertex_cap`.
std::vector<ExponentVector> enumerate_monomials(std::size_t n, std::size_t d,
                                                std::size_t vertex_cap = default_vertex_cap);

/// deg lcm(f, g) == deg f + 1.
bool adjacent_by_lcm(const ExponentVector& f, const ExponentVector& g);
/// L1(f, g) == 2.
bool adjacent_by_l1(const ExponentVector& f, const ExponentVector& g);
/// Edge relation of G_n(d). Evaluates both criteria and throws
/// validation_error if they ever disagree; shape_error on mismatched n or d.
bool adjacent(const ExponentVector& f, const ExponentVector& g);

/// Parses whitespace separated exponents ("2 0 1").
ExponentVector parse_exponents(const std::string& line);

/// Drops coordinate `index` (0-based).
ExponentVector delete_coordinate(const ExponentVector& v, std::size_t index);

} // namespace monogrid
