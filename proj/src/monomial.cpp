#include "monogrid/monomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "monogrid/errors.hpp"

namespace monogrid {

ExponentVector::ExponentVector(std::vector<value_type> exps) : exps_(std::move(exps))
{
    std::uint64_t sum = 0;
    for (auto e : exps_)
        sum += e;
    if (sum > std::numeric_limits<std::uint32_t>::max())
        throw capacity_error("exponent sum overflows 32 bits");
    degree_ = static_cast<std::uint32_t>(sum);
}

ExponentVector::value_type ExponentVector::min_exponent() const noexcept
{
    return exps_.empty() ? 0 : *std::min_element(exps_.begin(), exps_.end());
}

std::string ExponentVector::to_monomial_string() const
{
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0)
            continue;
        out += "x" + std::to_string(i + 1);
        if (exps_[i] > 1)
            out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

std::string ExponentVector::to_plain_string() const
{
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(exps_[i]);
    }
    return out;
}

std::size_t monomial_count(std::size_t n, std::size_t d) noexcept
{
    if (n == 0)
        return d == 0 ? 1 : 0;
    // binomial(d + n - 1, n - 1) with the smaller of the two lower indices
    std::size_t k = std::min(n - 1, d);
    std::size_t top = d + n - 1;
    unsigned __int128 acc = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        acc = acc * (top - k + i) / i;
        if (acc > std::numeric_limits<std::size_t>::max())
            return std::numeric_limits<std::size_t>::max();
    }
    return static_cast<std::size_t>(acc);
}

namespace {

void enumerate_into(std::vector<ExponentVector::value_type>& prefix, std::size_t pos, std::size_t remaining,
                    std::vector<ExponentVector>& out)
{
    if (pos + 1 == prefix.size()) {
        prefix[pos] = static_cast<ExponentVector::value_type>(remaining);
        out.emplace_back(prefix);
        return;
    }
    for (std::size_t e = remaining + 1; e-- > 0;) {
        prefix[pos] = static_cast<ExponentVector::value_type>(e);
        enumerate_into(prefix, pos + 1, remaining - e, out);
    }
}

void check_shape(const ExponentVector& f, const ExponentVector& g)
{
    if (f.variables() != g.variables())
        throw shape_error("exponent vectors have different variable counts (" + std::to_string(f.variables()) +
                          " vs " + std::to_string(g.variables()) + ")");
    if (f.degree() != g.degree())
        throw shape_error("exponent vectors have different degrees (" + std::to_string(f.degree()) + " vs " +
                          std::to_string(g.degree()) + ")");
}

} // namespace

std::vector<ExponentVector> enumerate_monomials(std::size_t n, std::size_t d, std::size_t vertex_cap)
{
    if (n == 0)
        throw domain_error("variable count must be positive");
    const std::size_t total = monomial_count(n, d);
    if (total > vertex_cap)
        throw capacity_error("G_" + std::to_string(n) + "(" + std::to_string(d) + ") has " +
                             (total == std::numeric_limits<std::size_t>::max() ? std::string("too many")
                                                                               : std::to_string(total)) +
                             " vertices, above the vertex cap of " + std::to_string(vertex_cap));
    std::vector<ExponentVector> out;
    out.reserve(total);
    std::vector<ExponentVector::value_type> prefix(n, 0);
    enumerate_into(prefix, 0, d, out);
    return out;
}

bool adjacent_by_lcm(const ExponentVector& f, const ExponentVector& g)
{
    check_shape(f, g);
    std::uint64_t lcm_degree = 0;
    for (std::size_t i = 0; i < f.variables(); ++i)
        lcm_degree += std::max(f[i], g[i]);
    return lcm_degree == static_cast<std::uint64_t>(f.degree()) + 1;
}

bool adjacent_by_l1(const ExponentVector& f, const ExponentVector& g)
{
    check_shape(f, g);
    std::uint64_t dist = 0;
    for (std::size_t i = 0; i < f.variables(); ++i)
        dist += f[i] > g[i] ? f[i] - g[i] : g[i] - f[i];
    return dist == 2;
}

bool adjacent(const ExponentVector& f, const ExponentVector& g)
{
    const bool by_lcm = adjacent_by_lcm(f, g);
    if (by_lcm != adjacent_by_l1(f, g))
        throw validation_error("lcm and L1 adjacency disagree on " + f.to_plain_string() + " / " +
                               g.to_plain_string());
    return by_lcm;
}

ExponentVector parse_exponents(const std::string& line)
{
    std::istringstream in(line);
    std::vector<ExponentVector::value_type> exps;
    long long v = 0;
    while (in >> v) {
        if (v < 0 || v > std::numeric_limits<std::uint32_t>::max())
            throw format_error("exponent out of range in \"" + line + "\"");
        exps.push_back(static_cast<ExponentVector::value_type>(v));
    }
    if (!in.eof())
        throw format_error("malformed exponent line \"" + line + "\"");
    if (exps.empty())
        throw format_error("empty exponent line");
    return ExponentVector(std::move(exps));
}

ExponentVector delete_coordinate(const ExponentVector& v, std::size_t index)
{
    if (index >= v.variables())
        throw index_error("coordinate " + std::to_string(index) + " out of range");
    std::vector<ExponentVector::value_type> exps;
    exps.reserve(v.variables() - 1);
    for (std::size_t i = 0; i < v.variables(); ++i)
        if (i != index)
            exps.push_back(v[i]);
    return ExponentVector(std::move(exps));
}

} // namespace monogrid
