#include "monogrid/closed_forms.hpp"

#include <algorithm>
#include <set>

#include "monogrid/errors.hpp"

namespace monogrid {

namespace {

using E = ExponentVector::value_type;

void expect(IdentityReport& rep, bool holds, std::string text)
{
    rep.checked.push_back(text);
    if (!holds)
        rep.failures.push_back(std::move(text));
}

std::string eq(std::int64_t lhs, std::int64_t rhs, const std::string& what)
{
    return what + ": " + std::to_string(lhs) + " == " + std::to_string(rhs);
}

std::uint64_t binom3(std::uint64_t m)
{
    return m < 3 ? 0 : m * (m - 1) * (m - 2) / 6;
}

void require_graph(const Graph& g, std::size_t n, std::uint64_t d)
{
    if (!g.is_complete_monomial_graph() || !g.shape() || g.shape()->n != n || g.shape()->d != d)
        throw identity_error("construction expects G_" + std::to_string(n) + "(" + std::to_string(d) + "), got " +
                             g.tag());
}

} // namespace

std::string to_string(Applicability a)
{
    switch (a) {
    case Applicability::exact:
        return "exact";
    case Applicability::exceptional:
        return "exceptional";
    case Applicability::conjectural:
        return "conjectural";
    }
    return "exact";
}

FormulaValue alpha3_formula(std::uint64_t d)
{
    if (d == 2)
        return {alpha3_at_2, Applicability::exceptional};
    if (d == 4)
        return {alpha3_at_4, Applicability::exceptional};
    const std::uint64_t num = (d + 2) * (d + 1);
    return {(num + 5) / 6, Applicability::exact};
}

FormulaValue alpha4_formula(std::uint64_t d)
{
    const std::uint64_t k = d / 2;
    std::uint64_t num = 0;
    std::uint64_t den = 0;
    if (d % 2 == 1) {
        num = (k + 2) * (2 * k + 3) * (k + 1);
        den = 6;
    } else {
        num = (k + 1) * (k + 1) * (k + 1) + 2 * (k + 1);
        den = 3;
    }
    if (num % den != 0)
        throw validation_error("alpha_4 formula is not integral at d = " + std::to_string(d));
    return {num / den, Applicability::exact};
}

IdentityReport verify_difference_identities(std::uint64_t k)
{
    if (k == 0)
        throw domain_error("difference identities start at k = 1");
    IdentityReport rep;
    const auto a3 = [](std::uint64_t d) { return static_cast<std::int64_t>(alpha3_formula(d).value); };
    const auto a4 = [](std::uint64_t d) { return static_cast<std::int64_t>(alpha4_formula(d).value); };
    const auto sk = static_cast<std::int64_t>(k);
    const std::string at = " at k=" + std::to_string(k);
    if (k >= 3) {
        expect(rep, a3(3 * k) == a3(3 * k - 1) + sk + 1, eq(a3(3 * k), a3(3 * k - 1) + sk + 1, "a3(3k) = a3(3k-1)+k+1" + at));
        expect(rep, a3(3 * k) == a3(3 * k - 2) + 2 * sk + 1,
               eq(a3(3 * k), a3(3 * k - 2) + 2 * sk + 1, "a3(3k) = a3(3k-2)+2k+1" + at));
        expect(rep, a3(3 * k) == a3(3 * k - 3) + 3 * sk, eq(a3(3 * k), a3(3 * k - 3) + 3 * sk, "a3(3k) = a3(3k-3)+3k" + at));
    }
    expect(rep, a4(2 * k) - a4(2 * k - 1) == (sk + 2) * (sk + 1) / 2,
           eq(a4(2 * k) - a4(2 * k - 1), (sk + 2) * (sk + 1) / 2, "a4(2k)-a4(2k-1) = (k+2)(k+1)/2" + at));
    expect(rep, a4(2 * k) - a4(2 * k - 2) == sk * sk + sk + 1,
           eq(a4(2 * k) - a4(2 * k - 2), sk * sk + sk + 1, "a4(2k)-a4(2k-2) = k^2+k+1" + at));
    if (!rep.ok())
        throw validation_error("difference identity failed: " + rep.failures.front());
    return rep;
}

std::uint64_t epsilon(std::uint64_t m)
{
    return m % 3 == 0 ? 1 : 0;
}

IdentityReport verify_sum_identities(std::uint64_t m)
{
    IdentityReport rep;
    const auto sm = static_cast<std::int64_t>(m);
    std::int64_t from0 = static_cast<std::int64_t>(epsilon(m));
    std::int64_t from1 = from0;
    for (std::int64_t i = 0; i <= sm / 3; ++i) {
        from0 += 3 * sm - 9 * i;
        if (i >= 1)
            from1 += 3 * sm - 9 * i;
    }
    const std::int64_t rhs0 = (sm + 2) * (sm + 1) / 2;
    const std::int64_t rhs1 = (sm - 2) * (sm - 1) / 2;
    const std::string at = " at m=" + std::to_string(m);
    expect(rep, from0 == rhs0, eq(from0, rhs0, "eps + sum_{i>=0}(3m-9i) = (m+2)(m+1)/2" + at));
    expect(rep, from1 == rhs1, eq(from1, rhs1, "eps + sum_{i>=1}(3m-9i) = (m-2)(m-1)/2" + at));
    if (!rep.ok())
        throw validation_error("sum identity failed: " + rep.failures.front());
    return rep;
}

std::vector<ExponentVector> rim_skeleton_3(std::uint64_t d)
{
    if (d % 3 != 0)
        throw domain_error("rim skeleton needs d divisible by 3");
    std::set<ExponentVector> out;
    for (std::uint64_t i = 0; 3 * i <= d; ++i) {
        const auto hi = static_cast<E>(d - 3 * i);
        const auto lo = static_cast<E>(3 * i);
        out.insert(ExponentVector{hi, lo, 0});
        out.insert(ExponentVector{hi, 0, lo});
        out.insert(ExponentVector{0, hi, lo});
    }
    // canonical order is lexicographically decreasing
    return {out.rbegin(), out.rend()};
}

std::vector<ExponentVector> unique_mis_3_monomials(std::uint64_t d)
{
    if (d % 3 != 0)
        throw domain_error("the n = 3 construction needs d divisible by 3, got d = " + std::to_string(d));
    if (d == 0)
        return {ExponentVector{0, 0, 0}};
    std::vector<ExponentVector> out = rim_skeleton_3(d);
    for (const auto& m : unique_mis_3_monomials(d - 3))
        out.push_back(ExponentVector{m[0] + 1, m[1] + 1, m[2] + 1});
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

VertexSet construct_unique_mis_3(const Graph& g)
{
    if (!g.shape())
        throw identity_error("construction expects G_3(d), got " + g.tag());
    const auto d = g.shape()->d;
    require_graph(g, 3, d);
    const auto mons = unique_mis_3_monomials(d);
    return VertexSet::of_monomials(g, mons);
}

std::vector<ExponentVector> unique_mis_4_monomials(std::uint64_t d)
{
    if (d % 2 != 0)
        throw domain_error("the n = 4 construction needs even d, got d = " + std::to_string(d));
    std::vector<ExponentVector> out;
    for (const auto& m : enumerate_monomials(4, d, static_cast<std::size_t>(-1))) {
        const auto& e = m.exponents();
        const bool all_even = std::all_of(e.begin(), e.end(), [](E x) { return x % 2 == 0; });
        const bool all_odd = std::all_of(e.begin(), e.end(), [](E x) { return x % 2 == 1; });
        if (all_even || all_odd)
            out.push_back(m);
    }
    return out;
}

VertexSet construct_unique_mis_4(const Graph& g)
{
    if (!g.shape())
        throw identity_error("construction expects G_4(d), got " + g.tag());
    const auto d = g.shape()->d;
    require_graph(g, 4, d);
    const auto mons = unique_mis_4_monomials(d);
    return VertexSet::of_monomials(g, mons);
}

std::uint64_t parity_set_size(std::uint64_t d)
{
    if (d % 2 != 0)
        throw domain_error("parity set size is defined for even d");
    return binom3(d / 2 + 3) + binom3(d / 2 + 1);
}

VertexSet construct_rim_independent_choice(const Graph& g, const RimLayer& layer, std::size_t anchor)
{
    layer.members.check_owner(g);
    if (!layer.members.contains(anchor))
        throw index_error("anchor " + std::to_string(anchor) + " is not in rim layer " + std::to_string(layer.level));
    if (layer.degenerate)
        return VertexSet::of(g, std::vector<std::size_t>{anchor});
    const auto& cycle = layer.cycle;
    if (cycle.size() % 2 != 0)
        throw domain_error("rim layer " + std::to_string(layer.level) + " is an odd cycle of length " +
                           std::to_string(cycle.size()) + "; no alternating half exists");
    const auto pos = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), anchor) - cycle.begin());
    std::vector<std::size_t> picked;
    for (std::size_t k = 0; k < cycle.size(); k += 2)
        picked.push_back(cycle[(pos + k) % cycle.size()]);
    return VertexSet::of(g, std::move(picked));
}

} // namespace monogrid
