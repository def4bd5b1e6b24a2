#include "monogrid/stars.hpp"

#include "monogrid/errors.hpp"
#include "monogrid/mis.hpp"

namespace monogrid {

namespace {

void fill_monomials(const Graph& g, StarWitness& w)
{
    if (g.labels().empty())
        return;
    w.center_monomial = g.label(w.center);
    w.leaf_monomials.clear();
    for (auto l : w.leaves)
        w.leaf_monomials.push_back(g.label(l));
}

} // namespace

StarFreeness is_k1r_free(const Graph& g, std::size_t r)
{
    if (r == 0)
        throw domain_error("star size r must be at least 1");
    for (std::size_t v = 0; v < g.size(); ++v) {
        const Bitset& nb = g.neighbors(v);
        if (nb.count() < r)
            continue;
        const VertexSet hood = VertexSet::of(g, nb);
        const Graph local = induced_subgraph(g, hood);
        const SolveReport rep = max_independent_set(local);
        if (!rep.exact)
            throw validation_error("neighborhood search ran out of budget");
        if (rep.objective < r)
            continue;
        StarWitness w;
        w.center = v;
        const auto& picked = rep.witnesses.front().members();
        for (std::size_t k = 0; k < r; ++k)
            w.leaves.push_back(hood.members()[picked[k]]);
        fill_monomials(g, w);
        if (!verify_star(g, w))
            throw validation_error("star witness failed verification");
        return {false, std::move(w)};
    }
    return {true, std::nullopt};
}

bool k1r_free_criterion(std::size_t n, std::size_t d, std::size_t r)
{
    return d < r || n < r;
}

StarWitness build_star_witness(std::size_t n, std::size_t d, std::size_t r)
{
    if (r == 0)
        throw domain_error("star size r must be at least 1");
    if (d < r || n < r)
        throw domain_error("G_" + std::to_string(n) + "(" + std::to_string(d) + ") has no K_{1," + std::to_string(r) +
                           "} witness: needs d >= r and n >= r");
    if (r == 1 && n < 2)
        throw domain_error("G_1(d) is a single vertex and contains no K_{1,1}");

    using E = ExponentVector::value_type;
    std::vector<E> center(n, 0);
    center[0] = static_cast<E>(d - r + 1);
    for (std::size_t i = 1; i < r; ++i)
        center[i] = 1;

    auto shifted = [&](std::size_t up, std::size_t down) {
        std::vector<E> e = center;
        ++e[up];
        --e[down];
        return ExponentVector(std::move(e));
    };
    std::vector<ExponentVector> leaves;
    if (r == 1) {
        leaves.push_back(shifted(1, 0));
    } else {
        for (std::size_t i = 0; i + 1 < r; ++i)
            leaves.push_back(shifted(i, i + 1));
        leaves.push_back(shifted(r - 1, 0));
    }

    const Graph g = build_graph(n, d);
    StarWitness w;
    w.center = g.require_index(ExponentVector(center));
    for (const auto& l : leaves)
        w.leaves.push_back(g.require_index(l));
    fill_monomials(g, w);
    if (!verify_star(g, w))
        throw validation_error("constructed star is not an induced K_{1,r}");
    return w;
}

bool verify_star(const Graph& g, const StarWitness& w)
{
    if (w.center >= g.size())
        return false;
    for (std::size_t a = 0; a < w.leaves.size(); ++a) {
        const std::size_t u = w.leaves[a];
        if (u >= g.size() || u == w.center || !g.has_edge(w.center, u))
            return false;
        for (std::size_t b = a + 1; b < w.leaves.size(); ++b)
            if (u == w.leaves[b] || g.has_edge(u, w.leaves[b]))
                return false;
    }
    return true;
}

nlohmann::json to_json(const StarWitness& w)
{
    nlohmann::json j;
    j["center"] = w.center;
    j["leaves"] = w.leaves;
    if (w.center_monomial) {
        j["center_monomial"] = w.center_monomial->exponents();
        nlohmann::json leaves = nlohmann::json::array();
        for (const auto& l : w.leaf_monomials)
            leaves.push_back(l.exponents());
        j["leaf_monomials"] = std::move(leaves);
    }
    return j;
}

} // namespace monogrid
