#include "monogrid/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

#include "monogrid/errors.hpp"

namespace monogrid {

namespace {

std::string hash_members(const std::vector<std::size_t>& members)
{
    // FNV-1a over the member list; only needs to separate distinct subsets
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(members.size());
    for (auto m : members)
        mix(m);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace

Graph::Graph(std::string tag, std::vector<Bitset> adjacency, std::vector<ExponentVector> labels,
             std::optional<GraphShape> shape, bool complete)
    : tag_(std::move(tag)), adj_(std::move(adjacency)), labels_(std::move(labels)), shape_(shape),
      complete_(complete)
{
    if (!labels_.empty() && labels_.size() != adj_.size())
        throw shape_error("label count does not match vertex count");
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        if (adj_[v].width() != adj_.size())
            throw shape_error("adjacency row width does not match vertex count");
        if (adj_[v].test(v))
            throw format_error("self-loop at vertex " + std::to_string(v));
    }
    for (std::size_t u = 0; u < adj_.size(); ++u)
        adj_[u].for_each([&](std::size_t v) {
            if (!adj_[v].test(u))
                throw format_error("adjacency is not symmetric at (" + std::to_string(u) + ", " +
                                   std::to_string(v) + ")");
        });
    for (std::size_t v = 0; v < labels_.size(); ++v)
        if (!index_.emplace(labels_[v], v).second)
            throw format_error("duplicate vertex label " + labels_[v].to_plain_string());
}

std::size_t Graph::edge_count() const noexcept
{
    std::size_t twice = 0;
    for (const auto& row : adj_)
        twice += row.count();
    return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (auto v = adj_[u].next(u); v != Bitset::npos; v = adj_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

std::optional<std::size_t> Graph::index_of(const ExponentVector& v) const
{
    auto it = index_.find(v);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t Graph::require_index(const ExponentVector& v) const
{
    auto idx = index_of(v);
    if (!idx)
        throw index_error("monomial " + v.to_monomial_string() + " is not a vertex of " + tag_);
    return *idx;
}

VertexSet VertexSet::of(const Graph& g, std::vector<std::size_t> members)
{
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && members.back() >= g.size())
        throw index_error("vertex index " + std::to_string(members.back()) + " out of range for " + g.tag() +
                          " with " + std::to_string(g.size()) + " vertices");
    VertexSet s;
    s.tag_ = g.tag();
    s.members_ = std::move(members);
    s.universe_ = g.size();
    return s;
}

VertexSet VertexSet::of(const Graph& g, const Bitset& members)
{
    if (members.width() != g.size())
        throw shape_error("bit row width does not match " + g.tag());
    return of(g, members.indices());
}

VertexSet VertexSet::of_monomials(const Graph& g, std::span<const ExponentVector> monomials)
{
    std::vector<std::size_t> idx;
    idx.reserve(monomials.size());
    for (const auto& m : monomials)
        idx.push_back(g.require_index(m));
    return of(g, std::move(idx));
}

VertexSet VertexSet::all_of(const Graph& g)
{
    std::vector<std::size_t> all(g.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    return of(g, std::move(all));
}

bool VertexSet::contains(std::size_t v) const
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::check_owner(const Graph& g) const
{
    if (tag_ != g.tag() || universe_ != g.size())
        throw identity_error("vertex set built for " + (tag_.empty() ? std::string("<none>") : tag_) +
                             " used with " + g.tag());
}

Bitset VertexSet::bits(const Graph& g) const
{
    check_owner(g);
    Bitset b(g.size());
    for (auto m : members_)
        b.set(m);
    return b;
}

std::vector<ExponentVector> VertexSet::monomials(const Graph& g) const
{
    check_owner(g);
    std::vector<ExponentVector> out;
    out.reserve(members_.size());
    for (auto m : members_)
        out.push_back(g.label(m));
    return out;
}

Graph build_graph(std::size_t n, std::size_t d, const BuildOptions& options)
{
    auto vertices = enumerate_monomials(n, d, options.vertex_cap);
    const std::size_t count = vertices.size();
    std::map<ExponentVector, std::size_t> index;
    for (std::size_t i = 0; i < count; ++i)
        index.emplace(vertices[i], i);

    std::vector<Bitset> adj(count, Bitset(count));
    std::vector<ExponentVector::value_type> work;
    for (std::size_t u = 0; u < count; ++u) {
        // neighbors are exactly u + e_i - e_j with i != j and u_j > 0
        const auto& base = vertices[u].exponents();
        for (std::size_t j = 0; j < n; ++j) {
            if (base[j] == 0)
                continue;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == j)
                    continue;
                work = base;
                ++work[i];
                --work[j];
                auto it = index.find(ExponentVector(work));
                if (it != index.end())
                    adj[u].set(it->second);
            }
        }
    }
    return Graph("G_" + std::to_string(n) + "(" + std::to_string(d) + ")", std::move(adj), std::move(vertices),
                 GraphShape{n, d}, true);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s)
{
    s.check_owner(g);
    if (s.size() == g.size())
        return g;
    const auto& members = s.members();
    const std::size_t k = members.size();
    std::vector<Bitset> adj(k, Bitset(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (g.has_edge(members[a], members[b])) {
                adj[a].set(b);
                adj[b].set(a);
            }
    std::vector<ExponentVector> labels;
    if (!g.labels().empty()) {
        labels.reserve(k);
        for (auto m : members)
            labels.push_back(g.label(m));
    }
    return Graph(g.tag() + "/sub:" + hash_members(members), std::move(adj), std::move(labels), g.shape(), false);
}

Graph delete_vertices(const Graph& g, const VertexSet& s)
{
    return induced_subgraph(g, VertexSet::of(g, g.all_vertices() - s.bits(g)));
}

Slice slice(const Graph& g, std::size_t var, std::size_t e)
{
    if (!g.shape() || g.labels().empty())
        throw domain_error("slice requires a monomial-labeled graph");
    const auto [n, d] = *g.shape();
    if (n < 2)
        throw index_error("slicing needs at least two variables");
    if (var < 1 || var > n)
        throw index_error("variable index " + std::to_string(var) + " outside 1.." + std::to_string(n));
    if (e > d)
        throw index_error("exponent " + std::to_string(e) + " exceeds degree " + std::to_string(d));

    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (g.label(v)[var - 1] == e)
            members.push_back(v);
    Slice out;
    out.members = VertexSet::of(g, std::move(members));
    out.induced = induced_subgraph(g, out.members);
    out.relabeled.reserve(out.induced.size());
    for (const auto& m : out.induced.labels())
        out.relabeled.push_back(delete_coordinate(m, var - 1));
    return out;
}

std::vector<RimLayer> rim_cycle_decomposition(const Graph& g)
{
    if (!g.shape() || g.shape()->n != 3 || !g.is_complete_monomial_graph())
        throw domain_error("rim cycle decomposition is defined for G_3(a) only");
    const std::size_t a = g.shape()->d;
    std::vector<RimLayer> layers;
    for (std::size_t i = 0; 3 * i <= a; ++i) {
        std::vector<std::size_t> members;
        for (std::size_t v = 0; v < g.size(); ++v)
            if (g.label(v).min_exponent() == i)
                members.push_back(v);
        RimLayer layer;
        layer.level = i;
        layer.members = VertexSet::of(g, members);
        const std::size_t expected = 3 * a - 9 * i;
        if (expected == 0) {
            if (members.size() != 1)
                throw validation_error("degenerate rim layer must be a single vertex");
            layer.degenerate = true;
            layer.cycle = members;
        } else {
            if (members.size() != expected)
                throw validation_error("rim layer " + std::to_string(i) + " has " + std::to_string(members.size()) +
                                       " vertices, expected " + std::to_string(expected));
            // boundary walk of the shifted triangle: x1 -> x2 -> x3 -> x1
            const std::size_t b = a - 3 * i;
            for (std::size_t side = 0; side < 3; ++side)
                for (std::size_t k = 0; k < b; ++k) {
                    std::vector<std::uint32_t> e(3, static_cast<std::uint32_t>(i));
                    e[side] += static_cast<std::uint32_t>(b - k);
                    e[(side + 1) % 3] += static_cast<std::uint32_t>(k);
                    layer.cycle.push_back(g.require_index(ExponentVector(e)));
                }
            for (std::size_t k = 0; k < layer.cycle.size(); ++k)
                if (!g.has_edge(layer.cycle[k], layer.cycle[(k + 1) % layer.cycle.size()]))
                    throw validation_error("rim layer " + std::to_string(i) + " walk is broken");
        }
        layers.push_back(std::move(layer));
    }
    return layers;
}

bool is_isomorphism(const Graph& a, const Graph& b, std::span<const std::size_t> map)
{
    if (a.size() != b.size() || map.size() != a.size())
        return false;
    std::vector<bool> hit(b.size(), false);
    for (auto m : map) {
        if (m >= b.size() || hit[m])
            return false;
        hit[m] = true;
    }
    for (std::size_t u = 0; u < a.size(); ++u)
        for (std::size_t v = u + 1; v < a.size(); ++v)
            if (a.has_edge(u, v) != b.has_edge(map[u], map[v]))
                return false;
    return true;
}

} // namespace monogrid
