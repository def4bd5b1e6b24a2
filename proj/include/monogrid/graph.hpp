#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monogrid/bitset.hpp"
#include "monogrid/monomial.hpp"

namespace monogrid {

struct GraphShape {
    std::size_t n = 0;
    std::size_t d = 0;
    friend bool operator==(const GraphShape&, const GraphShape&) = default;
};

/// Immutable simple undirected graph with dense adjacency rows.
///
/// Graphs built from monomials carry their exponent vectors as labels and
/// the (n, d) shape; imported graphs are unlabeled. Every graph has a
/// deterministic tag naming how it was constructed, which VertexSet uses
/// to reject indices from a different graph.
class Graph {
public:
    Graph() = default;
    Graph(std::string tag, std::vector<Bitset> adjacency, std::vector<ExponentVector> labels = {},
          std::optional<GraphShape> shape = std::nullopt, bool complete = false);

    const std::string& tag() const noexcept { return tag_; }
    std::size_t size() const noexcept { return adj_.size(); }
    bool empty() const noexcept { return adj_.empty(); }

    const Bitset& neighbors(std::size_t v) const { return adj_.at(v); }
    const std::vector<Bitset>& adjacency() const noexcept { return adj_; }
    bool has_edge(std::size_t u, std::size_t v) const { return adj_.at(u).test(v); }
    std::size_t degree(std::size_t v) const { return adj_.at(v).count(); }
    std::size_t edge_count() const noexcept;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    bool labeled() const noexcept { return !labels_.empty() || adj_.empty(); }
    const std::vector<ExponentVector>& labels() const noexcept { return labels_; }
    const ExponentVector& label(std::size_t v) const { return labels_.at(v); }

    /// (n, d) for graphs whose labels are degree-d monomials in n variables.
    const std::optional<GraphShape>& shape() const noexcept { return shape_; }
    /// True only for the full G_n(d) as produced by build_graph.
    bool is_complete_monomial_graph() const noexcept { return complete_; }

    std::optional<std::size_t> index_of(const ExponentVector& v) const;
    std::size_t require_index(const ExponentVector& v) const;

    Bitset all_vertices() const { return Bitset::full(size()); }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.tag_ == b.tag_ && a.adj_ == b.adj_ && a.labels_ == b.labels_ && a.shape_ == b.shape_ &&
               a.complete_ == b.complete_;
    }

private:
    std::string tag_;
    std::vector<Bitset> adj_;
    std::vector<ExponentVector> labels_;
    std::optional<GraphShape> shape_;
    bool complete_ = false;
    std::map<ExponentVector, std::size_t> index_;
};

/// Subset of the vertices of one graph, identified by that graph's tag.
class VertexSet {
public:
    VertexSet() = default;

    static VertexSet of(const Graph& g, std::vector<std::size_t> members);
    static VertexSet of(const Graph& g, const Bitset& members);
    static VertexSet of_monomials(const Graph& g, std::span<const ExponentVector> monomials);
    static VertexSet empty_of(const Graph& g) { return of(g, std::vector<std::size_t>{}); }
    static VertexSet all_of(const Graph& g);

    const std::string& graph_tag() const noexcept { return tag_; }
    const std::vector<std::size_t>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(std::size_t v) const;

    /// Throws identity_error unless this set was made for `g`.
    void check_owner(const Graph& g) const;
    Bitset bits(const Graph& g) const;
    std::vector<ExponentVector> monomials(const Graph& g) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

private:
    std::string tag_;
    std::vector<std::size_t> members_;
    std::size_t universe_ = 0;
};

struct BuildOptions {
    std::size_t vertex_cap = default_vertex_cap;
};

/// G_n(d) over the canonical (lexicographically decreasing) vertex order.
Graph build_graph(std::size_t n, std::size_t d, const BuildOptions& options = {});

/// Graph restricted to `s`; vertex order inherited from the parent.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph delete_vertices(const Graph& g, const VertexSet& s);

struct Slice {
    VertexSet members;
    Graph induced;
    /// relabeled[i] is induced.label(i) with the sliced coordinate deleted.
    std::vector<ExponentVector> relabeled;
};

/// Vertices with exponent `e` on variable `var` (1-based) and the subgraph
/// they induce, which is a copy of G_{n-1}(d-e) under coordinate deletion.
Slice slice(const Graph& g, std::size_t var, std::size_t e);

struct RimLayer {
    std::size_t level = 0;
    VertexSet members;
    /// Boundary walk of the layer, starting from the lowest index. Consecutive
    /// members are adjacent; the layer also has chords next to each corner.
    std::vector<std::size_t> cycle;
    /// Single isolated vertex standing in for a cycle of length 0.
    bool degenerate = false;
};

/// Concentric layers of G_3(a) by minimum exponent; layer i carries a
/// Hamiltonian cycle of length 3a - 9i or is a single vertex.
std::vector<RimLayer> rim_cycle_decomposition(const Graph& g);

/// True iff `map` (a -> b vertex indices) is a bijection preserving both
/// edges and non-edges.
bool is_isomorphism(const Graph& a, const Graph& b, std::span<const std::size_t> map);

/// Vertex map a -> b sending each label of `a` through `relabel` and
/// looking it up in `b`; nullopt if some image is absent.
template <typename F>
std::optional<std::vector<std::size_t>> label_map(const Graph& a, const Graph& b, F&& relabel)
{
    std::vector<std::size_t> map(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) {
        auto idx = b.index_of(relabel(a.label(v)));
        if (!idx)
            return std::nullopt;
        map[v] = *idx;
    }
    return map;
}

} // namespace monogrid
