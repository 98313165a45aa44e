#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "trisat/bits.hpp"

namespace trisat {

/// Sizes (n1, n2, n3) of the three parts V_1, V_2, V_3.
using PartSizes = std::array<int, 3>;

/// Vertex v_part^index; both coordinates are 1-based.
struct VertexRef {
    int part = 1;
    int index = 1;

    auto operator<=>(const VertexRef&) const = default;
};

/// A cross-part vertex pair, stored with u.part < v.part.
struct Edge {
    VertexRef u;
    VertexRef v;

    auto operator<=>(const Edge&) const = default;
};

/// Normalizes an unordered cross-part pair; throws on a same-part pair.
Edge make_edge(VertexRef a, VertexRef b);

/// Canonical edge order: part pair (1,2) < (1,3) < (2,3), then lexicographic by (a, b).
bool canonical_less(const Edge& lhs, const Edge& rhs);

std::string to_string(VertexRef v);
std::string to_string(const Edge& e);

class GraphBuilder;

/// A graph on V_1 ∪ V_2 ∪ V_3 whose edges only join distinct parts.
///
/// Values are immutable once built; GraphBuilder is the single-owner mutable form.
/// Adjacency is kept for every ordered pair of parts (i, j) as an n_i x n_j bit
/// matrix, so both directions of a part pair answer row queries directly.
class TripartiteGraph {
public:
    /// Edgeless graph on the given part sizes (any order, each >= 1).
    static TripartiteGraph empty(PartSizes sizes);
    /// Complete tripartite graph on the given part sizes (any order, each >= 1).
    static TripartiteGraph complete(PartSizes sizes);

    const PartSizes& part_sizes() const { return sizes_; }
    int part_size(int part) const { return sizes_.at(static_cast<std::size_t>(part - 1)); }
    int vertex_count() const { return sizes_[0] + sizes_[1] + sizes_[2]; }

    bool contains_vertex(VertexRef v) const;
    bool has_edge(VertexRef a, VertexRef b) const;
    std::size_t edge_count() const { return edge_count_; }
    /// Number of edges between parts i and j (1-based, i != j).
    std::size_t pair_edge_count(int i, int j) const;

    /// All edges in canonical order.
    std::vector<Edge> edges() const;

    int degree(VertexRef v) const;
    /// |N_other(v)|.
    int degree_into(VertexRef v, int other_part) const;
    std::vector<VertexRef> neighbors_in(VertexRef v, int other_part) const;

    /// Raw adjacency row of vertex (part0, idx0) towards part other0; all 0-based.
    std::span<const bits::Word> row(int part0, int idx0, int other0) const
    {
        return adj_[part0][other0].row(static_cast<std::size_t>(idx0));
    }
    std::size_t words(int part0) const { return bits::words_for(static_cast<std::size_t>(sizes_[part0])); }

    TripartiteGraph with_edge(VertexRef a, VertexRef b) const;
    TripartiteGraph without_edge(VertexRef a, VertexRef b) const;

    bool operator==(const TripartiteGraph& other) const
    {
        return sizes_ == other.sizes_ && adj_ == other.adj_;
    }

private:
    friend class GraphBuilder;
    explicit TripartiteGraph(PartSizes sizes);

    void check_vertex(VertexRef v) const;
    void set_pair(VertexRef a, VertexRef b, bool present);

    PartSizes sizes_{};
    std::array<std::array<bits::BitMatrix, 3>, 3> adj_{};
    std::size_t edge_count_ = 0;
};

/// Mutable construction handle; publish with build().
class GraphBuilder {
public:
    explicit GraphBuilder(PartSizes sizes);
    explicit GraphBuilder(TripartiteGraph start);

    /// Throws on a same-part pair or an edge that is already present.
    GraphBuilder& add_edge(VertexRef a, VertexRef b);
    /// Throws on a same-part pair or a missing edge.
    GraphBuilder& remove_edge(VertexRef a, VertexRef b);
    /// Adds the edge unless it is already present; returns whether it was added.
    bool ensure_edge(VertexRef a, VertexRef b);

    const TripartiteGraph& view() const { return graph_; }
    TripartiteGraph build() const& { return graph_; }
    TripartiteGraph build() && { return std::move(graph_); }

private:
    TripartiteGraph graph_;
};

/// The host K_{n1,n2,n3}; requires n1 >= n2 >= n3 >= 1.
TripartiteGraph new_host(int n1, int n2, int n3);

struct DegreeProfile {
    /// δ_i for each part (0 for an empty part never occurs since parts are nonempty).
    std::array<int, 3> min_degree{};
    /// split[part-1][index-1][other-1] = |N_other(v)|; the own-part entry is 0.
    std::array<std::vector<std::array<int, 3>>, 3> split;

    int degree(VertexRef v) const;
};

DegreeProfile degree_profile(const TripartiteGraph& g);

/// Host edges absent from g, in canonical order.  Throws if g is not a subgraph of host.
std::vector<Edge> nonedges(const TripartiteGraph& g, const TripartiteGraph& host);

/// Part-respecting isomorphism: a permutation of equal-size parts combined with
/// within-part relabelings.  Exact backtracking search.
bool iso_equivalent(const TripartiteGraph& a, const TripartiteGraph& b);

} // namespace trisat
