#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trisat/graph.hpp"

namespace trisat {

/// Complete tripartite pattern K_{l,m,p} with l >= m >= p >= 0 and m >= 1.
/// p = 0 gives the complete bipartite K_{l,m}; C4 is PatternSpec{2, 2, 0}.
struct PatternSpec {
    int l = 1;
    int m = 1;
    int p = 1;

    PatternSpec() = default;
    /// Throws std::invalid_argument unless l >= m >= p >= 0 and m >= 1.
    PatternSpec(int l_, int m_, int p_);

    std::array<int, 3> class_sizes() const { return {l, m, p}; }
    int vertex_count() const { return l + m + p; }
    bool bipartite() const { return p == 0; }

    auto operator<=>(const PatternSpec&) const = default;
};

std::string to_string(const PatternSpec& pat);

/// A copy of the pattern: classes[k] holds the vertices of the class of size
/// class_sizes()[k], sorted.  classes[2] is empty for bipartite patterns.
struct Embedding {
    std::array<std::vector<VertexRef>, 3> classes;

    auto operator<=>(const Embedding&) const = default;
};

/// Returns a description of the first violated Embedding invariant, or nullopt if
/// emb is a valid copy of pat in g.  `extra`, when given, counts as an edge of g.
std::optional<std::string> embedding_problem(const TripartiteGraph& g, const PatternSpec& pat, const Embedding& emb,
                                             const std::optional<Edge>& extra = std::nullopt);

/// First copy of pat in g in the fixed exploration order, if any.
std::optional<Embedding> contains(const TripartiteGraph& g, const PatternSpec& pat);

/// Copies of pat in g + uv that use both u and v.  The edge uv itself is treated as
/// present whether or not g has it, and no assumption is made about g.
std::optional<Embedding> contains_through(const TripartiteGraph& g, const PatternSpec& pat, VertexRef u, VertexRef v);

/// contains(g + uv, pat) for a pattern-free g and a cross-part nonedge uv.  Only
/// copies through uv are searched, which is exact when g is pattern-free; pass
/// check_pattern_free to have that precondition verified (throws std::logic_error).
std::optional<Embedding> contains_after(const TripartiteGraph& g, const PatternSpec& pat, VertexRef u, VertexRef v,
                                        bool check_pattern_free = false);

/// Brute-force oracle: tries every assignment of vertices to pattern classes,
/// with no assumption about how classes sit in parts.  At most 15 vertices.
std::optional<Embedding> contains_naive(const TripartiteGraph& g, const PatternSpec& pat);

inline constexpr int naive_vertex_limit = 15;

} // namespace trisat
