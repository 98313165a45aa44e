#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trisat/containment.hpp"
#include "trisat/graph.hpp"

namespace trisat {

struct SaturationReport {
    bool is_pattern_free = false;
    std::optional<Embedding> forbidden_witness;
    /// Host nonedges whose addition completes no copy of the pattern, canonical order.
    std::vector<Edge> violating_nonedges;
    std::size_t checked_nonedges = 0;
    /// (δ1, δ2, δ3).
    std::array<int, 3> min_degree{};

    bool saturated() const { return is_pattern_free && violating_nonedges.empty(); }
};

struct VerifyOptions {
    /// Workers for the nonedge scan; 0 means worker_count().
    int threads = 0;
    /// Stop at the first violating nonedge in canonical order.
    bool early_exit = false;
};

/// Decides whether g is a pat-saturated subgraph of K_{host}.  Throws
/// std::invalid_argument when g's part sizes differ from host.
SaturationReport is_saturated(const TripartiteGraph& g, const PartSizes& host, const PatternSpec& pat,
                              const VerifyOptions& options = {});

enum class CheckStatus { satisfied, violated, not_applicable };
std::string to_string(CheckStatus status);

/// One minimum-degree inequality evaluated on a graph.
struct DegreeCheck {
    std::string name;
    /// 0 for the whole graph, else the part whose δ_i is bounded.
    int part = 0;
    int bound = 0;
    int observed = 0;
    CheckStatus status = CheckStatus::not_applicable;
    /// A vertex attaining the observed minimum when the inequality fails.
    std::optional<VertexRef> offending;
    std::string note;
};

/// Minimum-degree facts expected of saturated graphs: δ(G) >= 2m for K_{l,l,m}, and
/// δ_i >= 2l - 2 for every part when the pattern is K_{l,l,l-2} with l >= 3.  Empty for
/// other pattern shapes; every entry is not_applicable when g is not saturated.
/// Diagnostics only: the inequalities are proven for large parts.
std::vector<DegreeCheck> degree_threshold_check(const TripartiteGraph& g, const PatternSpec& pat);

/// Inclusive 1-based index ranges per part.
using IndexRanges = std::array<std::vector<std::pair<int, int>>, 3>;

struct ResidualDegree {
    VertexRef vertex;
    /// Neighbours among residual vertices of each part (own part entry 0).
    std::array<int, 3> residual_degree{};
};

struct ResidualDiagnostics {
    bool triangle_free = true;
    std::optional<std::array<VertexRef, 3>> triangle;
    /// One row per residual vertex, by part then index.
    std::vector<ResidualDegree> degrees;
};

/// Structure of g with the `excluded` vertices removed.  Throws std::invalid_argument
/// on ranges that leave their part.
ResidualDiagnostics residual_structure_check(const TripartiteGraph& g, const IndexRanges& excluded);

} // namespace trisat
