#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trisat/containment.hpp"
#include "trisat/formulas.hpp"
#include "trisat/graph.hpp"
#include "trisat/verifier.hpp"

namespace trisat {

enum class ConstructionKind { c1, c2, c3, c4, c5, c4cycle };

std::string to_string(ConstructionKind kind);
/// Accepts "1".."5" and "c4" (also "c1".."c5" and "c4cycle").
ConstructionKind parse_construction(const std::string& name);

struct ConstructionParams {
    ConstructionKind kind = ConstructionKind::c1;
    int variant = 1; ///< which part i the C2 removal is anchored at
    int l = 1;
    int m = 1;
    int p = 0;
    PartSizes n{};
};

/// Why params fall outside the regime where the generated graph is guaranteed
/// saturated, or nullopt.  Balanced constructions (C4, C5) also require n1 = n2 = n3.
std::optional<std::string> parameter_problem(const ConstructionParams& params);

/// Smallest balanced n for which parameter_problem is empty.  For C2 only the size
/// bound is considered, so m = 1 still yields a value.
int smallest_valid_n(ConstructionKind kind, int l, int m, int p = 0);

// The generators throw std::invalid_argument on parameters outside their regime
// unless force is set; force still rejects parameters that cannot be built at all.

/// Hubs S_i = the top m indices of V_i joined to everything; circulant residual of
/// maximum degree l - m; the triangle v1^{n1} v2^{n2} v3^{n3} removed.
TripartiteGraph construction1(int l, int m, PartSizes n, bool force = false);
/// Construction 1 with the removed triangle replaced by the path
/// {v_i^{n_i} v_{i+1}^{n_{i+1}}, v_i^{n_i - 1} v_{i+2}^{n_{i+2}}, v_{i+1}^{n_{i+1}} v_{i+2}^{n_{i+2}}}.
TripartiteGraph construction2(int variant, int l, int m, PartSizes n, bool force = false);
/// Hubs S_i = the bottom m - 1 indices; residual pairs joined by circulants in which
/// every vertex of the smaller part has exactly l - m residual neighbours.
TripartiteGraph construction3(int l, int m, int p, PartSizes n, bool force = false);
/// Balanced: hubs S_i (m), blocks T_i (floor((l-m)/2)) joined cyclically, a triangle-free
/// (l-m)-regular residual, and the triangle v1^1 v2^1 v3^1 removed.
TripartiteGraph construction4(int l, int m, int n, bool force = false);
/// Balanced: hubs S_i (m - 1), blocks T_i joined cyclically, (l-m)-regular residual pairs.
TripartiteGraph construction5(int l, int m, int p, int n, bool force = false);
/// Stars v_i^1 -> V_{i+1}; n1 + n2 + n3 edges.
TripartiteGraph construction_c4(PartSizes n, bool force = false);

TripartiteGraph build_construction(const ConstructionParams& params, bool force = false);

/// The pattern the construction is saturated for: (l,m,m) for C1/C2/C4,
/// (l,m,p) for C3/C5 and (2,2,0) for the C4 construction.
PatternSpec target_pattern(const ConstructionParams& params);

/// The closed-form edge count matching the construction.
BoundRecord construction_formula(const ConstructionParams& params);

/// Hub vertices (S_i and T_i) of a construction; the rest is its residual graph.
IndexRanges hub_layout(const ConstructionParams& params);

/// Difference sets (d31, d32, d21) over Z_N, each of size d, with d31 disjoint from
/// d32 + d21, so that the circulant tripartite graph they define is triangle-free
/// and d-regular between every pair.  Uses the contiguous windows (0..d-1, 0..d-1,
/// d..2d-1) when N >= 3d - 1, otherwise the lexicographically first solution of an
/// exhaustive search.  nullopt when none exists.
std::optional<std::array<std::vector<int>, 3>> triangle_free_offsets(int N, int d);

} // namespace trisat
