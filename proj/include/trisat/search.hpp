#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trisat/containment.hpp"
#include "trisat/graph.hpp"

namespace trisat {

enum class SearchMethod { exact, exhaustive, greedy };
enum class SearchStatus { exact, inconclusive, sampled };

std::string to_string(SearchMethod method);
std::string to_string(SearchStatus status);
SearchMethod parse_search_method(const std::string& name);

struct SearchResult {
    SearchMethod method = SearchMethod::exact;
    /// inconclusive when the node budget ran out; value is then the best incumbent.
    SearchStatus status = SearchStatus::exact;
    /// Edge count of the witnesses; nullopt only when an inconclusive run found none.
    std::optional<std::int64_t> value;
    /// One graph when minimizing, all optima when enumerating.
    std::vector<TripartiteGraph> witnesses;
    std::uint64_t nodes_explored = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    int best_trial = -1;
};

struct SearchOptions {
    std::optional<std::uint64_t> node_budget;
    /// 0 means worker_count().
    int threads = 0;
    /// Refuse hosts with more edges than this.
    int edge_guard = 40;
};

inline constexpr int exhaustive_edge_limit = 16;

/// Minimum edge count of a pat-saturated subgraph of K_{host}.  Branches over host
/// edges in canonical order, include first; the witness is the first optimum in that
/// order whatever the thread count.  Throws std::invalid_argument above the edge guard.
SearchResult sat_exact(const PartSizes& host, const PatternSpec& pat, const SearchOptions& options = {});

/// All minimum saturated subgraphs, one per part-respecting isomorphism class,
/// in canonical edge-list order.
SearchResult enumerate_optima(const PartSizes& host, const PatternSpec& pat, const SearchOptions& options = {});

/// Checks all 2^|E| subgraphs; returns every minimum witness in subset order.
/// At most exhaustive_edge_limit host edges.
SearchResult sat_exhaustive(const PartSizes& host, const PatternSpec& pat, int threads = 0);

/// Best of `trials` random maximal pattern-free subgraphs.  Trial t scans the host
/// edges in a Fisher-Yates order drawn from XorShift64Star::for_trial(seed, t).
SearchResult sat_greedy(const PartSizes& host, const PatternSpec& pat, int trials, std::uint64_t seed,
                        int threads = 0);

/// One greedy trial, exposed for testing.
TripartiteGraph greedy_trial(const PartSizes& host, const PatternSpec& pat, std::uint64_t seed, std::uint64_t trial);

/// Lexicographic comparison of canonical edge lists (part sizes first).
bool canonical_graph_less(const TripartiteGraph& a, const TripartiteGraph& b);

} // namespace trisat
