#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trisat/constructions.hpp"

namespace trisat {

/// Rejected experiment specification; what() names the offending field.
class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One table row.  "construct" builds a construction (its target pattern is searched
/// when greedy_trials or exact are set); "search" only searches host n for (l, m, p).
struct ExperimentRun {
    std::string action;
    std::optional<ConstructionKind> construction;
    int variant = 1;
    int l = 1;
    int m = 1;
    int p = 0;
    PartSizes n{};
    bool force = false;
    int greedy_trials = 0;
    std::uint64_t seed = 0;
    bool exact = false;
    /// Graph file for the construction, written when set.
    std::string output;
};

inline constexpr int experiment_spec_version = 1;

struct ExperimentSpec {
    int version = experiment_spec_version;
    std::vector<ExperimentRun> runs;
};

/// {"version": 1, "runs": [{"action": ..., ...}, ...]}; unknown fields are errors.
ExperimentSpec parse_experiment_spec(std::string_view json_text);
ExperimentSpec read_experiment_spec(const std::string& path);

inline constexpr const char* table_header =
    "action,construction,variant,l,m,p,n1,n2,n3,construction_edges,formula_value,greedy_min,exact_value,"
    "hypothesis_satisfied";

/// CSV (LF line endings) with table_header and one row per run, in spec order.
std::string run_experiment_table(const ExperimentSpec& spec, int threads = 0);

} // namespace trisat
