#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace trisat {

enum class BoundKind { exact, upper, lower, reference };

std::string to_string(BoundKind kind);

/// A closed-form value together with the parameter hypotheses it is stated under.
///
/// hypothesis_satisfied is the literal evaluation of the stated inequalities;
/// asymptotic hypotheses ("n sufficiently large") are never reported as satisfied,
/// and `note` says so.
struct BoundRecord {
    std::string name;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::int64_t value = 0;
    BoundKind kind = BoundKind::reference;
    bool hypothesis_satisfied = false;
    std::string hypothesis;
    std::string note;
    std::string anchor;
};

// Upper bounds realised by the constructions.
BoundRecord f_con1_upper(std::int64_t n1, std::int64_t n2, std::int64_t n3, std::int64_t l, std::int64_t m);
BoundRecord f_con3_upper(std::int64_t n1, std::int64_t n2, std::int64_t n3, std::int64_t l, std::int64_t m,
                         std::int64_t p);
BoundRecord f_con4_upper(std::int64_t n, std::int64_t l, std::int64_t m);
BoundRecord f_con5_upper(std::int64_t n, std::int64_t l, std::int64_t m, std::int64_t p);

// Exact values for K_{l,l,l} and K_{l,l,l-1}, the K_{l,l,l-2} lower bound and C4.
BoundRecord f_sat_lll(std::int64_t n1, std::int64_t n2, std::int64_t n3, std::int64_t l);
BoundRecord f_sat_lll1(std::int64_t n1, std::int64_t n2, std::int64_t n3, std::int64_t l);
BoundRecord f_lll2_lower(std::int64_t n, std::int64_t l);
BoundRecord f_c4(std::int64_t n1, std::int64_t n2, std::int64_t n3);

// Comparison values from the literature.
BoundRecord f_ehm(std::int64_t n, std::int64_t k);
BoundRecord f_bw(std::int64_t n1, std::int64_t n2, std::int64_t l, std::int64_t m);
BoundRecord f_ms_upper(std::int64_t n, std::int64_t l, std::int64_t m);
BoundRecord f_gks_lower(std::int64_t n, std::int64_t l, std::int64_t m);
BoundRecord f_fjpw(std::int64_t k, std::int64_t n);

/// Thresholds on n3 for the exact K_{l,l,l} / K_{l,l,l-1} values: 32x^3 + 40x^2 + 11x.
std::int64_t large_part_threshold(std::int64_t x);

/// Formula names accepted by evaluate_formula, with their parameter names in order.
const std::vector<std::pair<std::string, std::vector<std::string>>>& formula_catalog();

/// Looks a formula up by name (e.g. "sat_lll", "fjpw", "con1") and evaluates it.
/// Throws std::invalid_argument on unknown names or missing/extra parameters.
BoundRecord evaluate_formula(const std::string& name, const std::map<std::string, std::int64_t>& params);

} // namespace trisat
