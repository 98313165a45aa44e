#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "trisat/formulas.hpp"
#include "trisat/rng.hpp"

using namespace trisat;

TEST_CASE("construction upper bounds")
{
    CHECK(f_con1_upper(4, 4, 4, 1, 1).value == 18);
    CHECK(f_con1_upper(7, 6, 6, 2, 1).value == 47);
    auto r = f_con1_upper(5, 5, 5, 1, 1);
    CHECK(r.value == 24);
    CHECK(r.hypothesis_satisfied);
    CHECK(r.kind == BoundKind::upper);
    CHECK(f_con3_upper(5, 5, 5, 2, 2, 1).value == 27);
    CHECK(f_con4_upper(12, 3, 1).value == 129);
    CHECK(f_con5_upper(8, 4, 2, 1).value == 84);
    CHECK_THROWS_AS(f_con3_upper(5, 5, 5, 2, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(f_con1_upper(4, 5, 4, 1, 1), std::invalid_argument);
}

TEST_CASE("exact values for K_{l,l,l} and K_{l,l,l-1}")
{
    auto a = f_sat_lll(450, 450, 450, 2);
    CHECK(a.value == 5385);
    CHECK(a.hypothesis_satisfied);
    CHECK(a.kind == BoundKind::exact);
    auto b = f_sat_lll(100, 100, 100, 1);
    CHECK(b.value == 594);
    CHECK(b.hypothesis_satisfied);
    auto c = f_sat_lll(5, 5, 5, 2);
    CHECK(c.value == 45);
    CHECK_FALSE(c.hypothesis_satisfied);
    CHECK(c.kind == BoundKind::upper);
    CHECK(large_part_threshold(1) == 83);
    CHECK(large_part_threshold(2) == 438);

    CHECK(f_sat_lll1(100, 100, 100, 2).value == 597);
    CHECK(f_sat_lll1(100, 100, 100, 2).hypothesis_satisfied);
    CHECK(f_sat_lll1(83, 83, 83, 2).value == 495);
    CHECK(f_sat_lll1(83, 83, 83, 2).hypothesis_satisfied);
    CHECK_FALSE(f_sat_lll1(82, 82, 82, 2).hypothesis_satisfied);
    CHECK(f_sat_lll1(10, 10, 10, 3).value == 108);
    CHECK_FALSE(f_sat_lll1(10, 10, 10, 3).hypothesis_satisfied);
    CHECK_THROWS(f_sat_lll1(10, 10, 10, 1));
}

TEST_CASE("lower bound for K_{l,l,l-2}")
{
    auto r = f_lll2_lower(1000, 3);
    CHECK(r.value == 11418);
    CHECK(r.kind == BoundKind::lower);
    CHECK_FALSE(r.hypothesis_satisfied);
    CHECK_FALSE(r.note.empty());
    CHECK_THROWS(f_lll2_lower(100, 2));
    for (std::int64_t n : {10, 50, 1000, 123456})
        CHECK(f_con5_upper(n, 3, 3, 1).value - f_lll2_lower(n, 3).value == 570);
}

TEST_CASE("C4 value")
{
    CHECK(f_c4(2, 2, 2).value == 6);
    CHECK(f_c4(2, 2, 2).kind == BoundKind::exact);
    CHECK(f_c4(3, 2, 2).value == 7);
    CHECK_FALSE(f_c4(2, 2, 1).hypothesis_satisfied);
}

TEST_CASE("reference formulas")
{
    CHECK(f_ehm(10, 3).value == 9);
    CHECK(f_ehm(10, 4).value == 17);
    CHECK(f_bw(5, 5, 2, 2).value == 9);
    CHECK(f_fjpw(3, 200).value == 1194);
    CHECK(f_fjpw(3, 200).hypothesis_satisfied);
    CHECK_FALSE(f_fjpw(3, 99).hypothesis_satisfied);
    CHECK(f_ms_upper(10, 2, 2).value == 20 - 1);
    CHECK(f_gks_lower(10, 2, 2).value == 20 - 4);
    for (auto r : {f_ehm(10, 3), f_bw(5, 5, 2, 2), f_ms_upper(10, 2, 2), f_gks_lower(10, 2, 2), f_fjpw(3, 200)})
        CHECK(r.kind == BoundKind::reference);
}

TEST_CASE("identities between formulas")
{
    XorShift64Star rng(7);
    for (int k = 0; k < 500; ++k) {
        std::int64_t n = 1 + static_cast<std::int64_t>(rng.next() % 100000);
        std::int64_t l = 2 + static_cast<std::int64_t>(rng.next() % 40);
        CHECK(f_sat_lll(n, n, n, l).value == f_con1_upper(n, n, n, l, l).value);
        std::int64_t n1 = n + static_cast<std::int64_t>(rng.next() % 50), n2 = n + static_cast<std::int64_t>(rng.next() % 3);
        if (n2 > n1)
            std::swap(n1, n2);
        CHECK(f_sat_lll1(n1, n2, n, l).value == f_con3_upper(n1, n2, n, l, l, l - 1).value);
        std::int64_t m = 2 + static_cast<std::int64_t>(rng.next() % 40);
        CHECK(f_gks_lower(n, l, m).value <= f_ms_upper(n, l, m).value);
    }
    for (std::int64_t n = 3; n <= 400; ++n)
        CHECK(f_sat_lll(n, n, n, 1).value == f_fjpw(3, n).value);
}

TEST_CASE("overflow is reported rather than wrapped")
{
    std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2;
    CHECK_THROWS_AS(f_con1_upper(big, big, big, 3, 1), std::overflow_error);
    CHECK_NOTHROW(f_con1_upper(1000000000, 1000000000, 1000000000, 1000, 10));
    CHECK(f_sat_lll(1000000000, 1000000000, 1000000000, 1).value == 5999999994);
}

TEST_CASE("formula lookup by name")
{
    CHECK(evaluate_formula("sat_lll", {{"n1", 450}, {"n2", 450}, {"n3", 450}, {"l", 2}}).value == 5385);
    CHECK(evaluate_formula("fjpw", {{"k", 3}, {"n", 200}}).value == 1194);
    CHECK_THROWS_AS(evaluate_formula("nope", {}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_formula("fjpw", {{"k", 3}}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_formula("fjpw", {{"k", 3}, {"n", 5}, {"x", 1}}), std::invalid_argument);
    for (const auto& [name, params] : formula_catalog())
        CHECK_FALSE(params.empty());
}
