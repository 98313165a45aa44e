#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "trisat/constructions.hpp"
#include "trisat/verifier.hpp"

using namespace trisat;

namespace {

// Edge count from the construction's structure: hubs joined to everything, residual
// windows of d = l - m neighbours, and the removed triangle or path.
std::int64_t c1_count(int l, int m, PartSizes n)
{
    int d = l - m;
    return oracle::hub_edges(n, {m, m, m}) + std::int64_t{d} * (2 * (n[2] - m) + (n[1] - m)) - 3;
}

bool saturated(const TripartiteGraph& g, const PatternSpec& pat)
{
    return is_saturated(g, g.part_sizes(), pat).saturated();
}

} // namespace

TEST_CASE("construction 1 edge counts")
{
    CHECK(construction1(1, 1, {4, 4, 4}).edge_count() == 18);
    CHECK(construction1(2, 1, {7, 6, 6}).edge_count() == 47);
    for (auto [l, m] : {std::pair{1, 1}, {2, 1}, {3, 1}, {3, 2}, {4, 2}, {5, 3}})
        for (int extra : {0, 1, 4}) {
            int n3 = std::max(l + 2, 3 * l - 2 * m - 1) + extra;
            PartSizes n{n3 + 3, n3 + 1, n3};
            auto g = construction1(l, m, n);
            CHECK(static_cast<std::int64_t>(g.edge_count()) == c1_count(l, m, n));
            CHECK(static_cast<std::int64_t>(g.edge_count()) == f_con1_upper(n[0], n[1], n[2], l, m).value);
        }
}

TEST_CASE("small constructions are saturated by the brute-force definition")
{
    CHECK(oracle::naive_saturated(construction1(1, 1, {3, 3, 3}), {1, 1, 1}));
    CHECK(oracle::naive_saturated(construction1(1, 1, {5, 5, 5}), {1, 1, 1}));
    CHECK(oracle::naive_saturated(construction_c4({2, 2, 2}), {2, 2, 0}));
    CHECK(oracle::naive_saturated(construction_c4({3, 2, 2}), {2, 2, 0}));
    CHECK(oracle::naive_saturated(construction3(2, 2, 1, {3, 3, 3}), {2, 2, 1}));
    CHECK(oracle::naive_saturated(construction5(3, 2, 1, 3), {3, 2, 1}));
}

TEST_CASE("construction 2 variants")
{
    PartSizes n{6, 5, 4};
    for (int v = 1; v <= 3; ++v) {
        auto g = construction2(v, 2, 2, n);
        CHECK(g.edge_count() == construction1(2, 2, n).edge_count());
        CHECK(saturated(g, {2, 2, 2}));
        CHECK_FALSE(g == construction1(2, 2, n));
    }
    CHECK_THROWS_AS(construction2(1, 1, 1, {3, 3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(construction2(4, 2, 2, n), std::invalid_argument);
    // Forced with m = 1 the hub pair left joined closes a triangle through V_{i+1}.
    auto forced = construction2(1, 1, 1, {3, 3, 3}, true);
    CHECK(contains(forced, {1, 1, 1}));
}

TEST_CASE("construction 3 edge counts and saturation")
{
    CHECK(construction3(2, 2, 1, {5, 5, 5}).edge_count() == 27);
    for (auto [l, m, p] : {std::array{2, 2, 1}, {3, 2, 1}, {4, 3, 1}, {4, 2, 1}}) {
        PartSizes n{l + 3, l + 1, l};
        auto g = construction3(l, m, p, n);
        std::int64_t expected = oracle::hub_edges(n, {m - 1, m - 1, m - 1}) +
                                std::int64_t{l - m} * ((n[1] - m + 1) + 2 * (n[2] - m + 1));
        CHECK(static_cast<std::int64_t>(g.edge_count()) == expected);
        CHECK(static_cast<std::int64_t>(g.edge_count()) == f_con3_upper(n[0], n[1], n[2], l, m, p).value);
        CHECK(saturated(g, {l, m, p}));
    }
    CHECK_THROWS_AS(construction3(2, 2, 2, {5, 5, 5}), std::invalid_argument);
    CHECK_THROWS_AS(construction3(3, 2, 1, {5, 5, 2}), std::invalid_argument);
}

TEST_CASE("construction 4 residual structure")
{
    auto g = construction4(3, 1, 12);
    CHECK(g.edge_count() == 129);
    ConstructionParams prm{ConstructionKind::c4, 1, 3, 1, 1, {12, 12, 12}};
    auto diag = residual_structure_check(g, hub_layout(prm));
    CHECK(diag.triangle_free);
    for (const auto& row : diag.degrees)
        for (int q = 0; q < 3; ++q)
            if (q != row.vertex.part - 1)
                CHECK(row.residual_degree[q] == 2);
    CHECK(saturated(g, {3, 1, 1}));
}

TEST_CASE("construction 5 residual structure")
{
    auto g = construction5(4, 2, 1, 8);
    CHECK(g.edge_count() == 84);
    ConstructionParams prm{ConstructionKind::c5, 1, 4, 2, 1, {8, 8, 8}};
    auto diag = residual_structure_check(g, hub_layout(prm));
    CHECK(diag.degrees.size() == 3 * (8 - 1 - 1));
    for (const auto& row : diag.degrees)
        for (int q = 0; q < 3; ++q)
            if (q != row.vertex.part - 1)
                CHECK(row.residual_degree[q] == 2);
    CHECK(saturated(g, {4, 2, 1}));
}

TEST_CASE("triangle-free offsets")
{
    for (int d = 1; d <= 5; ++d)
        for (int N = d; N <= 3 * d + 2; ++N) {
            auto sets = triangle_free_offsets(N, d);
            if (!sets)
                continue;
            const auto& [d31, d32, d21] = *sets;
            for (const auto* s : {&d31, &d32, &d21}) {
                CHECK(static_cast<int>(s->size()) == d);
                CHECK(std::set<int>(s->begin(), s->end()).size() == s->size());
            }
            std::set<int> sums;
            for (int x : d32)
                for (int y : d21)
                    sums.insert((x + y) % N);
            for (int x : d31)
                CHECK_FALSE(sums.count(x % N));
        }
    CHECK_FALSE(triangle_free_offsets(2, 2));
    CHECK(triangle_free_offsets(5, 2));
}

TEST_CASE("parameter checks and forced builds")
{
    CHECK_THROWS_AS(construction1(1, 1, {2, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(construction1(1, 1, {3, 4, 3}), std::invalid_argument);
    CHECK_NOTHROW(construction1(1, 1, {2, 2, 2}, true));
    CHECK_THROWS_AS(construction4(3, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(construction_c4({2, 2, 1}), std::invalid_argument);
    CHECK(construction_c4({2, 2, 1}, true).edge_count() == 5);
    ConstructionParams unbalanced{ConstructionKind::c5, 1, 3, 2, 1, {4, 4, 3}};
    CHECK(parameter_problem(unbalanced).has_value());
    CHECK_THROWS(build_construction(unbalanced, true));
}

TEST_CASE("smallest valid sizes")
{
    CHECK(smallest_valid_n(ConstructionKind::c1, 1, 1) == 3);
    CHECK(smallest_valid_n(ConstructionKind::c1, 3, 2) == 5);
    CHECK(smallest_valid_n(ConstructionKind::c2, 2, 1) == 4);
    CHECK(smallest_valid_n(ConstructionKind::c3, 4, 2, 1) == 4);
    CHECK(smallest_valid_n(ConstructionKind::c4, 3, 1) == 6);
    CHECK(smallest_valid_n(ConstructionKind::c4, 4, 2) == 7);
    CHECK(smallest_valid_n(ConstructionKind::c5, 2, 2, 1) == 1);
    CHECK(smallest_valid_n(ConstructionKind::c5, 4, 2, 1) == 4);
}

TEST_CASE("C4 construction")
{
    auto g = construction_c4({3, 2, 2});
    CHECK(g.edge_count() == 7);
    CHECK(saturated(g, {2, 2, 0}));
    CHECK(target_pattern({ConstructionKind::c4cycle, 1, 2, 2, 0, {3, 2, 2}}) == PatternSpec{2, 2, 0});
    CHECK(construction_formula({ConstructionKind::c4cycle, 1, 2, 2, 0, {3, 2, 2}}).value == 7);
}

TEST_CASE("construction names")
{
    CHECK(parse_construction("1") == ConstructionKind::c1);
    CHECK(parse_construction("c4") == ConstructionKind::c4cycle);
    CHECK(parse_construction("4") == ConstructionKind::c4);
    CHECK_THROWS(parse_construction("6"));
    CHECK(to_string(ConstructionKind::c4cycle) == "c4");
}
