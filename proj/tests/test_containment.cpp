#include <doctest.h>

#include "oracles.hpp"
#include "trisat/containment.hpp"

using namespace trisat;

TEST_CASE("pattern validation")
{
    CHECK_NOTHROW(PatternSpec(2, 2, 0));
    CHECK_NOTHROW(PatternSpec(1, 1, 1));
    CHECK_THROWS_AS(PatternSpec(1, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(PatternSpec(2, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(PatternSpec(1, 0, 0), std::invalid_argument);
    CHECK(PatternSpec(3, 2, 1).vertex_count() == 6);
    CHECK(PatternSpec(2, 2, 0).bipartite());
}

TEST_CASE("triangle search on small graphs")
{
    auto host = TripartiteGraph::complete({2, 2, 2});
    auto emb = contains(host, {1, 1, 1});
    REQUIRE(emb);
    CHECK_FALSE(embedding_problem(host, {1, 1, 1}, *emb));

    auto path = TripartiteGraph::empty({1, 1, 1}).with_edge({1, 1}, {2, 1}).with_edge({2, 1}, {3, 1});
    CHECK_FALSE(contains(path, {1, 1, 1}));
    auto through = contains_through(path, {1, 1, 1}, {1, 1}, {3, 1});
    REQUIRE(through);
    CHECK_FALSE(embedding_problem(path, {1, 1, 1}, *through, Edge{{1, 1}, {3, 1}}));
    CHECK(embedding_problem(path, {1, 1, 1}, *through).has_value());
    CHECK(contains_after(path, {1, 1, 1}, {3, 1}, {1, 1}));
}

TEST_CASE("C4 may use two parts or spread over three")
{
    // v1^1, v1^2 both joined to v2^1, v3^1: a C4 with classes split over parts 2 and 3.
    GraphBuilder b(PartSizes{2, 1, 1});
    b.add_edge({1, 1}, {2, 1});
    b.add_edge({1, 2}, {2, 1});
    b.add_edge({1, 1}, {3, 1});
    b.add_edge({1, 2}, {3, 1});
    auto g = std::move(b).build();
    auto emb = contains(g, {2, 2, 0});
    REQUIRE(emb);
    CHECK_FALSE(embedding_problem(g, {2, 2, 0}, *emb));
    // A K_{2,2,1} cannot split a class.
    CHECK_FALSE(contains(g, {2, 1, 1}));
    CHECK_FALSE(contains_naive(g, {2, 1, 1}));
}

TEST_CASE("embedding checker catches each invariant")
{
    auto g = TripartiteGraph::complete({2, 2, 2});
    PatternSpec pat{2, 1, 1};
    Embedding good{{std::vector<VertexRef>{{1, 1}, {1, 2}}, {{2, 1}}, {{3, 1}}}};
    CHECK_FALSE(embedding_problem(g, pat, good));
    Embedding wrong_size{{std::vector<VertexRef>{{1, 1}}, {{2, 1}}, {{3, 1}}}};
    CHECK(embedding_problem(g, pat, wrong_size));
    Embedding split{{std::vector<VertexRef>{{1, 1}, {2, 2}}, {{2, 1}}, {{3, 1}}}};
    CHECK(embedding_problem(g, pat, split));
    Embedding repeated{{std::vector<VertexRef>{{1, 1}, {1, 1}}, {{2, 1}}, {{3, 1}}}};
    CHECK(embedding_problem(g, pat, repeated));
    CHECK(embedding_problem(g.without_edge({1, 2}, {3, 1}), pat, good));
}

TEST_CASE("contains agrees with the brute-force search on random graphs")
{
    XorShift64Star rng(2024);
    const PatternSpec pats[] = {{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {2, 2, 0}, {3, 2, 0}, {2, 1, 0}, {3, 1, 1}, {2, 2, 2}};
    int found = 0;
    for (int trial = 0; trial < 400; ++trial) {
        PartSizes s{1 + static_cast<int>(rng.next() % 4), 1 + static_cast<int>(rng.next() % 4),
                    1 + static_cast<int>(rng.next() % 3)};
        auto g = oracle::random_graph(s, 0.3 + 0.1 * (trial % 6), rng);
        for (const auto& pat : pats) {
            auto fast = contains(g, pat);
            auto slow = contains_naive(g, pat);
            REQUIRE(fast.has_value() == slow.has_value());
            if (fast) {
                ++found;
                CHECK_FALSE(embedding_problem(g, pat, *fast));
                CHECK_FALSE(embedding_problem(g, pat, *slow));
            }
        }
    }
    CHECK(found > 300);
}

TEST_CASE("contains_after matches a full search of the extended graph")
{
    XorShift64Star rng(5);
    const PatternSpec pats[] = {{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {2, 2, 0}};
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        PartSizes s{1 + static_cast<int>(rng.next() % 4), 1 + static_cast<int>(rng.next() % 4),
                    1 + static_cast<int>(rng.next() % 3)};
        auto g = oracle::random_graph(s, 0.35, rng);
        for (const auto& pat : pats) {
            if (contains(g, pat))
                continue;
            for (const Edge& e : nonedges(g, TripartiteGraph::complete(s))) {
                auto after = contains_after(g, pat, e.u, e.v, true);
                auto full = contains_naive(g.with_edge(e.u, e.v), pat);
                REQUIRE(after.has_value() == full.has_value());
                if (after)
                    CHECK_FALSE(embedding_problem(g, pat, *after, e));
                ++checked;
            }
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("contains_after preconditions")
{
    auto g = TripartiteGraph::complete({2, 2, 2});
    CHECK_THROWS(contains_after(g, {1, 1, 1}, {1, 1}, {2, 1}));
    auto e = TripartiteGraph::empty({2, 2, 2});
    CHECK_THROWS(contains_after(e, {1, 1, 1}, {1, 1}, {1, 2}));
    auto tri = g.without_edge({1, 1}, {2, 1});
    CHECK_THROWS_AS(contains_after(tri, {1, 1, 1}, {1, 1}, {2, 1}, true), std::logic_error);
}

TEST_CASE("naive search refuses large graphs")
{
    CHECK_THROWS(contains_naive(TripartiteGraph::empty({6, 5, 5}), {1, 1, 1}));
}
