// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "trisat/constructions.hpp"
#include "trisat/formulas.hpp"
#include "trisat/parallel.hpp"
#include "trisat/rng.hpp"
#include "trisat/search.hpp"
#include "trisat/verifier.hpp"

using namespace trisat;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failures;

    void fail(const std::string& why)
    {
        pass = false;
        failures.push_back(why);
    }
};

SearchOptions single_thread()
{
    SearchOptions o;
    o.threads = 1;
    return o;
}

void c4_exact(Outcome& o)
{
    for (auto [host, expected] : {std::pair{PartSizes{2, 2, 2}, 6}, std::pair{PartSizes{3, 2, 2}, 7}}) {
        auto t0 = Clock::now();
        auto r = sat_exact(host, {2, 2, 0}, single_thread());
        double dt = seconds_since(t0);
        o.detail << "(" << host[0] << "," << host[1] << "," << host[2] << ")=" << (r.value ? *r.value : -1) << " in "
                 << dt << "s; ";
        if (r.status != SearchStatus::exact || r.value != expected)
            o.fail("wrong value on host (" + std::to_string(host[0]) + ",...)");
        if (dt >= 10.0)
            o.fail("over 10 s");
    }
}

void construction_grid(Outcome& o)
{
    struct Point {
        ConstructionKind kind;
        int l, m, p;
    };
    std::vector<Point> grid;
    for (auto k : {ConstructionKind::c1, ConstructionKind::c2})
        for (auto [l, m] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}})
            grid.push_back({k, l, m, m});
    for (auto k : {ConstructionKind::c3, ConstructionKind::c5})
        for (auto t : {std::array{2, 2, 1}, {3, 2, 1}, {3, 3, 2}, {4, 2, 1}})
            grid.push_back({k, t[0], t[1], t[2]});
    for (auto [l, m] : {std::pair{1, 1}, {3, 1}, {4, 2}})
        grid.push_back({ConstructionKind::c4, l, m, m});

    auto t0 = Clock::now();
    int points = 0;
    for (const auto& q : grid) {
        int n0 = smallest_valid_n(q.kind, q.l, q.m, q.p);
        for (int n : {n0, n0 + 3}) {
            ++points;
            ConstructionParams prm{q.kind, 1, q.l, q.m, q.p, {n, n, n}};
            std::string name = "C" + to_string(q.kind) + "(" + std::to_string(q.l) + "," + std::to_string(q.m) + "," +
                               std::to_string(q.p) + ") n=" + std::to_string(n);
            // Parameters outside the generator's regime (C2 with m = 1) are built with force
            // and left to the verifier.
            bool force = parameter_problem(prm).has_value();
            auto g = build_construction(prm, force);
            bool saturated = is_saturated(g, prm.n, target_pattern(prm)).saturated();
            auto formula = construction_formula(prm).value;
            if (!saturated)
                o.fail(name + " not saturated");
            if (static_cast<std::int64_t>(g.edge_count()) != formula)
                o.fail(name + " has " + std::to_string(g.edge_count()) + " edges, formula " + std::to_string(formula));
        }
    }
    double dt = seconds_since(t0);
    o.detail << points << " grid points in " << dt << "s";
    if (dt >= 300.0)
        o.fail("over 5 minutes");
}

void exact_vs_exhaustive(Outcome& o)
{
    std::vector<PartSizes> hosts;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int c = 1; c <= 2; ++c)
                hosts.push_back({a, b, c});
    hosts.push_back({3, 2, 2});
    auto t0 = Clock::now();
    int cases = 0;
    for (const auto& host : hosts)
        for (PatternSpec pat : {PatternSpec{1, 1, 1}, PatternSpec{2, 1, 1}, PatternSpec{2, 2, 0}, PatternSpec{2, 2, 1}}) {
            ++cases;
            auto exact = sat_exact(host, pat);
            auto brute = sat_exhaustive(host, pat);
            if (exact.status != SearchStatus::exact || exact.value != brute.value)
                o.fail("host (" + std::to_string(host[0]) + "," + std::to_string(host[1]) + "," +
                       std::to_string(host[2]) + ") " + to_string(pat) + ": exact " +
                       std::to_string(exact.value.value_or(-1)) + " vs exhaustive " +
                       std::to_string(brute.value.value_or(-1)));
        }
    double dt = seconds_since(t0);
    o.detail << cases << " instances in " << dt << "s";
    if (dt >= 120.0)
        o.fail("over 2 minutes");
}

void large_part_values(Outcome& o)
{
    XorShift64Star rng(4);
    for (int k = 0; k < 100; ++k) {
        std::int64_t n = 1 + static_cast<std::int64_t>(rng.next() % 5000);
        std::int64_t l = 2 + static_cast<std::int64_t>(rng.next() % 30);
        std::int64_t n1 = n + static_cast<std::int64_t>(rng.next() % 100);
        std::int64_t n2 = n + static_cast<std::int64_t>(rng.next() % 100);
        if (n2 > n1)
            std::swap(n1, n2);
        if (f_sat_lll(n, n, n, l).value != f_con1_upper(n, n, n, l, l).value)
            o.fail("lll identity at n=" + std::to_string(n) + " l=" + std::to_string(l));
        if (f_sat_lll1(n1, n2, n, l).value != f_con3_upper(n1, n2, n, l, l, l - 1).value)
            o.fail("lll1 identity at n=" + std::to_string(n) + " l=" + std::to_string(l));
    }
    auto t0 = Clock::now();
    auto g = construction1(1, 1, {100, 100, 100});
    bool saturated = is_saturated(g, {100, 100, 100}, {1, 1, 1}).saturated();
    double dt = seconds_since(t0);
    auto exact = f_sat_lll(100, 100, 100, 1);
    o.detail << "K_{100,100,100} triangle construction: " << g.edge_count() << " edges, saturated=" << saturated
             << ", " << dt << "s; ";
    if (!saturated || g.edge_count() != 594 || exact.value != 594 || exact.value != 2 * 300 - 6 ||
        !exact.hypothesis_satisfied)
        o.fail("n=100 triangle case");
    if (dt >= 60.0)
        o.fail("over 60 s");
    for (std::int64_t n = 100; n <= 200; ++n)
        if (f_sat_lll(n, n, n, 1).value != f_fjpw(3, n).value)
            o.fail("triangle value differs at n=" + std::to_string(n));
    o.detail << "identities on 100 random points and n in [100,200]";
}

void sandwich(Outcome& o)
{
    for (std::int64_t l : {3, 4, 5}) {
        std::int64_t gaps[2];
        int k = 0;
        for (std::int64_t n : {50, 500}) {
            auto lower = f_lll2_lower(n, l).value;
            auto upper = f_con5_upper(n, l, l, l - 2).value;
            if (lower > upper)
                o.fail("lower above upper at l=" + std::to_string(l) + " n=" + std::to_string(n));
            gaps[k++] = upper - lower;
        }
        o.detail << "l=" << l << " gap " << gaps[0] << "; ";
        if (gaps[0] != gaps[1])
            o.fail("gap depends on n at l=" + std::to_string(l));
    }
}

void containment_oracle(Outcome& o)
{
    XorShift64Star rng(600);
    auto t0 = Clock::now();
    int present = 0;
    for (int trial = 0; trial < 500; ++trial) {
        PartSizes s{1 + static_cast<int>(rng.next() % 4), 1 + static_cast<int>(rng.next() % 4),
                    1 + static_cast<int>(rng.next() % 4)};
        int l = 1 + static_cast<int>(rng.next() % 3);
        int m = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(l));
        int p = static_cast<int>(rng.next() % static_cast<std::uint64_t>(m + 1));
        PatternSpec pat(l, m, p);
        double density = 0.3 + 0.7 * static_cast<double>(rng.next() % 1000) / 1000.0;
        GraphBuilder b(s);
        for (const Edge& e : TripartiteGraph::complete(s).edges())
            if (static_cast<double>(rng.next() % 1000) / 1000.0 < density)
                b.add_edge(e.u, e.v);
        auto g = std::move(b).build();
        auto fast = contains(g, pat);
        auto slow = contains_naive(g, pat);
        present += fast.has_value();
        if (fast.has_value() != slow.has_value())
            o.fail("existence differs on trial " + std::to_string(trial));
        if (fast && embedding_problem(g, pat, *fast))
            o.fail("invalid embedding on trial " + std::to_string(trial));
        if (slow && embedding_problem(g, pat, *slow))
            o.fail("invalid naive embedding on trial " + std::to_string(trial));
    }
    double dt = seconds_since(t0);
    o.detail << "500 graphs, " << present << " containing the pattern, " << dt << "s";
    if (dt >= 60.0)
        o.fail("over 60 s");
}

void greedy_soundness(Outcome& o)
{
    XorShift64Star rng(1000);
    std::map<std::pair<PartSizes, PatternSpec>, std::int64_t> exact_cache;
    int compared = 0;
    VerifyOptions vo;
    vo.early_exit = true;
    for (int run = 0; run < 1000; ++run) {
        std::array<int, 3> s{1 + static_cast<int>(rng.next() % 8), 1 + static_cast<int>(rng.next() % 8),
                             1 + static_cast<int>(rng.next() % 8)};
        std::sort(s.rbegin(), s.rend());
        PatternSpec pat = run % 2 ? PatternSpec{2, 2, 1} : PatternSpec{1, 1, 1};
        std::uint64_t seed = rng.next();
        auto g = greedy_trial(s, pat, seed, 0);
        if (!is_saturated(g, s, pat, vo).saturated())
            o.fail("greedy output not saturated on run " + std::to_string(run));
        if (TripartiteGraph::complete(s).edge_count() <= 16) {
            auto key = std::make_pair(s, pat);
            if (!exact_cache.count(key))
                exact_cache[key] = *sat_exact(s, pat).value;
            ++compared;
            if (static_cast<std::int64_t>(g.edge_count()) < exact_cache[key])
                o.fail("greedy below exact on run " + std::to_string(run));
        }
    }
    o.detail << "1000 runs, " << compared << " compared with exact values";
}

void uniqueness_probe(Outcome& o)
{
    SearchOptions one = single_thread(), many;
    many.threads = std::max(4, worker_count());
    auto a = enumerate_optima({2, 2, 2}, {2, 2, 0}, one);
    auto b = enumerate_optima({2, 2, 2}, {2, 2, 0}, many);
    bool found = false;
    for (const auto& w : a.witnesses)
        found = found || iso_equivalent(w, construction_c4({2, 2, 2}));
    o.detail << a.witnesses.size() << " optimum class(es) of value " << a.value.value_or(-1) << "; threads 1 and "
             << many.threads;
    if (!found)
        o.fail("stars construction not among the optima");
    if (a.witnesses != b.witnesses || a.value != b.value)
        o.fail("witness set depends on thread count");
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"C4 exact values", c4_exact},
        {"construction grid", construction_grid},
        {"exact equals exhaustive", exact_vs_exhaustive},
        {"large-part values", large_part_values},
        {"K_{l,l,l-2} sandwich", sandwich},
        {"containment oracle", containment_oracle},
        {"greedy soundness", greedy_soundness},
        {"optimum enumeration", uniqueness_probe},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            criteria[k].second(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << k + 1 << " [" << criteria[k].first << "]: " << (o.pass ? "PASS" : "FAIL") << " - "
                  << o.detail.str();
        if (!o.pass) {
            ++failed;
            std::cout << " | failures:";
            for (const auto& f : o.failures)
                std::cout << ' ' << f << ';';
        }
        std::cout << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
