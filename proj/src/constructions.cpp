#include "trisat/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "trisat/verifier.hpp"

namespace trisat {

std::string to_string(ConstructionKind kind)
{
    switch (kind) {
    case ConstructionKind::c1:
        return "1";
    case ConstructionKind::c2:
        return "2";
    case ConstructionKind::c3:
        return "3";
    case ConstructionKind::c4:
        return "4";
    case ConstructionKind::c5:
        return "5";
    case ConstructionKind::c4cycle:
        return "c4";
    }
    return "?";
}

ConstructionKind parse_construction(const std::string& name)
{
    if (name == "1" || name == "c1")
        return ConstructionKind::c1;
    if (name == "2" || name == "c2")
        return ConstructionKind::c2;
    if (name == "3" || name == "c3")
        return ConstructionKind::c3;
    if (name == "4")
        return ConstructionKind::c4;
    if (name == "5" || name == "c5")
        return ConstructionKind::c5;
    if (name == "c4" || name == "c4cycle")
        return ConstructionKind::c4cycle;
    throw std::invalid_argument("unknown construction '" + name + "'");
}

namespace {

int half_gap(int l, int m) { return (l - m) / 2; }

bool ordered(const PartSizes& n) { return n[0] >= n[1] && n[1] >= n[2] && n[2] >= 1; }
bool balanced(const PartSizes& n) { return n[0] == n[1] && n[1] == n[2]; }

// ((x - 1) mod N) + 1
int wrap(int x, int N) { return ((x - 1) % N + N) % N + 1; }

void fail(const std::string& what) { throw std::invalid_argument(what); }

// Joins each listed vertex of `part` to every vertex of the other two parts.
void join_hubs(GraphBuilder& b, int part, int first, int last)
{
    const auto& n = b.view().part_sizes();
    for (int x = first; x <= last; ++x)
        for (int q = 1; q <= 3; ++q)
            if (q != part)
                for (int y = 1; y <= n[q - 1]; ++y)
                    b.ensure_edge({part, x}, {q, y});
}

void join_blocks(GraphBuilder& b, int i, int j, int first, int last)
{
    for (int x = first; x <= last; ++x)
        for (int y = first; y <= last; ++y)
            b.ensure_edge({i, x}, {j, y});
}

// Vertex at residual position a of part `from` (indices base+1..base+N_from) joined to
// residual positions a + off, off in offsets, of part `to` (indices base_to + 1..).
void join_circulant(GraphBuilder& b, int from, int from_base, int from_count, int to, int to_base, int to_count,
                    const std::vector<int>& offsets)
{
    for (int a = 1; a <= from_count; ++a)
        for (int off : offsets)
            b.ensure_edge({from, from_base + a}, {to, to_base + wrap(a + off, to_count)});
}

std::vector<int> window(int first, int count)
{
    std::vector<int> w;
    for (int k = 0; k < count; ++k)
        w.push_back(first + k);
    return w;
}

void check_residual(const TripartiteGraph& g, const ConstructionParams& params, bool need_triangle_free)
{
    int d = params.l - params.m;
    auto diag = residual_structure_check(g, hub_layout(params));
    if (need_triangle_free && !diag.triangle_free)
        throw std::logic_error("residual graph is not triangle-free");
    for (const auto& row : diag.degrees)
        for (int q = 0; q < 3; ++q)
            if (q != row.vertex.part - 1 && row.residual_degree[q] != d)
                throw std::logic_error("residual vertex " + to_string(row.vertex) + " has " +
                                       std::to_string(row.residual_degree[q]) + " residual neighbours in part " +
                                       std::to_string(q + 1) + ", expected " + std::to_string(d));
}

// C1 without its final removal.
GraphBuilder construction1_base(int l, int m, const PartSizes& n)
{
    GraphBuilder b(n);
    for (int i = 1; i <= 3; ++i)
        join_hubs(b, i, n[i - 1] - m + 1, n[i - 1]);
    int d = l - m;
    if (d > 0) {
        int r1 = n[0] - m, r2 = n[1] - m, r3 = n[2] - m;
        join_circulant(b, 3, 0, r3, 1, 0, r1, window(0, d));
        join_circulant(b, 3, 0, r3, 2, 0, r2, window(0, d));
        join_circulant(b, 2, 0, r2, 1, 0, r1, window(d, d));
    }
    return b;
}

} // namespace

std::optional<std::string> parameter_problem(const ConstructionParams& prm)
{
    const auto& n = prm.n;
    int l = prm.l, m = prm.m, p = prm.p;
    if (!ordered(n))
        return "host sizes must satisfy n1 >= n2 >= n3 >= 1";
    int t = half_gap(l, m);
    switch (prm.kind) {
    case ConstructionKind::c1:
    case ConstructionKind::c2:
        if (!(l >= m && m >= 1))
            return "needs l >= m >= 1";
        if (n[2] < std::max(l + 2, 3 * l - 2 * m - 1))
            return "needs n3 >= max{l+2, 3l-2m-1} = " + std::to_string(std::max(l + 2, 3 * l - 2 * m - 1));
        if (prm.kind == ConstructionKind::c2) {
            if (prm.variant < 1 || prm.variant > 3)
                return "variant must be 1, 2 or 3";
            if (m < 2)
                return "needs m >= 2 so that v_i^{n_i-1} is a hub vertex";
        }
        return std::nullopt;
    case ConstructionKind::c3:
        if (!(l >= m && m > p && p >= 1))
            return "needs l >= m > p >= 1";
        if (n[2] < l)
            return "needs n3 >= l";
        return std::nullopt;
    case ConstructionKind::c4:
        if (!(l >= m && m >= 1))
            return "needs l >= m >= 1";
        if (!balanced(n))
            return "needs a balanced host n1 = n2 = n3";
        if (n[0] < std::max(l + 2, 3 * l + t - 2 * m - 2))
            return "needs n >= max{l+2, 3l+floor((l-m)/2)-2m-2} = " +
                   std::to_string(std::max(l + 2, 3 * l + t - 2 * m - 2));
        return std::nullopt;
    case ConstructionKind::c5:
        if (!(l >= m && m > p && p >= 1))
            return "needs l >= m > p >= 1";
        if (!balanced(n))
            return "needs a balanced host n1 = n2 = n3";
        if (n[0] < l + t - 1)
            return "needs n >= l+floor((l-m)/2)-1 = " + std::to_string(l + t - 1);
        if (n[0] - (m - 1) - t < l - m)
            return "residual parts too small for an (l-m)-regular bipartite graph";
        return std::nullopt;
    case ConstructionKind::c4cycle:
        if (n[2] < 2)
            return "needs n3 >= 2";
        return std::nullopt;
    }
    return "unknown construction";
}

int smallest_valid_n(ConstructionKind kind, int l, int m, int p)
{
    if (kind == ConstructionKind::c2)
        kind = ConstructionKind::c1;
    ConstructionParams prm{kind, 1, l, m, p, {1, 1, 1}};
    for (int n = 1; n <= 100000; ++n) {
        prm.n = {n, n, n};
        if (!parameter_problem(prm))
            return n;
    }
    throw std::invalid_argument("no valid n for these parameters");
}

TripartiteGraph construction1(int l, int m, PartSizes n, bool force)
{
    ConstructionParams prm{ConstructionKind::c1, 1, l, m, m, n};
    if (auto why = parameter_problem(prm); why && !force)
        fail("construction 1: " + *why);
    if (!ordered(n) || !(l >= m && m >= 1) || n[2] <= m)
        fail("construction 1: cannot build with these parameters");
    GraphBuilder b = construction1_base(l, m, n);
    b.remove_edge({1, n[0]}, {2, n[1]});
    b.remove_edge({1, n[0]}, {3, n[2]});
    b.remove_edge({2, n[1]}, {3, n[2]});
    return std::move(b).build();
}

TripartiteGraph construction2(int variant, int l, int m, PartSizes n, bool force)
{
    ConstructionParams prm{ConstructionKind::c2, variant, l, m, m, n};
    if (auto why = parameter_problem(prm); why && !force)
        fail("construction 2: " + *why);
    if (!ordered(n) || !(l >= m && m >= 1) || n[2] <= m || variant < 1 || variant > 3)
        fail("construction 2: cannot build with these parameters");
    GraphBuilder b = construction1_base(l, m, n);
    auto part = [](int k) { return (k - 1) % 3 + 1; };
    int i = variant, i1 = part(variant + 1), i2 = part(variant + 2);
    b.remove_edge({i, n[i - 1]}, {i1, n[i1 - 1]});
    b.remove_edge({i, n[i - 1] - 1}, {i2, n[i2 - 1]});
    b.remove_edge({i1, n[i1 - 1]}, {i2, n[i2 - 1]});
    return std::move(b).build();
}

TripartiteGraph construction3(int l, int m, int p, PartSizes n, bool force)
{
    ConstructionParams prm{ConstructionKind::c3, 1, l, m, p, n};
    if (auto why = parameter_problem(prm); why && !force)
        fail("construction 3: " + *why);
    if (!ordered(n) || !(l >= m && m >= 1) || n[2] < m)
        fail("construction 3: cannot build with these parameters");
    GraphBuilder b(n);
    for (int i = 1; i <= 3; ++i)
        join_hubs(b, i, 1, m - 1);
    int d = l - m;
    if (d > 0)
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                join_circulant(b, j, m - 1, n[j - 1] - m + 1, i, m - 1, n[i - 1] - m + 1, window(0, d));
    return std::move(b).build();
}

std::optional<std::array<std::vector<int>, 3>> triangle_free_offsets(int N, int d)
{
    if (d <= 0)
        return std::array<std::vector<int>, 3>{};
    if (N < d)
        return std::nullopt;
    if (N >= 3 * d - 1)
        return std::array<std::vector<int>, 3>{window(0, d), window(0, d), window(d, d)};

    // Translating d32 or d21 translates the sumset, so both may be assumed to contain 0.
    auto next_combo = [N](std::vector<int>& c) {
        // c[0] stays 0; advance c[1..] as a combination of {1..N-1}
        int k = static_cast<int>(c.size());
        for (int i = k - 1; i >= 1; --i) {
            if (c[i] < N - (k - i)) {
                ++c[i];
                for (int j = i + 1; j < k; ++j)
                    c[j] = c[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    std::vector<int> d32 = window(0, d);
    do {
        std::vector<int> d21 = window(0, d);
        do {
            std::vector<bool> hit(static_cast<std::size_t>(N), false);
            for (int x : d32)
                for (int y : d21)
                    hit[static_cast<std::size_t>((x + y) % N)] = true;
            std::vector<int> d31;
            for (int r = 0; r < N && static_cast<int>(d31.size()) < d; ++r)
                if (!hit[static_cast<std::size_t>(r)])
                    d31.push_back(r);
            if (static_cast<int>(d31.size()) == d)
                return std::array<std::vector<int>, 3>{d31, d32, d21};
        } while (next_combo(d21));
    } while (next_combo(d32));
    return std::nullopt;
}

TripartiteGraph construction4(int l, int m, int n, bool force)
{
    ConstructionParams prm{ConstructionKind::c4, 1, l, m, m, {n, n, n}};
    if (auto why = parameter_problem(prm); why && !force)
        fail("construction 4: " + *why);
    int t = half_gap(l, m);
    int d = l - m;
    int N = n - m - t;
    if (!(l >= m && m >= 1) || N < 0 || (d > 0 && N < 1))
        fail("construction 4: cannot build with these parameters");
    GraphBuilder b(PartSizes{n, n, n});
    for (int i = 1; i <= 3; ++i)
        join_hubs(b, i, 1, m);
    if (t > 0)
        for (int i = 1; i <= 3; ++i)
            join_blocks(b, i, i % 3 + 1, m + 1, m + t);
    if (d > 0) {
        auto offsets = triangle_free_offsets(N, d);
        if (!offsets)
            fail("construction 4: no triangle-free " + std::to_string(d) + "-regular residual on " +
                 std::to_string(N) + " vertices per part");
        const auto& [d31, d32, d21] = *offsets;
        join_circulant(b, 3, m + t, N, 1, m + t, N, d31);
        join_circulant(b, 3, m + t, N, 2, m + t, N, d32);
        join_circulant(b, 2, m + t, N, 1, m + t, N, d21);
    }
    b.remove_edge({1, 1}, {2, 1});
    b.remove_edge({1, 1}, {3, 1});
    b.remove_edge({2, 1}, {3, 1});
    TripartiteGraph g = std::move(b).build();
    if (!force)
        check_residual(g, prm, true);
    return g;
}

TripartiteGraph construction5(int l, int m, int p, int n, bool force)
{
    ConstructionParams prm{ConstructionKind::c5, 1, l, m, p, {n, n, n}};
    if (auto why = parameter_problem(prm); why && !force)
        fail("construction 5: " + *why);
    int t = half_gap(l, m);
    int d = l - m;
    int N = n - (m - 1) - t;
    if (!(l >= m && m >= 1) || N < 0 || (d > 0 && N < 1))
        fail("construction 5: cannot build with these parameters");
    GraphBuilder b(PartSizes{n, n, n});
    for (int i = 1; i <= 3; ++i)
        join_hubs(b, i, 1, m - 1);
    if (t > 0)
        for (int i = 1; i <= 3; ++i)
            join_blocks(b, i, i % 3 + 1, m, m - 1 + t);
    if (d > 0)
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                join_circulant(b, j, m - 1 + t, N, i, m - 1 + t, N, window(0, d));
    TripartiteGraph g = std::move(b).build();
    if (!force)
        check_residual(g, prm, false);
    return g;
}

TripartiteGraph construction_c4(PartSizes n, bool force)
{
    ConstructionParams prm{ConstructionKind::c4cycle, 1, 2, 2, 0, n};
    if (auto why = parameter_problem(prm); why && !force)
        fail("C4 construction: " + *why);
    GraphBuilder b(n);
    for (int i = 1; i <= 3; ++i) {
        int next = i % 3 + 1;
        for (int j = 1; j <= n[next - 1]; ++j)
            b.ensure_edge({i, 1}, {next, j});
    }
    return std::move(b).build();
}

TripartiteGraph build_construction(const ConstructionParams& prm, bool force)
{
    switch (prm.kind) {
    case ConstructionKind::c1:
        return construction1(prm.l, prm.m, prm.n, force);
    case ConstructionKind::c2:
        return construction2(prm.variant, prm.l, prm.m, prm.n, force);
    case ConstructionKind::c3:
        return construction3(prm.l, prm.m, prm.p, prm.n, force);
    case ConstructionKind::c4:
        if (!balanced(prm.n))
            fail("construction 4: needs a balanced host n1 = n2 = n3");
        return construction4(prm.l, prm.m, prm.n[0], force);
    case ConstructionKind::c5:
        if (!balanced(prm.n))
            fail("construction 5: needs a balanced host n1 = n2 = n3");
        return construction5(prm.l, prm.m, prm.p, prm.n[0], force);
    case ConstructionKind::c4cycle:
        return construction_c4(prm.n, force);
    }
    fail("unknown construction");
    return TripartiteGraph::empty({1, 1, 1});
}

PatternSpec target_pattern(const ConstructionParams& prm)
{
    switch (prm.kind) {
    case ConstructionKind::c1:
    case ConstructionKind::c2:
    case ConstructionKind::c4:
        return {prm.l, prm.m, prm.m};
    case ConstructionKind::c3:
    case ConstructionKind::c5:
        return {prm.l, prm.m, prm.p};
    case ConstructionKind::c4cycle:
        return {2, 2, 0};
    }
    return {2, 2, 0};
}

BoundRecord construction_formula(const ConstructionParams& prm)
{
    const auto& n = prm.n;
    switch (prm.kind) {
    case ConstructionKind::c1:
    case ConstructionKind::c2:
        return f_con1_upper(n[0], n[1], n[2], prm.l, prm.m);
    case ConstructionKind::c3:
        return f_con3_upper(n[0], n[1], n[2], prm.l, prm.m, prm.p);
    case ConstructionKind::c4:
        return f_con4_upper(n[0], prm.l, prm.m);
    case ConstructionKind::c5:
        return f_con5_upper(n[0], prm.l, prm.m, prm.p);
    case ConstructionKind::c4cycle:
        return f_c4(n[0], n[1], n[2]);
    }
    fail("unknown construction");
    return {};
}

IndexRanges hub_layout(const ConstructionParams& prm)
{
    IndexRanges r;
    int t = half_gap(prm.l, prm.m);
    for (int i = 0; i < 3; ++i) {
        int ni = prm.n[i];
        switch (prm.kind) {
        case ConstructionKind::c1:
        case ConstructionKind::c2:
            r[i].push_back({ni - prm.m + 1, ni});
            break;
        case ConstructionKind::c3:
            if (prm.m > 1)
                r[i].push_back({1, prm.m - 1});
            break;
        case ConstructionKind::c4:
            r[i].push_back({1, prm.m + t});
            break;
        case ConstructionKind::c5:
            if (prm.m - 1 + t >= 1)
                r[i].push_back({1, prm.m - 1 + t});
            break;
        case ConstructionKind::c4cycle:
            r[i].push_back({1, 1});
            break;
        }
    }
    return r;
}

} // namespace trisat
