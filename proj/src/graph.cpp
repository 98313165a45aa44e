#include "trisat/graph.hpp"

#include <algorithm>
#include <tuple>

namespace trisat {

Edge make_edge(VertexRef a, VertexRef b)
{
    if (a.part == b.part)
        throw std::invalid_argument("same-part pair " + to_string(a) + " " + to_string(b));
    if (a.part > b.part)
        std::swap(a, b);
    return {a, b};
}

namespace {

int pair_rank(int i, int j)
{
    // (1,2) -> 0, (1,3) -> 1, (2,3) -> 2
    return i + j - 3;
}

} // namespace

bool canonical_less(const Edge& lhs, const Edge& rhs)
{
    auto key = [](const Edge& e) { return std::tuple(pair_rank(e.u.part, e.v.part), e.u.index, e.v.index); };
    return key(lhs) < key(rhs);
}

std::string to_string(VertexRef v)
{
    return "v" + std::to_string(v.part) + "^" + std::to_string(v.index);
}

std::string to_string(const Edge& e) { return to_string(e.u) + to_string(e.v); }

TripartiteGraph::TripartiteGraph(PartSizes sizes) : sizes_(sizes)
{
    for (int n : sizes)
        if (n < 1)
            throw std::invalid_argument("part sizes must be positive");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j)
                adj_[i][j] = bits::BitMatrix(static_cast<std::size_t>(sizes[i]), static_cast<std::size_t>(sizes[j]));
}

TripartiteGraph TripartiteGraph::empty(PartSizes sizes) { return TripartiteGraph(sizes); }

TripartiteGraph TripartiteGraph::complete(PartSizes sizes)
{
    TripartiteGraph g(sizes);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j)
                g.adj_[i][j].fill();
    g.edge_count_ = static_cast<std::size_t>(sizes[0] * sizes[1] + sizes[0] * sizes[2] + sizes[1] * sizes[2]);
    return g;
}

bool TripartiteGraph::contains_vertex(VertexRef v) const
{
    return v.part >= 1 && v.part <= 3 && v.index >= 1 && v.index <= sizes_[v.part - 1];
}

void TripartiteGraph::check_vertex(VertexRef v) const
{
    if (!contains_vertex(v))
        throw std::out_of_range("vertex " + to_string(v) + " out of range");
}

bool TripartiteGraph::has_edge(VertexRef a, VertexRef b) const
{
    check_vertex(a);
    check_vertex(b);
    if (a.part == b.part)
        return false;
    return adj_[a.part - 1][b.part - 1].test(static_cast<std::size_t>(a.index - 1),
                                             static_cast<std::size_t>(b.index - 1));
}

std::size_t TripartiteGraph::pair_edge_count(int i, int j) const
{
    if (i == j || i < 1 || j < 1 || i > 3 || j > 3)
        throw std::invalid_argument("pair_edge_count needs two distinct parts");
    const auto& m = adj_[i - 1][j - 1];
    std::size_t c = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        c += bits::count(m.row(r));
    return c;
}

std::vector<Edge> TripartiteGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    static constexpr std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (auto [i, j] : pairs) {
        const auto& m = adj_[i][j];
        for (std::size_t a = 0; a < m.rows(); ++a) {
            auto r = m.row(a);
            for (std::size_t b = bits::next_set(r, 0); b != bits::npos; b = bits::next_set(r, b + 1))
                out.push_back({{i + 1, static_cast<int>(a) + 1}, {j + 1, static_cast<int>(b) + 1}});
        }
    }
    return out;
}

int TripartiteGraph::degree_into(VertexRef v, int other_part) const
{
    check_vertex(v);
    if (other_part == v.part)
        return 0;
    return static_cast<int>(bits::count(row(v.part - 1, v.index - 1, other_part - 1)));
}

int TripartiteGraph::degree(VertexRef v) const
{
    int d = 0;
    for (int p = 1; p <= 3; ++p)
        d += degree_into(v, p);
    return d;
}

std::vector<VertexRef> TripartiteGraph::neighbors_in(VertexRef v, int other_part) const
{
    check_vertex(v);
    std::vector<VertexRef> out;
    if (other_part == v.part)
        return out;
    auto r = row(v.part - 1, v.index - 1, other_part - 1);
    for (std::size_t b = bits::next_set(r, 0); b != bits::npos; b = bits::next_set(r, b + 1))
        out.push_back({other_part, static_cast<int>(b) + 1});
    return out;
}

void TripartiteGraph::set_pair(VertexRef a, VertexRef b, bool present)
{
    auto ia = static_cast<std::size_t>(a.index - 1);
    auto ib = static_cast<std::size_t>(b.index - 1);
    auto& ab = adj_[a.part - 1][b.part - 1];
    auto& ba = adj_[b.part - 1][a.part - 1];
    if (present) {
        ab.set(ia, ib);
        ba.set(ib, ia);
        ++edge_count_;
    } else {
        ab.reset(ia, ib);
        ba.reset(ib, ia);
        --edge_count_;
    }
}

TripartiteGraph TripartiteGraph::with_edge(VertexRef a, VertexRef b) const
{
    GraphBuilder builder(*this);
    builder.add_edge(a, b);
    return std::move(builder).build();
}

TripartiteGraph TripartiteGraph::without_edge(VertexRef a, VertexRef b) const
{
    GraphBuilder builder(*this);
    builder.remove_edge(a, b);
    return std::move(builder).build();
}

GraphBuilder::GraphBuilder(PartSizes sizes) : graph_(TripartiteGraph::empty(sizes)) {}

GraphBuilder::GraphBuilder(TripartiteGraph start) : graph_(std::move(start)) {}

GraphBuilder& GraphBuilder::add_edge(VertexRef a, VertexRef b)
{
    Edge e = make_edge(a, b);
    if (graph_.has_edge(e.u, e.v))
        throw std::invalid_argument("edge " + to_string(e) + " already present");
    graph_.set_pair(e.u, e.v, true);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(VertexRef a, VertexRef b)
{
    Edge e = make_edge(a, b);
    if (!graph_.has_edge(e.u, e.v))
        throw std::invalid_argument("edge " + to_string(e) + " not present");
    graph_.set_pair(e.u, e.v, false);
    return *this;
}

bool GraphBuilder::ensure_edge(VertexRef a, VertexRef b)
{
    Edge e = make_edge(a, b);
    if (graph_.has_edge(e.u, e.v))
        return false;
    graph_.set_pair(e.u, e.v, true);
    return true;
}

TripartiteGraph new_host(int n1, int n2, int n3)
{
    if (n3 < 1)
        throw std::invalid_argument("host part sizes must be positive");
    if (!(n1 >= n2 && n2 >= n3))
        throw std::invalid_argument("host part sizes must satisfy n1 >= n2 >= n3, got " + std::to_string(n1) +
                                    "," + std::to_string(n2) + "," + std::to_string(n3));
    return TripartiteGraph::complete({n1, n2, n3});
}

int DegreeProfile::degree(VertexRef v) const
{
    const auto& s = split.at(static_cast<std::size_t>(v.part - 1)).at(static_cast<std::size_t>(v.index - 1));
    return s[0] + s[1] + s[2];
}

DegreeProfile degree_profile(const TripartiteGraph& g)
{
    DegreeProfile prof;
    for (int p = 1; p <= 3; ++p) {
        auto& rows = prof.split[p - 1];
        rows.resize(static_cast<std::size_t>(g.part_size(p)));
        int lowest = -1;
        for (int a = 1; a <= g.part_size(p); ++a) {
            auto& cell = rows[static_cast<std::size_t>(a - 1)];
            for (int q = 1; q <= 3; ++q)
                cell[q - 1] = g.degree_into({p, a}, q);
            int d = cell[0] + cell[1] + cell[2];
            if (lowest < 0 || d < lowest)
                lowest = d;
        }
        prof.min_degree[p - 1] = lowest;
    }
    return prof;
}

std::vector<Edge> nonedges(const TripartiteGraph& g, const TripartiteGraph& host)
{
    if (g.part_sizes() != host.part_sizes())
        throw std::invalid_argument("part sizes of graph and host differ");
    std::vector<Edge> out;
    for (const Edge& e : host.edges())
        if (!g.has_edge(e.u, e.v))
            out.push_back(e);
    if (host.edge_count() - out.size() != g.edge_count())
        throw std::invalid_argument("graph is not a subgraph of the host");
    return out;
}

} // namespace trisat
