#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "trisat/graph.hpp"

namespace trisat {

namespace {

struct Flat {
    // Vertices of a graph numbered 0..N-1, part by part.
    std::vector<VertexRef> refs;
    std::vector<std::vector<int>> adj;
};

Flat flatten(const TripartiteGraph& g)
{
    Flat f;
    std::array<int, 4> offset{0, 0, 0, 0};
    for (int p = 1; p <= 3; ++p)
        offset[p] = offset[p - 1] + g.part_size(p);
    for (int p = 1; p <= 3; ++p)
        for (int a = 1; a <= g.part_size(p); ++a)
            f.refs.push_back({p, a});
    f.adj.resize(f.refs.size());
    for (const Edge& e : g.edges()) {
        int x = offset[e.u.part - 1] + e.u.index - 1;
        int y = offset[e.v.part - 1] + e.v.index - 1;
        f.adj[x].push_back(y);
        f.adj[y].push_back(x);
    }
    return f;
}

// Joint colour refinement of both graphs; a-part k and b-part perm[k] start with colour k.
std::pair<std::vector<int>, std::vector<int>> refine(const Flat& a, const Flat& b, const std::array<int, 3>& perm)
{
    std::vector<int> ca(a.refs.size()), cb(b.refs.size());
    for (std::size_t i = 0; i < a.refs.size(); ++i)
        ca[i] = a.refs[i].part - 1;
    std::array<int, 3> inv{};
    for (int k = 0; k < 3; ++k)
        inv[perm[k]] = k;
    for (std::size_t i = 0; i < b.refs.size(); ++i)
        cb[i] = inv[b.refs[i].part - 1];

    std::size_t classes = 3;
    while (true) {
        std::map<std::vector<int>, int> ids;
        auto signature = [](const Flat& f, const std::vector<int>& col, std::size_t v) {
            std::vector<int> s;
            s.reserve(f.adj[v].size() + 1);
            for (int w : f.adj[v])
                s.push_back(col[static_cast<std::size_t>(w)]);
            std::sort(s.begin(), s.end());
            s.insert(s.begin(), col[v]);
            return s;
        };
        std::vector<std::vector<int>> sa, sb;
        for (std::size_t v = 0; v < a.refs.size(); ++v)
            sa.push_back(signature(a, ca, v));
        for (std::size_t v = 0; v < b.refs.size(); ++v)
            sb.push_back(signature(b, cb, v));
        for (const auto& s : sa)
            ids.emplace(s, 0);
        for (const auto& s : sb)
            ids.emplace(s, 0);
        int next = 0;
        for (auto& [key, id] : ids)
            id = next++;
        for (std::size_t v = 0; v < sa.size(); ++v)
            ca[v] = ids[sa[v]];
        for (std::size_t v = 0; v < sb.size(); ++v)
            cb[v] = ids[sb[v]];
        if (ids.size() == classes)
            break;
        classes = ids.size();
    }
    return {ca, cb};
}

class Matcher {
public:
    Matcher(const TripartiteGraph& ga, const TripartiteGraph& gb, const Flat& a, const Flat& b,
            std::vector<int> ca, std::vector<int> cb)
        : ga_(ga), gb_(gb), a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
          image_(a.refs.size(), -1), used_(b.refs.size(), false)
    {
        // Twin classes in b: same part and identical neighbourhoods.
        std::map<std::pair<int, std::vector<int>>, int> twin_ids;
        twin_.resize(b.refs.size());
        for (std::size_t v = 0; v < b.refs.size(); ++v) {
            auto nb = b.adj[v];
            std::sort(nb.begin(), nb.end());
            auto [it, inserted] =
                twin_ids.emplace(std::pair(b.refs[v].part, nb), static_cast<int>(twin_ids.size()));
            twin_[v] = it->second;
        }
        // Map rare colours first, then follow adjacency so constraints bite early.
        std::map<int, int> freq;
        for (int c : ca_)
            ++freq[c];
        std::vector<int> seeds(a.refs.size());
        std::iota(seeds.begin(), seeds.end(), 0);
        std::stable_sort(seeds.begin(), seeds.end(),
                         [&](int x, int y) { return freq[ca_[x]] < freq[ca_[y]]; });
        std::vector<bool> seen(a.refs.size(), false);
        for (int s : seeds) {
            if (seen[s])
                continue;
            std::vector<int> queue{s};
            seen[s] = true;
            for (std::size_t h = 0; h < queue.size(); ++h) {
                order_.push_back(queue[h]);
                for (int w : a.adj[queue[h]])
                    if (!seen[w]) {
                        seen[w] = true;
                        queue.push_back(w);
                    }
            }
        }
    }

    bool run() { return extend(0); }

private:
    bool consistent(int v, int w) const
    {
        for (std::size_t k = 0; k < image_.size(); ++k) {
            if (image_[k] < 0)
                continue;
            bool ea = ga_.has_edge(a_.refs[static_cast<std::size_t>(v)], a_.refs[k]);
            bool eb = gb_.has_edge(b_.refs[static_cast<std::size_t>(w)], b_.refs[static_cast<std::size_t>(image_[k])]);
            if (ea != eb)
                return false;
        }
        return true;
    }

    bool extend(std::size_t depth)
    {
        if (depth == order_.size())
            return true;
        int v = order_[depth];
        std::vector<int> tried_twins;
        for (std::size_t w = 0; w < b_.refs.size(); ++w) {
            if (used_[w] || cb_[w] != ca_[static_cast<std::size_t>(v)])
                continue;
            if (std::find(tried_twins.begin(), tried_twins.end(), twin_[w]) != tried_twins.end())
                continue;
            tried_twins.push_back(twin_[w]);
            if (!consistent(v, static_cast<int>(w)))
                continue;
            image_[static_cast<std::size_t>(v)] = static_cast<int>(w);
            used_[w] = true;
            if (extend(depth + 1))
                return true;
            image_[static_cast<std::size_t>(v)] = -1;
            used_[w] = false;
        }
        return false;
    }

    const TripartiteGraph& ga_;
    const TripartiteGraph& gb_;
    const Flat& a_;
    const Flat& b_;
    std::vector<int> ca_, cb_;
    std::vector<int> image_;
    std::vector<bool> used_;
    std::vector<int> twin_;
    std::vector<int> order_;
};

} // namespace

bool iso_equivalent(const TripartiteGraph& ga, const TripartiteGraph& gb)
{
    auto sa = ga.part_sizes();
    auto sb = gb.part_sizes();
    auto sorted_a = sa, sorted_b = sb;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b || ga.edge_count() != gb.edge_count())
        return false;

    Flat a = flatten(ga);
    Flat b = flatten(gb);
    std::array<int, 3> perm{0, 1, 2};
    do {
        // a-part k is mapped onto b-part perm[k].
        bool ok = true;
        for (int k = 0; k < 3 && ok; ++k)
            ok = sa[k] == sb[perm[k]];
        for (int i = 0; i < 3 && ok; ++i)
            for (int j = i + 1; j < 3 && ok; ++j)
                ok = ga.pair_edge_count(i + 1, j + 1) == gb.pair_edge_count(perm[i] + 1, perm[j] + 1);
        if (!ok)
            continue;
        auto [ca, cb] = refine(a, b, perm);
        auto ha = ca, hb = cb;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb)
            continue;
        Matcher matcher(ga, gb, a, b, std::move(ca), std::move(cb));
        if (matcher.run())
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace trisat
