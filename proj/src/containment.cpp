#include "trisat/containment.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace trisat {

PatternSpec::PatternSpec(int l_, int m_, int p_) : l(l_), m(m_), p(p_)
{
    if (!(l >= m && m >= p && p >= 0))
        throw std::invalid_argument("pattern " + to_string(*this) + " must satisfy l >= m >= p >= 0");
    if (m < 1)
        throw std::invalid_argument("pattern " + to_string(*this) + " must have m >= 1");
}

std::string to_string(const PatternSpec& pat)
{
    return "K_{" + std::to_string(pat.l) + "," + std::to_string(pat.m) + "," + std::to_string(pat.p) + "}";
}

std::optional<std::string> embedding_problem(const TripartiteGraph& g, const PatternSpec& pat, const Embedding& emb,
                                             const std::optional<Edge>& extra)
{
    auto sizes = pat.class_sizes();
    std::set<VertexRef> seen;
    for (int k = 0; k < 3; ++k) {
        const auto& cls = emb.classes[k];
        if (static_cast<int>(cls.size()) != sizes[k])
            return "class " + std::to_string(k) + " has " + std::to_string(cls.size()) + " vertices, expected " +
                   std::to_string(sizes[k]);
        for (VertexRef v : cls) {
            if (!g.contains_vertex(v))
                return "vertex " + to_string(v) + " out of range";
            if (!seen.insert(v).second)
                return "vertex " + to_string(v) + " used twice";
        }
    }
    auto adjacent = [&](VertexRef a, VertexRef b) {
        if (a.part == b.part)
            return false;
        if (extra && make_edge(a, b) == *extra)
            return true;
        return g.has_edge(a, b);
    };
    for (int x = 0; x < 3; ++x)
        for (int y = x + 1; y < 3; ++y)
            for (VertexRef a : emb.classes[x])
                for (VertexRef b : emb.classes[y])
                    if (!adjacent(a, b))
                        return "missing edge " + to_string(a) + to_string(b) + " between classes " +
                               std::to_string(x) + " and " + std::to_string(y);
    if (pat.p >= 1) {
        std::array<int, 3> part_of{};
        for (int k = 0; k < 3; ++k) {
            part_of[k] = emb.classes[k].front().part;
            for (VertexRef v : emb.classes[k])
                if (v.part != part_of[k])
                    return "class " + std::to_string(k) + " is split across parts";
        }
        if (part_of[0] == part_of[1] || part_of[0] == part_of[2] || part_of[1] == part_of[2])
            return "two classes share a part";
    }
    return std::nullopt;
}

namespace {

// A pattern class placed in a set of parts.  For three nonempty classes each group is
// one part: a class split over two parts P, Q would force the other two classes (all
// adjacent to vertices of P and of Q) into the single remaining part, where they
// cannot be adjacent to each other.  For K_{l,m} each part hosts at most one class.
struct Group {
    std::array<bool, 3> parts{};
    int klass = 0;
    int need = 0;
    std::vector<VertexRef> forced;
};

class EmbeddingSearch {
public:
    explicit EmbeddingSearch(const TripartiteGraph& g) : g_(g)
    {
        std::size_t off = 0;
        for (int k = 0; k < 3; ++k) {
            offset_[k] = off;
            words_[k] = g.words(k);
            off += words_[k];
        }
        total_words_ = off;
    }

    std::optional<Embedding> run(std::vector<Group> groups)
    {
        // capacity
        for (const auto& grp : groups) {
            int cap = 0;
            for (int k = 0; k < 3; ++k)
                if (grp.parts[k])
                    cap += g_.part_sizes()[k];
            if (cap < grp.need)
                return std::nullopt;
        }
        int max_depth = 1;
        for (const auto& grp : groups)
            max_depth += grp.need;
        stack_.assign(static_cast<std::size_t>(max_depth + 1), std::vector<bits::Word>(total_words_, 0));

        auto& top = stack_[0];
        for (int k = 0; k < 3; ++k) {
            auto span = part_span(top, k);
            for (int a = 0; a < g_.part_sizes()[k]; ++a)
                bits::set(span, static_cast<std::size_t>(a));
        }
        remaining_.assign(groups.size(), 0);
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            remaining_[gi] = groups[gi].need - static_cast<int>(groups[gi].forced.size());
            if (remaining_[gi] < 0)
                return std::nullopt;
            for (VertexRef f : groups[gi].forced) {
                restrict(top, groups[gi], f);
                bits::reset(part_span(top, f.part - 1), static_cast<std::size_t>(f.index - 1));
            }
        }
        groups_ = std::move(groups);
        order_.resize(groups_.size());
        for (std::size_t gi = 0; gi < order_.size(); ++gi)
            order_[gi] = gi;
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t x, std::size_t y) { return remaining_[x] < remaining_[y]; });
        chosen_.assign(groups_.size(), {});
        if (!feasible(top, 0))
            return std::nullopt;
        if (!choose(0, 0, 0, 0))
            return std::nullopt;

        Embedding emb;
        for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
            auto& cls = emb.classes[groups_[gi].klass];
            cls = groups_[gi].forced;
            cls.insert(cls.end(), chosen_[gi].begin(), chosen_[gi].end());
            std::sort(cls.begin(), cls.end());
        }
        return emb;
    }

private:
    std::span<bits::Word> part_span(std::vector<bits::Word>& cand, int k)
    {
        return {cand.data() + offset_[k], words_[k]};
    }
    std::span<const bits::Word> part_span(const std::vector<bits::Word>& cand, int k) const
    {
        return {cand.data() + offset_[k], words_[k]};
    }

    // Keep only candidates of other groups that are adjacent to w.
    void restrict(std::vector<bits::Word>& cand, const Group& own, VertexRef w)
    {
        for (int r = 0; r < 3; ++r)
            if (!own.parts[r])
                bits::and_into(part_span(cand, r), g_.row(w.part - 1, w.index - 1, r));
    }

    std::size_t group_count(const std::vector<bits::Word>& cand, const Group& grp) const
    {
        std::size_t c = 0;
        for (int k = 0; k < 3; ++k)
            if (grp.parts[k])
                c += bits::count(part_span(cand, k));
        return c;
    }

    bool feasible(const std::vector<bits::Word>& cand, std::size_t from) const
    {
        for (std::size_t o = from; o < order_.size(); ++o) {
            std::size_t gi = order_[o];
            int still = remaining_[gi] - static_cast<int>(chosen_[gi].size());
            if (static_cast<int>(group_count(cand, groups_[gi])) < still)
                return false;
        }
        return true;
    }

    // Picks the vertices of group order_[pos] in increasing (part, index) order,
    // resuming after (start_part, start_idx).
    bool choose(std::size_t pos, std::size_t level, int start_part, int start_idx)
    {
        std::size_t gi = order_[pos];
        const Group& grp = groups_[gi];
        auto& cand = stack_[level];
        int still = remaining_[gi] - static_cast<int>(chosen_[gi].size());
        if (pos + 1 == order_.size()) {
            // Last group: any candidates will do.
            for (int k = 0; k < 3 && still > 0; ++k) {
                if (!grp.parts[k])
                    continue;
                auto span = part_span(cand, k);
                for (std::size_t b = bits::next_set(span, 0); b != bits::npos && still > 0;
                     b = bits::next_set(span, b + 1)) {
                    chosen_[gi].push_back({k + 1, static_cast<int>(b) + 1});
                    --still;
                }
            }
            return still == 0;
        }
        if (still == 0)
            return choose(pos + 1, level, 0, 0);

        for (int k = start_part; k < 3; ++k) {
            if (!grp.parts[k])
                continue;
            auto span = part_span(cand, k);
            std::size_t from = k == start_part ? static_cast<std::size_t>(start_idx) : 0;
            for (std::size_t b = bits::next_set(span, from); b != bits::npos; b = bits::next_set(span, b + 1)) {
                VertexRef w{k + 1, static_cast<int>(b) + 1};
                auto& next = stack_[level + 1];
                next = cand;
                restrict(next, grp, w);
                // w itself is no longer a candidate of its own group
                bits::reset(part_span(next, k), b);
                chosen_[gi].push_back(w);
                if (feasible(next, pos) && choose(pos, level + 1, k, static_cast<int>(b) + 1))
                    return true;
                chosen_[gi].pop_back();
            }
        }
        return false;
    }

    const TripartiteGraph& g_;
    std::array<std::size_t, 3> offset_{};
    std::array<std::size_t, 3> words_{};
    std::size_t total_words_ = 0;
    std::vector<std::vector<bits::Word>> stack_;
    std::vector<Group> groups_;
    std::vector<int> remaining_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<VertexRef>> chosen_;
};

// Enumerates the placements of pattern classes onto parts, in the fixed order, and
// runs the search on each until one succeeds.
std::optional<Embedding> search_all(const TripartiteGraph& g, const PatternSpec& pat,
                                    const std::optional<std::pair<VertexRef, VertexRef>>& through)
{
    const auto& n = g.part_sizes();
    EmbeddingSearch search(g);
    if (pat.p >= 1) {
        auto sizes = pat.class_sizes();
        std::array<int, 3> perm{0, 1, 2}; // perm[part] = class
        std::set<std::array<int, 3>> tried;
        do {
            std::array<int, 3> shape{sizes[perm[0]], sizes[perm[1]], sizes[perm[2]]};
            if (!tried.insert(shape).second)
                continue;
            if (shape[0] > n[0] || shape[1] > n[1] || shape[2] > n[2])
                continue;
            std::vector<Group> groups(3);
            for (int k = 0; k < 3; ++k) {
                groups[k].parts[k] = true;
                groups[k].klass = perm[k];
                groups[k].need = shape[k];
            }
            if (through) {
                groups[through->first.part - 1].forced.push_back(through->first);
                groups[through->second.part - 1].forced.push_back(through->second);
            }
            if (auto emb = search.run(std::move(groups)))
                return emb;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return std::nullopt;
    }

    // Bipartite pattern: label each part X (class of size l) or Y (size m), both used.
    for (int mask = 1; mask <= 6; ++mask) {
        std::array<int, 3> label{(mask >> 2) & 1, (mask >> 1) & 1, mask & 1};
        if (pat.l == pat.m && label[0] == 1)
            continue; // the complementary labelling is equivalent
        if (through && label[through->first.part - 1] == label[through->second.part - 1])
            continue;
        std::vector<Group> groups(2);
        for (int c = 0; c < 2; ++c) {
            groups[c].klass = c;
            groups[c].need = c == 0 ? pat.l : pat.m;
            for (int k = 0; k < 3; ++k)
                groups[c].parts[k] = label[k] == c;
        }
        if (through) {
            groups[label[through->first.part - 1]].forced.push_back(through->first);
            groups[label[through->second.part - 1]].forced.push_back(through->second);
        }
        if (auto emb = search.run(std::move(groups)))
            return emb;
    }
    return std::nullopt;
}

void check_cross_pair(const TripartiteGraph& g, VertexRef u, VertexRef v)
{
    if (!g.contains_vertex(u) || !g.contains_vertex(v))
        throw std::out_of_range("vertex out of range");
    if (u.part == v.part)
        throw std::invalid_argument("same-part pair " + to_string(u) + " " + to_string(v));
}

} // namespace

std::optional<Embedding> contains(const TripartiteGraph& g, const PatternSpec& pat)
{
    return search_all(g, pat, std::nullopt);
}

std::optional<Embedding> contains_through(const TripartiteGraph& g, const PatternSpec& pat, VertexRef u, VertexRef v)
{
    check_cross_pair(g, u, v);
    return search_all(g, pat, std::pair(u, v));
}

std::optional<Embedding> contains_after(const TripartiteGraph& g, const PatternSpec& pat, VertexRef u, VertexRef v,
                                        bool check_pattern_free)
{
    check_cross_pair(g, u, v);
    if (g.has_edge(u, v))
        throw std::invalid_argument("edge " + to_string(make_edge(u, v)) + " is already present");
    if (check_pattern_free && contains(g, pat))
        throw std::logic_error("contains_after requires a pattern-free graph");
    return search_all(g, pat, std::pair(u, v));
}

std::optional<Embedding> contains_naive(const TripartiteGraph& g, const PatternSpec& pat)
{
    if (g.vertex_count() > naive_vertex_limit)
        throw std::invalid_argument("contains_naive is limited to " + std::to_string(naive_vertex_limit) +
                                    " vertices");
    std::vector<VertexRef> verts;
    for (int p = 1; p <= 3; ++p)
        for (int a = 1; a <= g.part_size(p); ++a)
            verts.push_back({p, a});
    auto sizes = pat.class_sizes();
    std::array<int, 3> left = sizes;
    Embedding emb;

    auto fits = [&](VertexRef v, int klass) {
        for (int c = 0; c < 3; ++c) {
            if (c == klass)
                continue;
            for (VertexRef w : emb.classes[c])
                if (!g.has_edge(v, w))
                    return false;
        }
        return true;
    };
    // Each vertex is left out or put in a class with room left.
    auto assign = [&](auto&& self, std::size_t k) -> bool {
        int needed = left[0] + left[1] + left[2];
        if (needed == 0)
            return true;
        if (static_cast<int>(verts.size() - k) < needed)
            return false;
        VertexRef v = verts[k];
        for (int c = 0; c < 3; ++c) {
            if (left[c] == 0 || !fits(v, c))
                continue;
            emb.classes[c].push_back(v);
            --left[c];
            if (self(self, k + 1))
                return true;
            ++left[c];
            emb.classes[c].pop_back();
        }
        return self(self, k + 1);
    };
    if (!assign(assign, 0))
        return std::nullopt;
    return emb;
}

} // namespace trisat
