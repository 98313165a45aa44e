#include "trisat/search.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "trisat/parallel.hpp"
#include "trisat/rng.hpp"
#include "trisat/verifier.hpp"

namespace trisat {

std::string to_string(SearchMethod method)
{
    switch (method) {
    case SearchMethod::exact:
        return "exact";
    case SearchMethod::exhaustive:
        return "exhaustive";
    case SearchMethod::greedy:
        return "greedy";
    }
    return "?";
}

std::string to_string(SearchStatus status)
{
    switch (status) {
    case SearchStatus::exact:
        return "exact";
    case SearchStatus::inconclusive:
        return "inconclusive";
    case SearchStatus::sampled:
        return "sampled";
    }
    return "?";
}

SearchMethod parse_search_method(const std::string& name)
{
    if (name == "exact")
        return SearchMethod::exact;
    if (name == "exhaustive")
        return SearchMethod::exhaustive;
    if (name == "greedy")
        return SearchMethod::greedy;
    throw std::invalid_argument("unknown search method '" + name + "'");
}

bool canonical_graph_less(const TripartiteGraph& a, const TripartiteGraph& b)
{
    if (a.part_sizes() != b.part_sizes())
        return a.part_sizes() < b.part_sizes();
    auto ea = a.edges(), eb = b.edges();
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end(), canonical_less);
}

namespace {

void certify(const TripartiteGraph& g, const PartSizes& host, const PatternSpec& pat)
{
    VerifyOptions opts;
    opts.threads = 1;
    opts.early_exit = true;
    if (!is_saturated(g, host, pat, opts).saturated())
        throw std::logic_error("search produced a graph that is not saturated");
}

// Branch and bound over host edges.  G holds the included edges, Gmax the included
// and undecided ones.  An edge whose inclusion would create the pattern is excluded
// for good (it stays completing in every supergraph).  Any other exclusion is pending:
// it needs a copy through it in the final graph, which lies inside Gmax, so it must
// keep a copy through it in Gmax.  Once every edge is decided Gmax equals G and the
// pending checks are exactly the saturation condition.
class BranchSearch {
public:
    BranchSearch(const PartSizes& host, const PatternSpec& pat, bool enumerate)
        : pat_(pat), host_edges_(TripartiteGraph::complete(host).edges()), g_(TripartiteGraph::empty(host)),
          gmax_(TripartiteGraph::complete(host)), enumerate_(enumerate)
    {
    }

    std::size_t edge_total() const { return host_edges_.size(); }

    // Applies a fixed include/exclude prefix; false when the prefix is not a node of the tree.
    bool replay(const std::vector<bool>& include)
    {
        for (std::size_t k = 0; k < include.size(); ++k) {
            const Edge& e = host_edges_[k];
            bool allowed = !contains_after(g_.view(), pat_, e.u, e.v);
            if (include[k]) {
                if (!allowed)
                    return false;
                g_.add_edge(e.u, e.v);
                ++included_;
            } else if (!exclude(k, allowed)) {
                return false;
            }
        }
        return true;
    }

    // Explores the subtree below `depth`, pruning against the task-local incumbent.
    void run(std::size_t depth, std::int64_t incumbent_bound, std::uint64_t budget)
    {
        best_ = incumbent_bound;
        budget_ = budget;
        dfs(depth);
    }

    std::int64_t best() const { return best_; }
    const std::vector<TripartiteGraph>& found() const { return found_; }
    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }

private:
    bool exclude(std::size_t k, bool voluntary)
    {
        const Edge& e = host_edges_[k];
        gmax_.remove_edge(e.u, e.v);
        if (voluntary)
            pending_.push_back(k);
        for (std::size_t q : pending_)
            if (!contains_through(gmax_.view(), pat_, host_edges_[q].u, host_edges_[q].v))
                return false;
        return true;
    }

    void undo_exclude(std::size_t k, bool voluntary)
    {
        const Edge& e = host_edges_[k];
        gmax_.add_edge(e.u, e.v);
        if (voluntary)
            pending_.pop_back();
    }

    bool prune() const { return enumerate_ ? included_ > best_ : included_ >= best_; }

    void dfs(std::size_t k)
    {
        if (exhausted_)
            return;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        if (prune())
            return;
        if (k == host_edges_.size()) {
            if (included_ < best_)
                found_.clear();
            best_ = included_;
            found_.push_back(g_.view());
            return;
        }
        const Edge& e = host_edges_[k];
        bool allowed = !contains_after(g_.view(), pat_, e.u, e.v);
        if (allowed) {
            g_.add_edge(e.u, e.v);
            ++included_;
            dfs(k + 1);
            --included_;
            g_.remove_edge(e.u, e.v);
        }
        if (exclude(k, allowed))
            dfs(k + 1);
        undo_exclude(k, allowed);
    }

    PatternSpec pat_;
    std::vector<Edge> host_edges_;
    GraphBuilder g_;
    GraphBuilder gmax_;
    bool enumerate_;
    std::vector<std::size_t> pending_;
    std::int64_t included_ = 0;
    std::int64_t best_ = 0;
    std::vector<TripartiteGraph> found_;
    std::uint64_t nodes_ = 0;
    std::uint64_t budget_ = 0;
    bool exhausted_ = false;
};

inline constexpr std::size_t split_depth = 10;

struct TaskOutcome {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::vector<TripartiteGraph> found;
    std::uint64_t nodes = 0;
    bool exhausted = false;
};

SearchResult branch_and_bound(const PartSizes& host, const PatternSpec& pat, const SearchOptions& options,
                              bool enumerate)
{
    auto host_graph = TripartiteGraph::complete(host);
    if (host_graph.edge_count() > static_cast<std::size_t>(options.edge_guard))
        throw std::invalid_argument("host has " + std::to_string(host_graph.edge_count()) +
                                    " edges, above the exact-search guard of " + std::to_string(options.edge_guard));

    // Greedy maximal graphs are saturated, so they bound the optimum from above.
    auto upper = sat_greedy(host, pat, 16, 0x5eedULL, 1);
    std::int64_t ub = *upper.value;
    std::int64_t seed_bound = enumerate ? ub : ub + 1;

    std::size_t depth = std::min(split_depth, host_graph.edge_count());
    std::size_t tasks = std::size_t{1} << depth;
    std::uint64_t budget = options.node_budget.value_or(std::numeric_limits<std::uint64_t>::max());
    std::vector<TaskOutcome> outcomes(tasks);
    int threads = options.threads > 0 ? options.threads : worker_count();

    parallel_for(tasks, threads, [&](std::size_t t) {
        // Task order is DFS order: bit (depth-1-k) clear means edge k is included.
        std::vector<bool> prefix(depth);
        for (std::size_t k = 0; k < depth; ++k)
            prefix[k] = ((t >> (depth - 1 - k)) & 1U) == 0;
        BranchSearch search(host, pat, enumerate);
        if (!search.replay(prefix))
            return;
        search.run(depth, seed_bound, budget);
        auto& out = outcomes[t];
        out.nodes = search.nodes();
        out.exhausted = search.exhausted();
        if (!search.found().empty()) {
            out.best = search.best();
            out.found = search.found();
        }
    });

    SearchResult result;
    result.method = SearchMethod::exact;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    bool exhausted = false;
    for (const auto& out : outcomes) {
        result.nodes_explored += out.nodes;
        exhausted = exhausted || out.exhausted;
        best = std::min(best, out.best);
    }
    exhausted = exhausted || result.nodes_explored > budget;

    if (best == std::numeric_limits<std::int64_t>::max()) {
        // Only possible when the budget cut the search short.
        result.status = exhausted ? SearchStatus::inconclusive : SearchStatus::exact;
        if (!exhausted)
            throw std::logic_error("branch search found no saturated subgraph");
        result.value = ub;
        result.witnesses = upper.witnesses;
        return result;
    }
    result.status = exhausted ? SearchStatus::inconclusive : SearchStatus::exact;
    result.value = best;
    for (const auto& out : outcomes) {
        if (out.best != best)
            continue;
        if (!enumerate) {
            result.witnesses.push_back(out.found.front());
            break;
        }
        result.witnesses.insert(result.witnesses.end(), out.found.begin(), out.found.end());
    }
    if (enumerate) {
        std::sort(result.witnesses.begin(), result.witnesses.end(), canonical_graph_less);
        std::vector<TripartiteGraph> classes;
        for (auto& w : result.witnesses) {
            bool seen = false;
            for (const auto& c : classes)
                if (iso_equivalent(c, w)) {
                    seen = true;
                    break;
                }
            if (!seen)
                classes.push_back(std::move(w));
        }
        result.witnesses = std::move(classes);
    }
    for (const auto& w : result.witnesses)
        certify(w, host, pat);
    return result;
}

} // namespace

SearchResult sat_exact(const PartSizes& host, const PatternSpec& pat, const SearchOptions& options)
{
    return branch_and_bound(host, pat, options, false);
}

SearchResult enumerate_optima(const PartSizes& host, const PatternSpec& pat, const SearchOptions& options)
{
    return branch_and_bound(host, pat, options, true);
}

SearchResult sat_exhaustive(const PartSizes& host, const PatternSpec& pat, int threads)
{
    auto host_edges = TripartiteGraph::complete(host).edges();
    if (host_edges.size() > static_cast<std::size_t>(exhaustive_edge_limit))
        throw std::invalid_argument("exhaustive search is limited to " + std::to_string(exhaustive_edge_limit) +
                                    " host edges");
    std::size_t total = std::size_t{1} << host_edges.size();
    std::vector<char> saturated(total, 0);
    auto subgraph = [&](std::size_t mask) {
        GraphBuilder b(host);
        for (std::size_t k = 0; k < host_edges.size(); ++k)
            if ((mask >> k) & 1U)
                b.add_edge(host_edges[k].u, host_edges[k].v);
        return std::move(b).build();
    };
    VerifyOptions opts;
    opts.threads = 1;
    opts.early_exit = true;
    parallel_for(total, threads > 0 ? threads : worker_count(),
                 [&](std::size_t mask) { saturated[mask] = is_saturated(subgraph(mask), host, pat, opts).saturated(); });

    SearchResult result;
    result.method = SearchMethod::exhaustive;
    result.nodes_explored = total;
    int best = std::numeric_limits<int>::max();
    for (std::size_t mask = 0; mask < total; ++mask)
        if (saturated[mask])
            best = std::min(best, std::popcount(mask));
    if (best == std::numeric_limits<int>::max())
        throw std::logic_error("no saturated subgraph found");
    result.value = best;
    for (std::size_t mask = 0; mask < total; ++mask)
        if (saturated[mask] && std::popcount(mask) == best)
            result.witnesses.push_back(subgraph(mask));
    return result;
}

TripartiteGraph greedy_trial(const PartSizes& host, const PatternSpec& pat, std::uint64_t seed, std::uint64_t trial)
{
    auto order = TripartiteGraph::complete(host).edges();
    auto rng = XorShift64Star::for_trial(seed, trial);
    for (std::size_t i = order.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next() % i);
        std::swap(order[i - 1], order[j]);
    }
    GraphBuilder b(host);
    for (const Edge& e : order)
        if (!contains_after(b.view(), pat, e.u, e.v))
            b.add_edge(e.u, e.v);
    return std::move(b).build();
}

SearchResult sat_greedy(const PartSizes& host, const PatternSpec& pat, int trials, std::uint64_t seed, int threads)
{
    if (trials < 1)
        throw std::invalid_argument("greedy search needs at least one trial");
    std::vector<std::optional<TripartiteGraph>> graphs(static_cast<std::size_t>(trials));
    parallel_for(graphs.size(), threads > 0 ? threads : worker_count(),
                 [&](std::size_t t) { graphs[t] = greedy_trial(host, pat, seed, t); });

    SearchResult result;
    result.method = SearchMethod::greedy;
    result.status = SearchStatus::sampled;
    result.seed = seed;
    result.trials = trials;
    result.nodes_explored = static_cast<std::uint64_t>(trials);
    for (int t = 0; t < trials; ++t) {
        auto count = static_cast<std::int64_t>(graphs[static_cast<std::size_t>(t)]->edge_count());
        if (!result.value || count < *result.value) {
            result.value = count;
            result.best_trial = t;
        }
    }
    result.witnesses.push_back(*graphs[static_cast<std::size_t>(result.best_trial)]);
    certify(result.witnesses.front(), host, pat);
    return result;
}

} // namespace trisat
