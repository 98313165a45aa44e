#include "trisat/verifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "trisat/parallel.hpp"

namespace trisat {

SaturationReport is_saturated(const TripartiteGraph& g, const PartSizes& host, const PatternSpec& pat,
                              const VerifyOptions& options)
{
    if (g.part_sizes() != host)
        throw std::invalid_argument("graph part sizes do not match the host");
    SaturationReport report;
    report.min_degree = degree_profile(g).min_degree;
    auto missing = nonedges(g, TripartiteGraph::complete(host));
    report.checked_nonedges = missing.size();

    report.forbidden_witness = contains(g, pat);
    report.is_pattern_free = !report.forbidden_witness.has_value();
    if (!report.is_pattern_free) {
        // Supergraphs keep the witness, so every nonedge completes a copy.
        for (const Edge& e : missing)
            if (embedding_problem(g.with_edge(e.u, e.v), pat, *report.forbidden_witness))
                throw std::logic_error("witness lost after adding " + to_string(e));
        return report;
    }

    if (options.early_exit) {
        for (const Edge& e : missing)
            if (!contains_after(g, pat, e.u, e.v)) {
                report.violating_nonedges.push_back(e);
                break;
            }
        return report;
    }

    std::vector<char> violates(missing.size(), 0);
    int threads = options.threads > 0 ? options.threads : worker_count();
    parallel_for(missing.size(), threads,
                 [&](std::size_t k) { violates[k] = !contains_after(g, pat, missing[k].u, missing[k].v); });
    for (std::size_t k = 0; k < missing.size(); ++k)
        if (violates[k])
            report.violating_nonedges.push_back(missing[k]);
    std::sort(report.violating_nonedges.begin(), report.violating_nonedges.end(), canonical_less);
    return report;
}

std::string to_string(CheckStatus status)
{
    switch (status) {
    case CheckStatus::satisfied:
        return "satisfied";
    case CheckStatus::violated:
        return "violated";
    case CheckStatus::not_applicable:
        return "not_applicable";
    }
    return "?";
}

namespace {

VertexRef min_degree_vertex(const DegreeProfile& prof, int part)
{
    VertexRef best{part, 1};
    int n = static_cast<int>(prof.split[part - 1].size());
    for (int a = 1; a <= n; ++a)
        if (prof.degree({part, a}) < prof.degree(best))
            best = {part, a};
    return best;
}

void judge(DegreeCheck& c, const DegreeProfile& prof)
{
    if (c.observed >= c.bound) {
        c.status = CheckStatus::satisfied;
        return;
    }
    c.status = CheckStatus::violated;
    if (c.part != 0) {
        c.offending = min_degree_vertex(prof, c.part);
    } else {
        int part = 1;
        for (int i = 2; i <= 3; ++i)
            if (prof.min_degree[i - 1] < prof.min_degree[part - 1])
                part = i;
        c.offending = min_degree_vertex(prof, part);
    }
}

} // namespace

std::vector<DegreeCheck> degree_threshold_check(const TripartiteGraph& g, const PatternSpec& pat)
{
    std::vector<DegreeCheck> checks;
    DegreeProfile prof = degree_profile(g);
    if (pat.l == pat.m && pat.p >= 1) {
        DegreeCheck c;
        c.name = "min_degree_at_least_2m";
        c.bound = 2 * pat.p;
        c.observed = *std::min_element(prof.min_degree.begin(), prof.min_degree.end());
        checks.push_back(c);
    }
    if (pat.l == pat.m && pat.l >= 3 && pat.p == pat.l - 2) {
        for (int i = 1; i <= 3; ++i) {
            DegreeCheck c;
            c.name = "part_min_degree_at_least_2l_minus_2";
            c.part = i;
            c.bound = 2 * pat.l - 2;
            c.observed = prof.min_degree[i - 1];
            checks.push_back(c);
        }
    }
    if (checks.empty())
        return checks;

    VerifyOptions opts;
    opts.early_exit = true;
    bool saturated = is_saturated(g, g.part_sizes(), pat, opts).saturated();
    for (auto& c : checks) {
        if (!saturated) {
            c.status = CheckStatus::not_applicable;
            c.note = "graph is not saturated for the pattern";
            continue;
        }
        judge(c, prof);
        if (c.status == CheckStatus::violated)
            c.note = "expected only for large parts; informational";
    }
    return checks;
}

ResidualDiagnostics residual_structure_check(const TripartiteGraph& g, const IndexRanges& excluded)
{
    std::array<std::vector<bits::Word>, 3> keep;
    for (int i = 0; i < 3; ++i) {
        int n = g.part_sizes()[i];
        keep[i].assign(bits::words_for(static_cast<std::size_t>(n)), 0);
        for (int a = 0; a < n; ++a)
            bits::set(keep[i], static_cast<std::size_t>(a));
        for (auto [lo, hi] : excluded[i]) {
            if (lo < 1 || hi > n || lo > hi)
                throw std::invalid_argument("index range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                            "] does not fit part " + std::to_string(i + 1));
            for (int a = lo; a <= hi; ++a)
                bits::reset(keep[i], static_cast<std::size_t>(a - 1));
        }
    }

    ResidualDiagnostics diag;
    std::vector<bits::Word> scratch;
    for (int i = 0; i < 3; ++i) {
        for (std::size_t a = bits::next_set(keep[i], 0); a != bits::npos; a = bits::next_set(keep[i], a + 1)) {
            ResidualDegree row{{i + 1, static_cast<int>(a) + 1}, {}};
            for (int j = 0; j < 3; ++j) {
                if (j == i)
                    continue;
                scratch.assign(keep[j].begin(), keep[j].end());
                bits::and_into(scratch, g.row(i, static_cast<int>(a), j));
                row.residual_degree[j] = static_cast<int>(bits::count(scratch));
            }
            diag.degrees.push_back(row);
        }
    }

    for (std::size_t a = bits::next_set(keep[0], 0); a != bits::npos && diag.triangle_free;
         a = bits::next_set(keep[0], a + 1)) {
        auto into2 = g.row(0, static_cast<int>(a), 1);
        for (std::size_t b = bits::next_set(keep[1], 0); b != bits::npos; b = bits::next_set(keep[1], b + 1)) {
            if (!bits::test(into2, b))
                continue;
            scratch.assign(keep[2].begin(), keep[2].end());
            bits::and_into(scratch, g.row(0, static_cast<int>(a), 2));
            bits::and_into(scratch, g.row(1, static_cast<int>(b), 2));
            std::size_t c = bits::next_set(scratch, 0);
            if (c != bits::npos) {
                diag.triangle_free = false;
                diag.triangle = std::array<VertexRef, 3>{VertexRef{1, static_cast<int>(a) + 1},
                                                         VertexRef{2, static_cast<int>(b) + 1},
                                                         VertexRef{3, static_cast<int>(c) + 1}};
                break;
            }
        }
    }
    return diag;
}

} // namespace trisat
