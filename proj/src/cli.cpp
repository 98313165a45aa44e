#include "trisat/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "trisat/constructions.hpp"
#include "trisat/experiment.hpp"
#include "trisat/formulas.hpp"
#include "trisat/search.hpp"
#include "trisat/serialize.hpp"
#include "trisat/verifier.hpp"

namespace trisat {

namespace {

using nlohmann::json;

// Any failure that should end the command with exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::string& text, std::size_t count, const std::string& flag)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw UsageError(flag + ": '" + item + "' is not an integer");
        out.push_back(v);
    }
    if (out.size() != count || (!text.empty() && text.back() == ','))
        throw UsageError(flag + ": expected " + std::to_string(count) + " comma-separated integers");
    return out;
}

PartSizes parse_sizes(const std::string& text, const std::string& flag)
{
    auto v = parse_ints(text, 3, flag);
    for (int x : v)
        if (x < 1)
            throw UsageError(flag + ": part sizes must be positive");
    return {v[0], v[1], v[2]};
}

PatternSpec parse_pattern(const std::string& text)
{
    auto v = parse_ints(text, 3, "--pattern");
    try {
        return PatternSpec(v[0], v[1], v[2]);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--pattern: ") + e.what());
    }
}

json vertex_json(VertexRef v) { return json::array({v.part, v.index}); }
json edge_json(const Edge& e) { return json::array({e.u.part, e.u.index, e.v.part, e.v.index}); }
json graph_json(const TripartiteGraph& g) { return json::parse(serialize(g, GraphFormat::json)); }

json embedding_json(const Embedding& emb)
{
    json classes = json::array();
    for (const auto& cls : emb.classes) {
        json c = json::array();
        for (auto v : cls)
            c.push_back(vertex_json(v));
        classes.push_back(c);
    }
    return classes;
}

json bound_json(const BoundRecord& r)
{
    json params = json::object();
    for (const auto& [k, v] : r.params)
        params[k] = v;
    return {{"name", r.name},
            {"params", params},
            {"value", r.value},
            {"kind", to_string(r.kind)},
            {"hypothesis_satisfied", r.hypothesis_satisfied},
            {"hypothesis", r.hypothesis},
            {"note", r.note},
            {"anchor", r.anchor}};
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct ConstructArgs {
    std::string construction;
    std::optional<int> l, m, p;
    int variant = 1;
    std::string n;
    std::string out_path;
    std::string format = "json";
    bool force = false;
};

int do_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err)
{
    ConstructionParams prm;
    try {
        prm.kind = parse_construction(a.construction);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    prm.n = parse_sizes(a.n, "--n");
    prm.variant = a.variant;
    if (prm.kind == ConstructionKind::c4cycle) {
        prm.l = 2;
        prm.m = 2;
        prm.p = 0;
    } else {
        if (!a.l || !a.m)
            throw UsageError("--l and --m are required for construction " + a.construction);
        prm.l = *a.l;
        prm.m = *a.m;
        bool needs_p = prm.kind == ConstructionKind::c3 || prm.kind == ConstructionKind::c5;
        if (needs_p && !a.p)
            throw UsageError("--p is required for construction " + a.construction);
        prm.p = a.p.value_or(prm.m);
    }
    GraphFormat format = parse_format(a.format);
    TripartiteGraph g = build_construction(prm, a.force);

    std::string formula = "NA";
    bool match = false;
    try {
        auto rec = construction_formula(prm);
        formula = std::to_string(rec.value);
        match = rec.value == static_cast<std::int64_t>(g.edge_count());
    } catch (const std::invalid_argument&) {
    }
    if (a.out_path.empty())
        out << serialize(g, format);
    else
        write_graph_file(g, a.out_path, format);
    err << "edges=" << g.edge_count() << " formula=" << formula << " match=" << (match ? "true" : "false") << '\n';
    return 0;
}

struct VerifyArgs {
    std::string graph;
    std::string host;
    std::string pattern;
    bool early_exit = false;
};

int do_verify(const VerifyArgs& a, std::ostream& out)
{
    PartSizes host = parse_sizes(a.host, "--host");
    PatternSpec pat = parse_pattern(a.pattern);
    TripartiteGraph g = deserialize(slurp(a.graph));
    if (g.part_sizes() != host)
        throw UsageError("graph part sizes do not match --host");
    VerifyOptions opts;
    opts.early_exit = a.early_exit;
    auto report = is_saturated(g, host, pat, opts);

    json doc;
    doc["saturated"] = report.saturated();
    doc["is_pattern_free"] = report.is_pattern_free;
    doc["forbidden_witness"] = report.forbidden_witness ? embedding_json(*report.forbidden_witness) : json(nullptr);
    json viol = json::array();
    for (const auto& e : report.violating_nonedges)
        viol.push_back(edge_json(e));
    doc["violating_nonedges"] = viol;
    doc["checked_nonedges"] = report.checked_nonedges;
    doc["edges"] = g.edge_count();
    doc["min_degree"] = report.min_degree;
    json checks = json::array();
    for (const auto& c : degree_threshold_check(g, pat)) {
        json item{{"name", c.name}, {"part", c.part},           {"bound", c.bound},
                  {"observed", c.observed}, {"status", to_string(c.status)}, {"note", c.note}};
        item["offending"] = c.offending ? vertex_json(*c.offending) : json(nullptr);
        checks.push_back(item);
    }
    doc["degree_checks"] = checks;
    emit(out, doc);
    return report.saturated() ? 0 : 1;
}

struct SatArgs {
    std::string host;
    std::string pattern;
    std::string method;
    int trials = 100;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> budget;
    bool enumerate = false;
    std::string witness_dir;
    int max_edges = 40;
};

int do_sat(const SatArgs& a, std::ostream& out)
{
    PartSizes host = parse_sizes(a.host, "--host");
    PatternSpec pat = parse_pattern(a.pattern);
    SearchMethod method;
    try {
        method = parse_search_method(a.method);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (a.enumerate && method != SearchMethod::exact)
        throw UsageError("--enumerate requires --method exact");

    SearchResult r;
    SearchOptions opts;
    opts.node_budget = a.budget;
    opts.edge_guard = a.max_edges;
    switch (method) {
    case SearchMethod::exact:
        r = a.enumerate ? enumerate_optima(host, pat, opts) : sat_exact(host, pat, opts);
        break;
    case SearchMethod::exhaustive:
        r = sat_exhaustive(host, pat);
        break;
    case SearchMethod::greedy:
        if (a.trials < 1)
            throw UsageError("--trials must be at least 1");
        r = sat_greedy(host, pat, a.trials, a.seed);
        break;
    }

    json doc;
    doc["method"] = to_string(r.method);
    doc["status"] = to_string(r.status);
    doc["value"] = r.value ? json(*r.value) : json(nullptr);
    doc["nodes_explored"] = r.nodes_explored;
    doc["witness_count"] = r.witnesses.size();
    if (method == SearchMethod::greedy) {
        doc["seed"] = r.seed;
        doc["trials"] = r.trials;
        doc["best_trial"] = r.best_trial;
    }
    json witnesses = json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back(graph_json(w));
    doc["witnesses"] = witnesses;

    if (a.enumerate) {
        std::filesystem::path dir = a.witness_dir.empty() ? "." : a.witness_dir;
        std::filesystem::create_directories(dir);
        json files = json::array();
        for (std::size_t k = 0; k < r.witnesses.size(); ++k) {
            std::ostringstream name;
            name << "witness_" << std::setw(3) << std::setfill('0') << k + 1 << ".json";
            auto path = (dir / name.str()).string();
            write_graph_file(r.witnesses[k], path, GraphFormat::json);
            files.push_back(path);
        }
        doc["witness_files"] = files;
    }
    emit(out, doc);
    return 0;
}

int do_formula(const std::string& name, const std::string& params, std::ostream& out)
{
    std::map<std::string, std::int64_t> values;
    std::stringstream ss(params);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("--params: expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(val, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != val.size())
            throw UsageError("--params: '" + val + "' is not an integer");
        if (!values.emplace(key, v).second)
            throw UsageError("--params: duplicate parameter '" + key + "'");
    }
    emit(out, bound_json(evaluate_formula(name, values)));
    return 0;
}

int do_table(const std::string& spec_path, const std::string& out_path, std::ostream& out)
{
    auto spec = parse_experiment_spec(slurp(spec_path));
    std::string csv = run_experiment_table(spec);
    if (out_path.empty() || out_path == "-") {
        out << csv;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f)
            throw UsageError("cannot write " + out_path);
        f << csv;
    }
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Saturated subgraphs of complete tripartite graphs", "trisat"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Generate a construction");
    construct->add_option("--construction", ca.construction, "1, 2, 3, 4, 5 or c4")->required();
    construct->add_option("--l", ca.l);
    construct->add_option("--m", ca.m);
    construct->add_option("--p", ca.p);
    construct->add_option("--variant", ca.variant, "Part i anchoring the removed path (construction 2)");
    construct->add_option("--n", ca.n, "N1,N2,N3")->required();
    construct->add_option("--out", ca.out_path, "Output file (default: standard output)");
    construct->add_option("--format", ca.format, "json or edges");
    construct->add_flag("--force", ca.force, "Build outside the guaranteed parameter range");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Check saturation of a graph file");
    verify->add_option("--graph", va.graph)->required();
    verify->add_option("--host", va.host, "N1,N2,N3")->required();
    verify->add_option("--pattern", va.pattern, "L,M,P")->required();
    verify->add_flag("--early-exit", va.early_exit, "Stop at the first violating nonedge");

    SatArgs sa;
    auto* sat = app.add_subcommand("sat", "Saturation number search");
    sat->add_option("--host", sa.host, "N1,N2,N3")->required();
    sat->add_option("--pattern", sa.pattern, "L,M,P")->required();
    sat->add_option("--method", sa.method, "exact, exhaustive or greedy")->required();
    sat->add_option("--trials", sa.trials);
    sat->add_option("--seed", sa.seed);
    sat->add_option("--budget", sa.budget, "Node budget for the exact method");
    sat->add_flag("--enumerate", sa.enumerate, "All optima up to isomorphism");
    sat->add_option("--witness-dir", sa.witness_dir, "Directory for enumerated witnesses");
    sat->add_option("--max-edges", sa.max_edges, "Host edge guard for the exact method");

    std::string fname, fparams;
    auto* formula = app.add_subcommand("formula", "Evaluate a closed-form bound");
    formula->add_option("--name", fname)->required();
    formula->add_option("--params", fparams, "k=v,...")->required();

    std::string spec_path, table_out;
    auto* table = app.add_subcommand("table", "Run an experiment spec into a CSV table");
    table->add_option("--spec", spec_path)->required();
    table->add_option("--out", table_out, "CSV file (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        emit(out, json{{"error", e.what()}});
        err << "trisat: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*construct)
            return do_construct(ca, out, err);
        if (*verify)
            return do_verify(va, out);
        if (*sat)
            return do_sat(sa, out);
        if (*formula)
            return do_formula(fname, fparams, out);
        if (*table)
            return do_table(spec_path, table_out, out);
    } catch (const std::exception& e) {
        emit(out, json{{"error", e.what()}});
        err << "trisat: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace trisat
