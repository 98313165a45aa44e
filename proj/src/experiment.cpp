#include "trisat/experiment.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "trisat/search.hpp"
#include "trisat/serialize.hpp"

namespace trisat {

namespace {

using nlohmann::json;

const json& field(const json& obj, const std::string& key, const std::string& where)
{
    auto it = obj.find(key);
    if (it == obj.end())
        throw SpecError(where + ": missing field '" + key + "'");
    return *it;
}

std::int64_t as_int(const json& v, const std::string& where)
{
    if (!v.is_number_integer())
        throw SpecError(where + ": expected an integer");
    return v.get<std::int64_t>();
}

int as_small_int(const json& v, const std::string& where)
{
    auto x = as_int(v, where);
    if (x < 0 || x > 1000000)
        throw SpecError(where + ": value out of range");
    return static_cast<int>(x);
}

bool as_bool(const json& v, const std::string& where)
{
    if (!v.is_boolean())
        throw SpecError(where + ": expected true or false");
    return v.get<bool>();
}

ExperimentRun parse_run(const json& obj, const std::string& where)
{
    if (!obj.is_object())
        throw SpecError(where + ": expected an object");
    static const std::set<std::string> known{"action", "construction", "variant", "l",    "m",     "p",
                                             "n",      "force",        "greedy_trials", "seed", "exact", "output"};
    for (const auto& [key, value] : obj.items())
        if (!known.count(key))
            throw SpecError(where + ": unknown field '" + key + "'");

    ExperimentRun run;
    const json& action = field(obj, "action", where);
    if (!action.is_string() || (action != "construct" && action != "search"))
        throw SpecError(where + ".action: expected \"construct\" or \"search\"");
    run.action = action.get<std::string>();

    if (run.action == "construct") {
        const json& c = field(obj, "construction", where);
        if (!c.is_string())
            throw SpecError(where + ".construction: expected a string");
        try {
            run.construction = parse_construction(c.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw SpecError(where + ".construction: " + e.what());
        }
    } else if (obj.contains("construction")) {
        throw SpecError(where + ": 'construction' only applies to construct runs");
    }

    if (obj.contains("variant"))
        run.variant = as_small_int(obj["variant"], where + ".variant");
    bool cycle = run.construction == ConstructionKind::c4cycle;
    if (cycle) {
        run.l = 2;
        run.m = 2;
        run.p = 0;
    }
    if (!cycle || obj.contains("l"))
        run.l = as_small_int(field(obj, "l", where), where + ".l");
    if (!cycle || obj.contains("m"))
        run.m = as_small_int(field(obj, "m", where), where + ".m");
    if (obj.contains("p"))
        run.p = as_small_int(obj["p"], where + ".p");
    else if (run.construction && !cycle)
        run.p = run.m;
    else if (!run.construction)
        throw SpecError(where + ": missing field 'p'");

    const json& n = field(obj, "n", where);
    if (!n.is_array() || n.size() != 3)
        throw SpecError(where + ".n: expected [n1, n2, n3]");
    for (std::size_t i = 0; i < 3; ++i) {
        run.n[i] = as_small_int(n[i], where + ".n[" + std::to_string(i) + "]");
        if (run.n[i] < 1)
            throw SpecError(where + ".n: part sizes must be positive");
    }

    if (obj.contains("force"))
        run.force = as_bool(obj["force"], where + ".force");
    if (obj.contains("greedy_trials"))
        run.greedy_trials = as_small_int(obj["greedy_trials"], where + ".greedy_trials");
    if (obj.contains("seed")) {
        const json& s = obj["seed"];
        if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<std::int64_t>() >= 0))
            throw SpecError(where + ".seed: expected a non-negative integer");
        run.seed = s.get<std::uint64_t>();
    }
    if (obj.contains("exact"))
        run.exact = as_bool(obj["exact"], where + ".exact");
    if (obj.contains("output")) {
        if (!obj["output"].is_string())
            throw SpecError(where + ".output: expected a path string");
        run.output = obj["output"].get<std::string>();
    }
    try {
        PatternSpec check(run.l, run.m, run.p);
        (void)check;
    } catch (const std::invalid_argument& e) {
        throw SpecError(where + ": " + e.what());
    }
    return run;
}

std::string cell(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); }

} // namespace

ExperimentSpec parse_experiment_spec(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("experiment spec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw SpecError("experiment spec: expected an object");
    for (const auto& [key, value] : doc.items())
        if (key != "version" && key != "runs")
            throw SpecError("experiment spec: unknown field '" + key + "'");
    ExperimentSpec spec;
    spec.version = static_cast<int>(as_int(field(doc, "version", "experiment spec"), "version"));
    if (spec.version != experiment_spec_version)
        throw SpecError("experiment spec: unsupported version " + std::to_string(spec.version));
    const json& runs = field(doc, "runs", "experiment spec");
    if (!runs.is_array())
        throw SpecError("runs: expected an array");
    for (std::size_t k = 0; k < runs.size(); ++k)
        spec.runs.push_back(parse_run(runs[k], "runs[" + std::to_string(k) + "]"));
    return spec;
}

ExperimentSpec read_experiment_spec(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_experiment_spec(text.str());
}

std::string run_experiment_table(const ExperimentSpec& spec, int threads)
{
    std::ostringstream csv;
    csv << table_header << '\n';
    for (const auto& run : spec.runs) {
        PatternSpec pat(run.l, run.m, run.p);
        std::optional<std::int64_t> built, formula, greedy, exact;
        std::string hypothesis;
        std::string construction;
        if (run.construction) {
            ConstructionParams prm{*run.construction, run.variant, run.l, run.m, run.p, run.n};
            construction = to_string(*run.construction);
            pat = target_pattern(prm);
            auto g = build_construction(prm, run.force);
            built = static_cast<std::int64_t>(g.edge_count());
            auto rec = construction_formula(prm);
            formula = rec.value;
            hypothesis = rec.hypothesis_satisfied ? "true" : "false";
            if (!run.output.empty())
                write_graph_file(g, run.output, GraphFormat::json);
        }
        if (run.greedy_trials > 0)
            greedy = sat_greedy(run.n, pat, run.greedy_trials, run.seed, threads).value;
        if (run.exact) {
            SearchOptions opts;
            opts.threads = threads;
            auto r = sat_exact(run.n, pat, opts);
            if (r.status == SearchStatus::exact)
                exact = r.value;
        }
        csv << run.action << ',' << construction << ',' << (run.construction == ConstructionKind::c2 ? std::to_string(run.variant) : "")
            << ',' << pat.l << ',' << pat.m << ',' << pat.p << ',' << run.n[0] << ',' << run.n[1] << ',' << run.n[2]
            << ',' << cell(built) << ',' << cell(formula) << ',' << cell(greedy) << ',' << cell(exact) << ','
            << hypothesis << '\n';
    }
    return csv.str();
}

} // namespace trisat
