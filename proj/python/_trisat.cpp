#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trisat/constructions.hpp"
#include "trisat/formulas.hpp"
#include "trisat/search.hpp"
#include "trisat/serialize.hpp"
#include "trisat/verifier.hpp"

namespace py = pybind11;
using namespace trisat;

namespace {

using Triple = std::array<int, 3>;

PatternSpec pattern(const Triple& t) { return {t[0], t[1], t[2]}; }

py::tuple edge_tuple(const Edge& e) { return py::make_tuple(e.u.part, e.u.index, e.v.part, e.v.index); }

py::dict search_dict(const SearchResult& r)
{
    py::dict d;
    d["method"] = to_string(r.method);
    d["status"] = to_string(r.status);
    d["value"] = r.value ? py::cast(*r.value) : py::none();
    d["nodes_explored"] = r.nodes_explored;
    d["witnesses"] = r.witnesses;
    if (r.method == SearchMethod::greedy) {
        d["seed"] = r.seed;
        d["trials"] = r.trials;
        d["best_trial"] = r.best_trial;
    }
    return d;
}

py::dict bound_dict(const BoundRecord& r)
{
    py::dict params;
    for (const auto& [k, v] : r.params)
        params[py::str(k)] = v;
    py::dict d;
    d["name"] = r.name;
    d["params"] = params;
    d["value"] = r.value;
    d["kind"] = to_string(r.kind);
    d["hypothesis_satisfied"] = r.hypothesis_satisfied;
    d["hypothesis"] = r.hypothesis;
    d["note"] = r.note;
    return d;
}

SearchOptions options(std::optional<std::uint64_t> budget, int threads)
{
    SearchOptions o;
    o.node_budget = budget;
    o.threads = threads;
    return o;
}

} // namespace

PYBIND11_MODULE(_trisat, m)
{
    m.doc() = "Saturated subgraphs of complete tripartite graphs";

    py::class_<TripartiteGraph>(m, "Graph")
        .def(py::init([](const Triple& parts, const std::vector<std::array<int, 4>>& edges) {
                 GraphBuilder b(parts);
                 for (const auto& e : edges)
                     b.add_edge({e[0], e[1]}, {e[2], e[3]});
                 return std::move(b).build();
             }),
             py::arg("parts"), py::arg("edges") = std::vector<std::array<int, 4>>{})
        .def_static("complete", &TripartiteGraph::complete)
        .def_property_readonly("parts", &TripartiteGraph::part_sizes)
        .def_property_readonly("edge_count", &TripartiteGraph::edge_count)
        .def("edges",
             [](const TripartiteGraph& g) {
                 py::list out;
                 for (const Edge& e : g.edges())
                     out.append(edge_tuple(e));
                 return out;
             })
        .def("has_edge",
             [](const TripartiteGraph& g, int i, int a, int j, int b) { return g.has_edge({i, a}, {j, b}); })
        .def("to_json", [](const TripartiteGraph& g) { return serialize(g, GraphFormat::json); })
        .def("to_edges", [](const TripartiteGraph& g) { return serialize(g, GraphFormat::edges); })
        .def_static("parse", [](const std::string& text) { return deserialize(text); })
        .def("__eq__", [](const TripartiteGraph& a, const TripartiteGraph& b) { return a == b; })
        .def("__repr__", [](const TripartiteGraph& g) {
            const auto& n = g.part_sizes();
            return "<Graph parts=(" + std::to_string(n[0]) + "," + std::to_string(n[1]) + "," +
                   std::to_string(n[2]) + ") edges=" + std::to_string(g.edge_count()) + ">";
        });

    m.def(
        "construct",
        [](const std::string& kind, const Triple& n, int l, int m_, std::optional<int> p, int variant, bool force) {
            ConstructionParams prm{parse_construction(kind), variant, l, m_, 0, n};
            if (prm.kind == ConstructionKind::c4cycle) {
                prm.l = 2;
                prm.m = 2;
            } else {
                prm.p = p.value_or(m_);
            }
            return build_construction(prm, force);
        },
        py::arg("kind"), py::arg("n"), py::arg("l") = 2, py::arg("m") = 2, py::arg("p") = py::none(),
        py::arg("variant") = 1, py::arg("force") = false);

    m.def(
        "is_saturated",
        [](const TripartiteGraph& g, const Triple& host, const Triple& pat) {
            auto r = is_saturated(g, host, pattern(pat));
            py::dict d;
            d["saturated"] = r.saturated();
            d["is_pattern_free"] = r.is_pattern_free;
            py::list viol;
            for (const auto& e : r.violating_nonedges)
                viol.append(edge_tuple(e));
            d["violating_nonedges"] = viol;
            d["checked_nonedges"] = r.checked_nonedges;
            d["min_degree"] = r.min_degree;
            return d;
        },
        py::arg("graph"), py::arg("host"), py::arg("pattern"));

    m.def(
        "contains", [](const TripartiteGraph& g, const Triple& pat) { return contains(g, pattern(pat)).has_value(); },
        py::arg("graph"), py::arg("pattern"));

    m.def("iso_equivalent", &iso_equivalent);

    m.def(
        "sat_exact",
        [](const Triple& host, const Triple& pat, std::optional<std::uint64_t> budget, int threads) {
            py::gil_scoped_release release;
            auto r = sat_exact(host, pattern(pat), options(budget, threads));
            py::gil_scoped_acquire acquire;
            return search_dict(r);
        },
        py::arg("host"), py::arg("pattern"), py::arg("budget") = py::none(), py::arg("threads") = 0);

    m.def(
        "enumerate_optima",
        [](const Triple& host, const Triple& pat, std::optional<std::uint64_t> budget, int threads) {
            py::gil_scoped_release release;
            auto r = enumerate_optima(host, pattern(pat), options(budget, threads));
            py::gil_scoped_acquire acquire;
            return search_dict(r);
        },
        py::arg("host"), py::arg("pattern"), py::arg("budget") = py::none(), py::arg("threads") = 0);

    m.def(
        "sat_exhaustive",
        [](const Triple& host, const Triple& pat) { return search_dict(sat_exhaustive(host, pattern(pat))); },
        py::arg("host"), py::arg("pattern"));

    m.def(
        "sat_greedy",
        [](const Triple& host, const Triple& pat, int trials, std::uint64_t seed) {
            return search_dict(sat_greedy(host, pattern(pat), trials, seed));
        },
        py::arg("host"), py::arg("pattern"), py::arg("trials") = 100, py::arg("seed") = 0);

    m.def(
        "formula",
        [](const std::string& name, const std::map<std::string, std::int64_t>& params) {
            return bound_dict(evaluate_formula(name, params));
        },
        py::arg("name"), py::arg("params"));
}
