#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "biplab/construction.hpp"
#include "biplab/json_io.hpp"
#include "biplab/numtheory.hpp"
#include "biplab/ramsey.hpp"
#include "biplab/spectrum.hpp"

namespace py = pybind11;
using namespace biplab;

namespace {

Selection selection_from_lists(const BipartiteGraph& g, const std::vector<std::uint32_t>& xs,
                               const std::vector<std::uint32_t>& ys) {
    Selection sel = Selection::none_of(g);
    for (auto xi : xs) sel.x_mask.set(xi);
    for (auto yi : ys) sel.y_mask.set(yi);
    return sel;
}

py::dict json_to_dict(const OrderedJson& j) {
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_bipramsey, m) {
    m.doc() = "bipartite induced-subgraph size spectra, multiplication tables and the "
              "randomized size-family construction";

    py::class_<BipartiteGraph>(m, "BipartiteGraph")
        .def_static("build", &BipartiteGraph::build, py::arg("x_size"), py::arg("y_size"),
                    py::arg("edges"))
        .def_property_readonly("x_size", &BipartiteGraph::x_size)
        .def_property_readonly("y_size", &BipartiteGraph::y_size)
        .def_property_readonly("edge_count", &BipartiteGraph::edge_count)
        .def("has_edge", &BipartiteGraph::has_edge)
        .def("degree_x", &BipartiteGraph::degree_x)
        .def("degree_y", &BipartiteGraph::degree_y)
        .def("transposed", &BipartiteGraph::transposed)
        .def_property_readonly("is_transposed", &BipartiteGraph::is_transposed)
        .def("__eq__", [](const BipartiteGraph& a, const BipartiteGraph& b) { return a == b; })
        .def("__repr__", [](const BipartiteGraph& g) {
            return "<BipartiteGraph " + std::to_string(g.x_size()) + "x" +
                   std::to_string(g.y_size()) + ", e=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("random_bipartite", &random_bipartite, py::arg("x_size"), py::arg("y_size"),
          py::arg("p"), py::arg("seed"));
    m.def("random_bipartite_exact_edges", &random_bipartite_exact_edges, py::arg("x_size"),
          py::arg("y_size"), py::arg("e"), py::arg("seed"));
    m.def("parse_graph", &parse_graph);
    m.def("serialize_graph", &serialize_graph);
    m.def("density", [](const BipartiteGraph& g) {
        const auto r = density(g);
        return py::make_tuple(r.num, r.den);
    });
    m.def("induced_edge_count",
          [](const BipartiteGraph& g, const std::vector<std::uint32_t>& xs,
             const std::vector<std::uint32_t>& ys) {
              return induced_edge_count(g, selection_from_lists(g, xs, ys));
          },
          py::arg("g"), py::arg("x_vertices"), py::arg("y_vertices"));

    m.def("ford_delta", &ford_delta);
    m.def("multiplication_table",
          [](std::uint64_t n) { return multiplication_table(n).to_vector(); });
    m.def("multiplication_table_size",
          [](std::uint64_t n) { return multiplication_table_size(n); });
    m.def("phi_complete_bipartite",
          [](std::uint64_t a, std::uint64_t b) { return phi_complete_bipartite(a, b); });
    m.def("hxyz", &hxyz, py::arg("x"), py::arg("y"), py::arg("z"));
    m.def("ford_estimate", &ford_estimate);
    m.def("phi_sandwich", [](std::uint64_t d, std::uint64_t mm) {
        const auto b = phi_sandwich(d, mm);
        return py::make_tuple(b.lower, b.upper);
    });
    m.def("bipartite_ramsey_upper",
          [](std::uint64_t p, std::uint64_t q) { return bipartite_ramsey_upper(p, q).to_string(); });
    m.def("ramsey_probability_bound", &ramsey_probability_bound);
    m.def("ramsey_probability_log_bound", &ramsey_probability_log_bound);

    m.def("phi_exact",
          [](const BipartiteGraph& g, std::uint64_t budget) {
              const auto rep = phi_exact(g, budget);
              return py::make_tuple(rep.phi, rep.sizes.to_vector());
          },
          py::arg("g"), py::arg("budget") = kDefaultSpectrumBudget);
    m.def("phi_sampled", [](const BipartiteGraph& g, std::uint64_t trials, std::uint64_t seed) {
        const auto rep = phi_sampled(g, trials, seed);
        return py::make_tuple(rep.phi, rep.sizes.to_vector());
    });

    m.def("is_c_bipartite_ramsey",
          [](const BipartiteGraph& g, double C, std::uint64_t budget) {
              return json_to_dict(to_json(is_c_bipartite_ramsey(g, C, budget)));
          },
          py::arg("g"), py::arg("C"), py::arg("budget") = kDefaultSearchBudget);
    m.def("max_balanced_biclique",
          [](const BipartiteGraph& g, const std::string& kind) {
              const auto r = max_balanced_biclique(
                  g, kind == "complete" ? BicliqueKind::Complete : BicliqueKind::Empty);
              return py::make_tuple(r.value, r.exhaustive);
          },
          py::arg("g"), py::arg("kind") = "complete");
    m.def("diversity_check", [](const BipartiteGraph& g, double c, double delta) {
        return json_to_dict(to_json(diversity_check(g, c, delta)));
    });
    m.def("pair_diversity_check",
          [](const BipartiteGraph& g, double alpha, double delta, double eps) {
              return json_to_dict(to_json(pair_diversity_check(g, alpha, delta, eps)));
          });
    m.def("richness_check_exact", [](const BipartiteGraph& g, double gamma, double delta,
                                     double eps) {
        return json_to_dict(to_json(richness_check_exact(g, gamma, delta, eps)));
    });
    m.def("richness_check_sampled", [](const BipartiteGraph& g, double gamma, double delta,
                                       double eps, std::uint64_t trials, std::uint64_t seed) {
        return json_to_dict(to_json(richness_check_sampled(g, gamma, delta, eps, trials, seed)));
    });
    m.def("lemma46_implications", [](const BipartiteGraph& g, double gamma, double delta,
                                     double eps) {
        return json_to_dict(to_json(lemma46_implications(g, gamma, delta, eps)));
    });
    m.def("turan_bounds", [](std::uint64_t n, std::uint64_t max_deg, std::uint64_t edges) {
        const auto b = turan_bounds(n, max_deg, edges);
        return py::make_tuple(b.by_degree, b.by_edges);
    });

    py::class_<ConstructionParams>(m, "ConstructionParams")
        .def_static("defaults", &ConstructionParams::defaults)
        .def_static("load_file", &ConstructionParams::load_file)
        .def_readwrite("seed", &ConstructionParams::seed)
        .def_readwrite("c", &ConstructionParams::c)
        .def_readwrite("retries", &ConstructionParams::retries)
        .def("to_dict", [](const ConstructionParams& p) { return json_to_dict(to_json(p)); });

    m.def("run_pipeline",
          [](const BipartiteGraph& g, std::uint64_t l, const ConstructionParams& params) {
              const auto res = run_pipeline(g, l, params);
              py::dict d;
              d["ok"] = res.ok;
              d["failed_stage"] = res.ok ? "" : stage_name(res.failed_stage);
              d["message"] = res.message;
              if (res.witness) d["witness"] = json_to_dict(witness_to_json(*res.witness, false));
              if (res.family) {
                  d["family"] = json_to_dict(family_to_json(*res.family));
                  d["sizes"] = res.family->final_sizes.to_vector();
              }
              return d;
          });
    m.def("theorem_harness", [](const BipartiteGraph& g, const ConstructionParams& params) {
        const auto res = theorem_harness(g, params);
        py::dict d;
        d["distinct_count"] = res.distinct_count;
        d["failures"] = res.failures;
        d["sizes"] = res.total.to_vector();
        return d;
    });

#ifdef VERSION_INFO
#define BIPLAB_STR2(x) #x
#define BIPLAB_STR(x) BIPLAB_STR2(x)
    m.attr("__version__") = BIPLAB_STR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
