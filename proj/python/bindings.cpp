// Python bindings for the core pipeline: graph loading and generation, the
// closed-form and brute-force dim-1 diagrams, verification, and distances.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "icgraph/generators.hpp"
#include "icgraph/json_io.hpp"
#include "icgraph/theorem.hpp"

namespace py = pybind11;
using namespace icgraph;

namespace {

FiltrationModel model_from_string(const std::string& name) {
    if (name == "cech") return FiltrationModel::cech;
    if (name == "rips") return FiltrationModel::rips;
    throw py::value_error("model must be \"cech\" or \"rips\"");
}

std::vector<std::pair<double, double>> points_as_pairs(const std::vector<DiagramPoint>& pts) {
    std::vector<std::pair<double, double>> out;
    out.reserve(pts.size());
    for (const DiagramPoint& p : pts) out.emplace_back(p.birth, p.death);
    return out;
}

std::vector<DiagramPoint> pairs_as_points(
    const std::vector<std::pair<double, double>>& pairs) {
    std::vector<DiagramPoint> out;
    out.reserve(pairs.size());
    for (auto [b, d] : pairs) out.push_back(DiagramPoint{b, d});
    return out;
}

GeneratorSpec::Family family_from_string(const std::string& name) {
    if (name == "cycle") return GeneratorSpec::Family::cycle;
    if (name == "wedge") return GeneratorSpec::Family::wedge;
    if (name == "theta") return GeneratorSpec::Family::theta;
    if (name == "complete") return GeneratorSpec::Family::complete;
    if (name == "random") return GeneratorSpec::Family::random_graph;
    throw py::value_error("unknown generator family \"" + name + "\"");
}

}  // namespace

PYBIND11_MODULE(_icgraph, m) {
    m.doc() = "intrinsic Cech persistence diagrams of finite metric graphs";

    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);

    py::class_<MetricGraph>(m, "MetricGraph")
        .def_property_readonly("vertex_count", &MetricGraph::vertex_count)
        .def_property_readonly("edge_count", &MetricGraph::edge_count)
        .def_property_readonly("components", &MetricGraph::component_count)
        .def_property_readonly("total_length", &MetricGraph::total_length)
        .def("genus", &MetricGraph::genus)
        .def("is_simple", &MetricGraph::is_simple)
        .def("to_json", [](const MetricGraph& g) { return graph_to_json(g).dump(); })
        .def("__repr__", [](const MetricGraph& g) {
            return "MetricGraph(" + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges, genus " +
                   std::to_string(g.genus()) + ")";
        });

    m.def("load", [](const std::string& path) { return load_graph(path); },
          py::arg("path"), "Load a graph from a JSON file.");
    m.def("parse", &parse_graph, py::arg("text"), "Parse a graph from a JSON string.");
    m.def("normalize", [](const MetricGraph& g) { return normalize(g).graph; },
          py::arg("graph"), "Replace self-loops and parallel edges by subdivisions.");

    m.def(
        "generate",
        [](const std::string& family, const std::vector<double>& lengths, int n, int m_edges,
           double edge_length, std::uint64_t seed) {
            GeneratorSpec spec;
            spec.family = family_from_string(family);
            spec.lengths = lengths;
            spec.vertices = n;
            spec.edges = m_edges;
            spec.edge_length = edge_length;
            spec.seed = seed;
            return generate(spec);
        },
        py::arg("family"), py::arg("lengths") = std::vector<double>{}, py::arg("n") = 0,
        py::arg("m") = 0, py::arg("edge_length") = 1.0, py::arg("seed") = 0,
        "Deterministic synthetic graph families: cycle, wedge, theta, complete, random.");

    m.def(
        "shortest_loop_lengths",
        [](const MetricGraph& g) {
            const MetricGraph normalized = normalize(g).graph;
            if (normalized.genus() == 0) return std::vector<double>{};
            return shortest_system(normalized).length_sequence();
        },
        py::arg("graph"), "Non-decreasing length sequence of the shortest system of loops.");

    m.def(
        "predicted_diagram",
        [](const MetricGraph& g) { return points_as_pairs(predicted_diagram(g).points(1)); },
        py::arg("graph"),
        "Closed-form dim-1 diagram: one (0, length/4) point per shortest-system loop.");

    m.def(
        "computed_diagram",
        [](const MetricGraph& g, double delta, const std::string& model, double eps_max,
           int dim, int threads) {
            PipelineOptions opts;
            opts.delta = delta;
            opts.model = model_from_string(model);
            opts.eps_max = eps_max;
            opts.threads = threads;
            return points_as_pairs(computed_diagram(g, opts).points(dim));
        },
        py::arg("graph"), py::arg("delta"), py::arg("model") = "cech",
        py::arg("eps_max") = 0.0, py::arg("dim") = 1, py::arg("threads") = 0,
        "Brute-force diagram via discretization, filtration, and reduction.");

    m.def(
        "verify",
        [](const MetricGraph& g, double delta, double tol, const std::string& model,
           double eps_max, int threads) {
            VerificationReport r =
                verify(g, delta, tol, model_from_string(model), eps_max, threads);
            py::dict out;
            out["model"] = to_string(r.model);
            out["delta"] = r.delta;
            out["eps_max"] = r.eps_max;
            out["tol"] = r.tol;
            out["scale_valid"] = r.scale_valid;
            out["shortest_loop"] = r.shortest_loop;
            out["predicted"] = points_as_pairs(r.predicted);
            out["computed"] = points_as_pairs(r.computed);
            out["bottleneck"] = r.bottleneck_distance;
            out["pass"] = r.pass;
            out["status"] = r.status;
            return out;
        },
        py::arg("graph"), py::arg("delta"), py::arg("tol") = 0.0, py::arg("model") = "cech",
        py::arg("eps_max") = 0.0, py::arg("threads") = 0,
        "Compare the closed form against the brute-force pipeline.");

    m.def(
        "bottleneck",
        [](const std::vector<std::pair<double, double>>& a,
           const std::vector<std::pair<double, double>>& b) {
            return bottleneck(pairs_as_points(a), pairs_as_points(b));
        },
        py::arg("a"), py::arg("b"),
        "Exact bottleneck distance; use float('inf') deaths for essential classes.");

    m.def("d_ic", &d_ic, py::arg("g1"), py::arg("g2"),
          "Intrinsic Cech distance between two graphs' closed-form diagrams.");

#ifdef VERSION_INFO
#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
