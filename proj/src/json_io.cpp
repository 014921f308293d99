#include "icgraph/json_io.hpp"

#include <fstream>

namespace icgraph {

using nlohmann::json;

MetricGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw GraphError("graph json must be an object with \"vertices\" and \"edges\"");

    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string())
            throw GraphError("vertex id must be a string, got " + v.dump());
        vertices.push_back(v.get<std::string>());
    }

    std::vector<EdgeSpec> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 4 || !e[0].is_string() || !e[1].is_string() ||
            !e[2].is_string() || !e[3].is_number())
            throw GraphError("edge record must be [id, u, v, length], got " + e.dump());
        edges.push_back(EdgeSpec{e[0].get<std::string>(), e[1].get<std::string>(),
                                 e[2].get<std::string>(), e[3].get<double>()});
    }
    return MetricGraph(std::move(vertices), std::move(edges));
}

json graph_to_json(const MetricGraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.id, g.vertex_id(e.u), g.vertex_id(e.v), e.length});
    return json{{"vertices", g.vertex_ids()}, {"edges", edges}};
}

MetricGraph parse_graph(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw GraphError(std::string("graph parse error: ") + err.what());
    }
    return graph_from_json(j);
}

MetricGraph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return parse_graph(text);
    } catch (const GraphError& err) {
        throw GraphError(path.string() + ": " + err.what());
    }
}

void save_graph(const MetricGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw GraphError("cannot write " + path.string());
    out << graph_to_json(g).dump(2) << '\n';
}

json loops_to_json(const MetricGraph& g, const LoopSystem& system) {
    json loops = json::array();
    for (const Loop& loop : system.loops) {
        json edge_ids = json::array();
        for (EdgeIndex e : loop.edges) edge_ids.push_back(g.edge(e).id);
        json walk = json::array();
        for (VertexIndex v : loop.walk) walk.push_back(g.vertex_id(v));
        loops.push_back(
            json{{"length", loop.length}, {"edges", edge_ids}, {"walk", walk}});
    }
    return json{{"genus", system.loops.size()}, {"loops", loops}};
}

json points_to_json(const std::vector<DiagramPoint>& points, int dim) {
    json pts = json::array();
    for (const DiagramPoint& p : points) {
        if (p.infinite())
            pts.push_back({p.birth, "inf"});
        else
            pts.push_back({p.birth, p.death});
    }
    return json{{"dim", dim}, {"points", pts}};
}

json diagram_to_json(const PersistenceDiagram& diagram, int dim) {
    return points_to_json(diagram.points(dim), dim);
}

std::vector<DiagramPoint> points_from_json(const json& j) {
    std::vector<DiagramPoint> points;
    for (const auto& p : j.at("points")) {
        DiagramPoint point;
        point.birth = p.at(0).get<double>();
        point.death = p.at(1).is_string() ? std::numeric_limits<double>::infinity()
                                          : p.at(1).get<double>();
        points.push_back(point);
    }
    return points;
}

json report_to_json(const VerificationReport& report) {
    json matches = json::array();
    for (const MatchEntry& m : report.matches) {
        json entry;
        entry["predicted"] =
            m.predicted >= 0
                ? json::array({report.predicted[m.predicted].birth,
                               report.predicted[m.predicted].death})
                : json();
        entry["computed"] = m.computed >= 0
                                ? json::array({report.computed[m.computed].birth,
                                               report.computed[m.computed].death})
                                : json();
        entry["error"] = m.error;
        matches.push_back(entry);
    }
    return json{{"model", to_string(report.model)},
                {"delta", report.delta},
                {"eps_max", report.eps_max},
                {"tol", report.tol},
                {"scale_valid", report.scale_valid},
                {"shortest_loop", std::isinf(report.shortest_loop)
                                      ? json("inf")
                                      : json(report.shortest_loop)},
                {"predicted", points_to_json(report.predicted, 1)},
                {"computed", points_to_json(report.computed, 1)},
                {"matches", matches},
                {"bottleneck", report.bottleneck_distance},
                {"pass", report.pass},
                {"status", report.status}};
}

}  // namespace icgraph
