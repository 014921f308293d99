#pragma once

// JSON formats: the graph interchange format, loop-system output,
// persistence diagrams, and verification reports.
//
// Graph format: {"vertices": ["a", ...], "edges": [["e1", "a", "b", 1.0], ...]}

#include <filesystem>
#include <string>

#include <json.hpp>

#include "icgraph/loops.hpp"
#include "icgraph/metric_graph.hpp"
#include "icgraph/persistence.hpp"
#include "icgraph/theorem.hpp"

namespace icgraph {

MetricGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const MetricGraph& g);

/// Reads and validates a graph file; errors name the offending record.
MetricGraph load_graph(const std::filesystem::path& path);
MetricGraph parse_graph(const std::string& text);
void save_graph(const MetricGraph& g, const std::filesystem::path& path);

/// {"genus": g, "loops": [{"length": L, "edges": [...], "walk": [...]}]}
nlohmann::json loops_to_json(const MetricGraph& g, const LoopSystem& system);

/// {"dim": k, "points": [[birth, death-or-"inf"], ...]}
nlohmann::json diagram_to_json(const PersistenceDiagram& diagram, int dim);
nlohmann::json points_to_json(const std::vector<DiagramPoint>& points, int dim);
std::vector<DiagramPoint> points_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace icgraph
