#pragma once

// Finite metric graphs: storage and validation, the shortest-path metric on
// vertices and interior edge points, and delta-discretization (subdivision
// with every sub-edge of length at most delta).

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace icgraph {

using VertexIndex = std::int32_t;
using EdgeIndex = std::int32_t;

/// Raised for invalid graph input or misuse of a graph operation.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An edge with endpoints resolved to vertex indices.
struct Edge {
    std::string id;
    VertexIndex u = -1;
    VertexIndex v = -1;
    double length = 0.0;
};

/// An edge as it appears in input files, endpoints by id.
struct EdgeSpec {
    std::string id;
    std::string u;
    std::string v;
    double length = 0.0;
};

/// A point in the underlying space of the graph: an edge plus an arclength
/// offset from the edge's first endpoint, in [0, length].
struct GraphPoint {
    EdgeIndex edge = -1;
    double offset = 0.0;
};

/// Weighted multigraph with strictly positive, finite edge lengths.
/// Self-loops and parallel edges are accepted; normalize() removes them.
/// Immutable after construction.
class MetricGraph {
public:
    MetricGraph() = default;

    /// Validates ids, endpoints, and lengths; throws GraphError naming the
    /// offending record otherwise.
    MetricGraph(std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges);

    std::size_t vertex_count() const { return vertex_ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::string& vertex_id(VertexIndex v) const { return vertex_ids_.at(v); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

    /// Index lookup; throws GraphError for unknown ids.
    VertexIndex vertex_index(std::string_view id) const;
    EdgeIndex edge_index(std::string_view id) const;
    bool has_vertex(std::string_view id) const;
    bool has_edge(std::string_view id) const;

    /// Incident (edge index, opposite endpoint) pairs. A self-loop appears
    /// once with the vertex itself as the opposite endpoint.
    const std::vector<std::pair<EdgeIndex, VertexIndex>>& incident(VertexIndex v) const {
        return incidence_.at(v);
    }

    double total_length() const { return total_length_; }
    int component_count() const { return component_count_; }
    int component(VertexIndex v) const { return component_.at(v); }

    /// First Betti number |E| - |V| + #components, summed over components.
    int genus() const;

    /// True when the graph has no self-loops and no parallel edges.
    bool is_simple() const { return simple_; }

    /// Rank of edge e's id in lexicographic order over all edge ids.
    /// Used wherever ties are broken "by smallest edge id".
    int edge_id_rank(EdgeIndex e) const { return edge_id_rank_.at(e); }

private:
    std::vector<std::string> vertex_ids_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, VertexIndex> vertex_lookup_;
    std::unordered_map<std::string, EdgeIndex> edge_lookup_;
    std::vector<std::vector<std::pair<EdgeIndex, VertexIndex>>> incidence_;
    std::vector<int> component_;
    std::vector<int> edge_id_rank_;
    double total_length_ = 0.0;
    int component_count_ = 0;
    bool simple_ = true;
};

/// Exact all-pairs shortest-path distances with per-source predecessor data.
/// Dijkstra with a binary heap per source; equal-distance ties pick the
/// predecessor edge with the smallest id.
class DistanceOracle {
public:
    explicit DistanceOracle(const MetricGraph& g);

    std::size_t size() const { return n_; }

    /// +infinity for vertices in different components.
    double distance(VertexIndex a, VertexIndex b) const { return dist_[index(a, b)]; }
    double operator()(VertexIndex a, VertexIndex b) const { return distance(a, b); }

    /// Edge by which v is reached in the shortest-path tree rooted at
    /// source; -1 at the source itself and for unreachable vertices.
    EdgeIndex predecessor_edge(VertexIndex source, VertexIndex v) const {
        return pred_[index(source, v)];
    }

    /// Edges of one shortest path from source to target, in walk order.
    /// Throws GraphError if target is unreachable.
    std::vector<EdgeIndex> shortest_path_edges(VertexIndex source, VertexIndex target) const;

    static double unreachable() { return std::numeric_limits<double>::infinity(); }

private:
    std::size_t index(VertexIndex a, VertexIndex b) const {
        return static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b);
    }
    std::size_t n_ = 0;
    std::vector<double> dist_;
    std::vector<EdgeIndex> pred_;
    const MetricGraph* graph_ = nullptr;
};

/// Result of making a graph simple: self-loops become 3-cycles of equal
/// thirds, each member of a parallel group is split at its midpoint.
/// Total length, genus, and all distances between original vertices are
/// unchanged. provenance maps each split edge id to its replacement chain.
struct Normalization {
    MetricGraph graph;
    std::map<std::string, std::vector<std::string>> provenance;
};

Normalization normalize(const MetricGraph& g);

/// A subdivision of the graph with every sub-edge of length at most delta.
/// Each original edge of length L becomes k = ceil(L/delta) equal pieces;
/// the pieces sum back to L up to floating-point accumulation. Original
/// vertices keep their indices 0..V-1 in the refined graph.
struct Discretization {
    MetricGraph graph;
    double delta = 0.0;
    std::map<std::string, std::vector<std::string>> provenance;
};

Discretization delta_discretize(const MetricGraph& g, double delta);

/// Distance between two arbitrary points of the underlying space, routed
/// through edge endpoints and, when both points share an edge, directly
/// along it.
double point_distance(const MetricGraph& g, const DistanceOracle& oracle, GraphPoint p,
                      GraphPoint q);

}  // namespace icgraph
