#include "icgraph/metric_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace icgraph {

namespace {

std::string quoted(std::string_view s) {
    std::string out = "\"";
    out += s;
    out += "\"";
    return out;
}

}  // namespace

MetricGraph::MetricGraph(std::vector<std::string> vertex_ids, std::vector<EdgeSpec> edges) {
    vertex_ids_ = std::move(vertex_ids);
    vertex_lookup_.reserve(vertex_ids_.size());
    for (std::size_t i = 0; i < vertex_ids_.size(); ++i) {
        auto [it, inserted] =
            vertex_lookup_.emplace(vertex_ids_[i], static_cast<VertexIndex>(i));
        if (!inserted)
            throw GraphError("duplicate vertex id " + quoted(vertex_ids_[i]));
    }

    edges_.reserve(edges.size());
    for (const EdgeSpec& spec : edges) {
        if (!(std::isfinite(spec.length) && spec.length > 0.0)) {
            std::ostringstream msg;
            msg << "edge " << quoted(spec.id) << ": nonpositive length " << spec.length;
            throw GraphError(msg.str());
        }
        auto u = vertex_lookup_.find(spec.u);
        auto v = vertex_lookup_.find(spec.v);
        if (u == vertex_lookup_.end())
            throw GraphError("edge " + quoted(spec.id) + ": unknown endpoint " + quoted(spec.u));
        if (v == vertex_lookup_.end())
            throw GraphError("edge " + quoted(spec.id) + ": unknown endpoint " + quoted(spec.v));
        auto [it, inserted] =
            edge_lookup_.emplace(spec.id, static_cast<EdgeIndex>(edges_.size()));
        if (!inserted)
            throw GraphError("duplicate edge id " + quoted(spec.id));
        edges_.push_back(Edge{spec.id, u->second, v->second, spec.length});
        total_length_ += spec.length;
    }

    incidence_.assign(vertex_ids_.size(), {});
    std::set<std::pair<VertexIndex, VertexIndex>> seen_pairs;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& edge = edges_[e];
        const auto ei = static_cast<EdgeIndex>(e);
        incidence_[edge.u].emplace_back(ei, edge.v);
        if (edge.v != edge.u) incidence_[edge.v].emplace_back(ei, edge.u);
        auto key = std::minmax(edge.u, edge.v);
        if (edge.u == edge.v || !seen_pairs.insert({key.first, key.second}).second)
            simple_ = false;
    }

    // Components by BFS.
    component_.assign(vertex_ids_.size(), -1);
    for (std::size_t s = 0; s < vertex_ids_.size(); ++s) {
        if (component_[s] >= 0) continue;
        std::queue<VertexIndex> frontier;
        frontier.push(static_cast<VertexIndex>(s));
        component_[s] = component_count_;
        while (!frontier.empty()) {
            VertexIndex v = frontier.front();
            frontier.pop();
            for (auto [e, w] : incidence_[v]) {
                if (component_[w] < 0) {
                    component_[w] = component_count_;
                    frontier.push(w);
                }
            }
        }
        ++component_count_;
    }

    edge_id_rank_.resize(edges_.size());
    std::vector<EdgeIndex> order(edges_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [this](EdgeIndex a, EdgeIndex b) { return edges_[a].id < edges_[b].id; });
    for (std::size_t rank = 0; rank < order.size(); ++rank)
        edge_id_rank_[order[rank]] = static_cast<int>(rank);
}

VertexIndex MetricGraph::vertex_index(std::string_view id) const {
    auto it = vertex_lookup_.find(std::string(id));
    if (it == vertex_lookup_.end())
        throw GraphError("unknown vertex id " + quoted(id));
    return it->second;
}

EdgeIndex MetricGraph::edge_index(std::string_view id) const {
    auto it = edge_lookup_.find(std::string(id));
    if (it == edge_lookup_.end())
        throw GraphError("unknown edge id " + quoted(id));
    return it->second;
}

bool MetricGraph::has_vertex(std::string_view id) const {
    return vertex_lookup_.count(std::string(id)) > 0;
}

bool MetricGraph::has_edge(std::string_view id) const {
    return edge_lookup_.count(std::string(id)) > 0;
}

int MetricGraph::genus() const {
    return static_cast<int>(edge_count()) - static_cast<int>(vertex_count()) + component_count_;
}

DistanceOracle::DistanceOracle(const MetricGraph& g) : n_(g.vertex_count()), graph_(&g) {
    dist_.assign(n_ * n_, unreachable());
    pred_.assign(n_ * n_, -1);

    using HeapItem = std::pair<double, VertexIndex>;
    for (std::size_t s = 0; s < n_; ++s) {
        double* dist = dist_.data() + s * n_;
        EdgeIndex* pred = pred_.data() + s * n_;
        std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
        dist[s] = 0.0;
        heap.emplace(0.0, static_cast<VertexIndex>(s));
        while (!heap.empty()) {
            auto [d, v] = heap.top();
            heap.pop();
            if (d != dist[v]) continue;  // stale entry
            for (auto [e, w] : g.incident(v)) {
                const double nd = d + g.edge(e).length;
                if (nd < dist[w]) {
                    dist[w] = nd;
                    pred[w] = e;
                    heap.emplace(nd, w);
                } else if (nd == dist[w] && pred[w] >= 0 &&
                           g.edge_id_rank(e) < g.edge_id_rank(pred[w])) {
                    pred[w] = e;  // equal distance: keep the smallest edge id
                }
            }
        }
    }

    // The two directions accumulate the same path in different orders and
    // may disagree in the last bit; the matrix must be exactly symmetric.
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = a + 1; b < n_; ++b) {
            const double d = std::min(dist_[a * n_ + b], dist_[b * n_ + a]);
            dist_[a * n_ + b] = d;
            dist_[b * n_ + a] = d;
        }
}

std::vector<EdgeIndex> DistanceOracle::shortest_path_edges(VertexIndex source,
                                                           VertexIndex target) const {
    if (!std::isfinite(distance(source, target)))
        throw GraphError("no path between " + graph_->vertex_id(source) + " and " +
                         graph_->vertex_id(target));
    std::vector<EdgeIndex> edges;
    VertexIndex v = target;
    while (v != source) {
        EdgeIndex e = predecessor_edge(source, v);
        edges.push_back(e);
        const Edge& edge = graph_->edge(e);
        v = (edge.u == v) ? edge.v : edge.u;
    }
    std::reverse(edges.begin(), edges.end());
    return edges;
}

namespace {

// Deterministic fresh-id helper: starts from `base` and appends '~' until
// the id is unused in `used`.
std::string fresh_id(std::string base, const std::set<std::string>& used) {
    while (used.count(base)) base += "~";
    return base;
}

struct GraphBuilder {
    std::vector<std::string> vertex_ids;
    std::vector<EdgeSpec> edges;
    std::set<std::string> used_vertex_ids;
    std::set<std::string> used_edge_ids;

    void copy_vertices(const MetricGraph& g) {
        vertex_ids = g.vertex_ids();
        used_vertex_ids.insert(vertex_ids.begin(), vertex_ids.end());
        for (const Edge& e : g.edges()) used_edge_ids.insert(e.id);
    }

    std::string add_vertex(const std::string& base) {
        std::string id = fresh_id(base, used_vertex_ids);
        used_vertex_ids.insert(id);
        vertex_ids.push_back(id);
        return id;
    }

    std::string add_edge(const std::string& base, const std::string& u, const std::string& v,
                         double length) {
        std::string id = fresh_id(base, used_edge_ids);
        used_edge_ids.insert(id);
        edges.push_back(EdgeSpec{id, u, v, length});
        return id;
    }

    // For edges carried over unchanged; the id is already registered.
    void keep_edge(const std::string& id, const std::string& u, const std::string& v,
                   double length) {
        edges.push_back(EdgeSpec{id, u, v, length});
    }
};

}  // namespace

Normalization normalize(const MetricGraph& g) {
    if (g.is_simple()) return Normalization{g, {}};

    // Count multiplicity per unordered endpoint pair to find parallel groups.
    std::map<std::pair<VertexIndex, VertexIndex>, int> multiplicity;
    for (const Edge& e : g.edges()) {
        auto key = std::minmax(e.u, e.v);
        ++multiplicity[{key.first, key.second}];
    }

    GraphBuilder b;
    b.copy_vertices(g);
    Normalization result;
    for (const Edge& e : g.edges()) {
        const std::string& uid = g.vertex_id(e.u);
        const std::string& vid = g.vertex_id(e.v);
        if (e.u == e.v) {
            // Self-loop: 3-cycle of equal thirds through two new vertices.
            const double third = e.length / 3.0;
            std::string a = b.add_vertex(e.id + "#v1");
            std::string c = b.add_vertex(e.id + "#v2");
            std::vector<std::string> chain;
            chain.push_back(b.add_edge(e.id + "#1", uid, a, third));
            chain.push_back(b.add_edge(e.id + "#2", a, c, third));
            chain.push_back(b.add_edge(e.id + "#3", c, vid, third));
            result.provenance[e.id] = std::move(chain);
        } else if (multiplicity[{std::min(e.u, e.v), std::max(e.u, e.v)}] > 1) {
            // Member of a parallel group: split at the midpoint.
            const double half = e.length / 2.0;
            std::string m = b.add_vertex(e.id + "#v1");
            std::vector<std::string> chain;
            chain.push_back(b.add_edge(e.id + "#1", uid, m, half));
            chain.push_back(b.add_edge(e.id + "#2", m, vid, half));
            result.provenance[e.id] = std::move(chain);
        } else {
            b.keep_edge(e.id, uid, vid, e.length);
        }
    }
    result.graph = MetricGraph(std::move(b.vertex_ids), std::move(b.edges));
    return result;
}

Discretization delta_discretize(const MetricGraph& g, double delta) {
    if (!(std::isfinite(delta) && delta > 0.0))
        throw GraphError("delta must be positive");

    GraphBuilder b;
    b.copy_vertices(g);
    Discretization result;
    result.delta = delta;
    for (const Edge& e : g.edges()) {
        long k = static_cast<long>(std::ceil(e.length / delta));
        if (k < 1) k = 1;
        while (e.length / static_cast<double>(k) > delta) ++k;  // rounding guard
        const double piece = e.length / static_cast<double>(k);
        const std::string& uid = g.vertex_id(e.u);
        const std::string& vid = g.vertex_id(e.v);
        if (k == 1) {
            b.keep_edge(e.id, uid, vid, e.length);
            result.provenance[e.id] = {e.id};
            continue;
        }
        std::vector<std::string> chain;
        std::string prev = uid;
        for (long i = 1; i <= k; ++i) {
            std::string next =
                (i == k) ? vid : b.add_vertex(e.id + "#v" + std::to_string(i));
            chain.push_back(b.add_edge(e.id + "#" + std::to_string(i), prev, next, piece));
            prev = next;
        }
        result.provenance[e.id] = std::move(chain);
    }
    result.graph = MetricGraph(std::move(b.vertex_ids), std::move(b.edges));
    return result;
}

double point_distance(const MetricGraph& g, const DistanceOracle& oracle, GraphPoint p,
                      GraphPoint q) {
    const auto check = [&](GraphPoint pt) -> const Edge& {
        if (pt.edge < 0 || static_cast<std::size_t>(pt.edge) >= g.edge_count())
            throw GraphError("point references unknown edge");
        const Edge& e = g.edge(pt.edge);
        if (!(pt.offset >= 0.0 && pt.offset <= e.length))
            throw GraphError("point offset outside edge " + e.id);
        return e;
    };
    const Edge& pe = check(p);
    const Edge& qe = check(q);

    double best = std::numeric_limits<double>::infinity();
    if (p.edge == q.edge) best = std::abs(p.offset - q.offset);

    const double p_from_u = p.offset, p_from_v = pe.length - p.offset;
    const double q_from_u = q.offset, q_from_v = qe.length - q.offset;
    best = std::min(best, p_from_u + oracle(pe.u, qe.u) + q_from_u);
    best = std::min(best, p_from_u + oracle(pe.u, qe.v) + q_from_v);
    best = std::min(best, p_from_v + oracle(pe.v, qe.u) + q_from_u);
    best = std::min(best, p_from_v + oracle(pe.v, qe.v) + q_from_v);
    return best;
}

}  // namespace icgraph
