#include "icgraph/loops.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace icgraph {

std::vector<double> LoopSystem::length_sequence() const {
    std::vector<double> lengths;
    lengths.reserve(loops.size());
    for (const Loop& loop : loops) lengths.push_back(loop.length);
    return lengths;
}

Z2Basis::Z2Basis(std::size_t dimension) : words_((dimension + 63) / 64) {}

std::vector<std::uint64_t> Z2Basis::pack(const std::vector<EdgeIndex>& support) const {
    std::vector<std::uint64_t> vec(words_, 0);
    for (EdgeIndex e : support) vec[e >> 6] ^= std::uint64_t(1) << (e & 63);
    return vec;
}

long Z2Basis::reduce(std::vector<std::uint64_t>& vec) const {
    const auto lowest_bit = [&]() -> long {
        for (std::size_t w = 0; w < vec.size(); ++w)
            if (vec[w]) return static_cast<long>(w) * 64 + __builtin_ctzll(vec[w]);
        return -1;
    };
    long pivot = lowest_bit();
    while (pivot >= 0) {
        auto it = std::find(pivots_.begin(), pivots_.end(), pivot);
        if (it == pivots_.end()) return pivot;
        const auto& row = rows_[static_cast<std::size_t>(it - pivots_.begin())];
        for (std::size_t w = 0; w < vec.size(); ++w) vec[w] ^= row[w];
        pivot = lowest_bit();
    }
    return -1;
}

bool Z2Basis::is_independent(const std::vector<EdgeIndex>& support) const {
    auto vec = pack(support);
    return reduce(vec) >= 0;
}

bool Z2Basis::add(const std::vector<EdgeIndex>& support) {
    auto vec = pack(support);
    long pivot = reduce(vec);
    if (pivot < 0) return false;
    rows_.push_back(std::move(vec));
    pivots_.push_back(pivot);
    return true;
}

namespace {

// Builds the candidate for root r and non-tree edge (x, y); returns an
// empty loop when the result is not a simple cycle.
Loop make_candidate(const MetricGraph& g, const DistanceOracle& oracle, VertexIndex root,
                    EdgeIndex cross) {
    const Edge& ce = g.edge(cross);
    std::vector<EdgeIndex> to_x = oracle.shortest_path_edges(root, ce.u);
    std::vector<EdgeIndex> to_y = oracle.shortest_path_edges(root, ce.v);

    Loop loop;
    loop.edges = to_x;
    loop.edges.push_back(cross);
    loop.edges.insert(loop.edges.end(), to_y.rbegin(), to_y.rend());

    // Simple cycles use each edge once.
    std::vector<EdgeIndex> sorted_edges = loop.edges;
    std::sort(sorted_edges.begin(), sorted_edges.end());
    if (std::adjacent_find(sorted_edges.begin(), sorted_edges.end()) != sorted_edges.end())
        return {};

    // Walk root -> x -> y -> root, rejecting repeated interior vertices.
    loop.walk.push_back(root);
    VertexIndex at = root;
    for (EdgeIndex e : loop.edges) {
        const Edge& edge = g.edge(e);
        at = (edge.u == at) ? edge.v : edge.u;
        loop.walk.push_back(at);
    }
    if (loop.walk.back() != root) return {};
    std::set<VertexIndex> seen(loop.walk.begin(), loop.walk.end() - 1);
    if (seen.size() + 1 != loop.walk.size()) return {};

    loop.edges = std::move(sorted_edges);
    for (EdgeIndex e : loop.edges) loop.length += g.edge(e).length;
    return loop;
}

std::vector<int> id_rank_tuple(const MetricGraph& g, const Loop& loop) {
    std::vector<int> ranks;
    ranks.reserve(loop.edges.size());
    for (EdgeIndex e : loop.edges) ranks.push_back(g.edge_id_rank(e));
    std::sort(ranks.begin(), ranks.end());
    return ranks;
}

}  // namespace

std::vector<Loop> candidate_cycles(const MetricGraph& g, const DistanceOracle& oracle) {
    std::vector<Loop> candidates;
    std::set<std::vector<EdgeIndex>> seen;
    std::vector<char> in_tree(g.edge_count(), 0);

    for (std::size_t root = 0; root < g.vertex_count(); ++root) {
        const auto r = static_cast<VertexIndex>(root);
        std::fill(in_tree.begin(), in_tree.end(), 0);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            EdgeIndex e = oracle.predecessor_edge(r, static_cast<VertexIndex>(v));
            if (e >= 0) in_tree[e] = 1;
        }
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (in_tree[e]) continue;
            const Edge& edge = g.edge(static_cast<EdgeIndex>(e));
            if (!std::isfinite(oracle(r, edge.u)) || !std::isfinite(oracle(r, edge.v)))
                continue;
            Loop loop = make_candidate(g, oracle, r, static_cast<EdgeIndex>(e));
            if (loop.edges.empty()) continue;
            if (seen.insert(loop.edges).second) candidates.push_back(std::move(loop));
        }
    }
    return candidates;
}

LoopSystem shortest_system(const MetricGraph& g, const DistanceOracle& oracle) {
    if (!g.is_simple())
        throw GraphError("shortest_system requires a normalized (simple) graph");

    std::vector<Loop> candidates = candidate_cycles(g, oracle);
    std::vector<std::vector<int>> tie_keys;
    tie_keys.reserve(candidates.size());
    for (const Loop& c : candidates) tie_keys.push_back(id_rank_tuple(g, c));

    std::vector<std::size_t> order(candidates.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (candidates[a].length != candidates[b].length)
            return candidates[a].length < candidates[b].length;
        return tie_keys[a] < tie_keys[b];
    });

    const auto genus = static_cast<std::size_t>(g.genus());
    LoopSystem system;
    Z2Basis basis(g.edge_count());
    for (std::size_t i : order) {
        if (system.loops.size() == genus) break;
        if (basis.add(candidates[i].edges)) system.loops.push_back(candidates[i]);
    }
    if (system.loops.size() != genus)
        throw GraphError("internal error: Horton candidates do not span the cycle space");
    return system;
}

LoopSystem shortest_system(const MetricGraph& g) {
    DistanceOracle oracle(g);
    return shortest_system(g, oracle);
}

}  // namespace icgraph
