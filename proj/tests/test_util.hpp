#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// (Floyd-Warshall, grid-search 1-center, exhaustive cycle and basis
// enumeration) deliberately avoid the library's own algorithms.

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "icgraph/metric_graph.hpp"

namespace test_util {

using namespace icgraph;

inline MetricGraph make_graph(std::vector<std::string> vertices,
                              std::vector<std::array<std::string, 3>> edge_ids,
                              std::vector<double> lengths) {
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i < edge_ids.size(); ++i)
        edges.push_back(
            EdgeSpec{edge_ids[i][0], edge_ids[i][1], edge_ids[i][2], lengths[i]});
    return MetricGraph(std::move(vertices), std::move(edges));
}

/// Cycle of total length `total` on k evenly spaced vertices v0..v{k-1}.
inline MetricGraph make_cycle(double total, int k) {
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;
    const double piece = total / k;
    for (int i = 0; i < k; ++i) vertices.push_back("v" + std::to_string(i));
    for (int i = 0; i < k; ++i)
        edges.push_back(EdgeSpec{"e" + std::to_string(i), vertices[i],
                                 vertices[(i + 1) % k], piece});
    return MetricGraph(std::move(vertices), std::move(edges));
}

/// Path graph with the given consecutive edge lengths.
inline MetricGraph make_path(const std::vector<double>& lengths) {
    std::vector<std::string> vertices{"v0"};
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        vertices.push_back("v" + std::to_string(i + 1));
        edges.push_back(EdgeSpec{"e" + std::to_string(i), vertices[i], vertices[i + 1],
                                 lengths[i]});
    }
    return MetricGraph(std::move(vertices), std::move(edges));
}

/// All-pairs shortest paths by Floyd-Warshall, independent of the oracle.
inline std::vector<std::vector<double>> floyd_warshall(const MetricGraph& g) {
    const std::size_t n = g.vertex_count();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
    for (const Edge& e : g.edges()) {
        d[e.u][e.v] = std::min(d[e.u][e.v], e.length);
        d[e.v][e.u] = std::min(d[e.v][e.u], e.length);
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

/// Brute-force 1-center: sample every edge at the given step and take the
/// best max-distance over the three targets.
inline double grid_one_center(const MetricGraph& g, const DistanceOracle& oracle,
                              VertexIndex x, VertexIndex y, VertexIndex z, double step) {
    const VertexIndex pts[3] = {x, y, z};
    double best = std::numeric_limits<double>::infinity();
    for (const Edge& e : g.edges()) {
        for (double t = 0.0;; t += step) {
            const double tt = std::min(t, e.length);
            double radius = 0.0;
            for (VertexIndex p : pts) {
                const double via_u = oracle(e.u, p) + tt;
                const double via_v = oracle(e.v, p) + (e.length - tt);
                radius = std::max(radius, std::min(via_u, via_v));
            }
            best = std::min(best, radius);
            if (tt >= e.length) break;
        }
    }
    return best;
}

/// Every simple cycle as a sorted edge-index set: nonempty edge subsets
/// whose support is connected with all degrees exactly two. Feasible for
/// m <= 20 edges.
inline std::vector<std::vector<EdgeIndex>> all_simple_cycles(const MetricGraph& g) {
    const std::size_t m = g.edge_count();
    if (m > 20) throw std::logic_error("all_simple_cycles: too many edges");
    std::vector<std::vector<EdgeIndex>> cycles;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<EdgeIndex> support;
        std::vector<int> degree(g.vertex_count(), 0);
        for (std::size_t e = 0; e < m; ++e) {
            if (!(mask & (1u << e))) continue;
            support.push_back(static_cast<EdgeIndex>(e));
            ++degree[g.edge(static_cast<EdgeIndex>(e)).u];
            ++degree[g.edge(static_cast<EdgeIndex>(e)).v];
        }
        bool ok = true;
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if (degree[v] != 0 && degree[v] != 2) ok = false;
        if (!ok) continue;

        // connectivity of the support
        std::set<VertexIndex> on;
        for (EdgeIndex e : support) {
            on.insert(g.edge(e).u);
            on.insert(g.edge(e).v);
        }
        std::set<VertexIndex> reached{*on.begin()};
        bool grew = true;
        while (grew) {
            grew = false;
            for (EdgeIndex e : support) {
                const bool has_u = reached.count(g.edge(e).u);
                const bool has_v = reached.count(g.edge(e).v);
                if (has_u != has_v) {
                    reached.insert(has_u ? g.edge(e).v : g.edge(e).u);
                    grew = true;
                }
            }
        }
        if (reached.size() == on.size()) cycles.push_back(std::move(support));
    }
    return cycles;
}

inline double cycle_length(const MetricGraph& g, const std::vector<EdgeIndex>& support) {
    double total = 0.0;
    for (EdgeIndex e : support) total += g.edge(e).length;
    return total;
}

// Multi-word GF(2) rank for wider row spaces.
inline int gf2_rank_wide(std::vector<std::vector<std::uint64_t>> rows, std::size_t bits) {
    int rank = 0;
    for (std::size_t bit = 0; bit < bits; ++bit) {
        const std::size_t word = bit / 64;
        const std::uint64_t mask = std::uint64_t(1) << (bit % 64);
        std::size_t pivot = rows.size();
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
            if (rows[r][word] & mask) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && (rows[r][word] & mask))
                for (std::size_t w = 0; w < rows[r].size(); ++w)
                    rows[r][w] ^= rows[static_cast<std::size_t>(rank)][w];
        ++rank;
    }
    return rank;
}

// Small hand-rolled GF(2) rank, kept separate from the library's Z2Basis.
inline int gf2_rank(std::vector<std::uint64_t> rows) {
    int rank = 0;
    for (int bit = 0; bit < 64; ++bit) {
        const std::uint64_t mask = std::uint64_t(1) << bit;
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r] & mask) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && (rows[r] & mask))
                rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

/// The lexicographically smallest non-decreasing length-sequence over all
/// independent g-subsets of all simple cycles. Exhaustive; requires fewer
/// than 64 edges and a modest cycle count.
inline std::vector<double> exhaustive_min_basis(const MetricGraph& g) {
    const auto genus = static_cast<std::size_t>(g.genus());
    if (genus == 0) return {};
    const auto cycles = all_simple_cycles(g);

    std::vector<std::uint64_t> masks;
    std::vector<double> lengths;
    for (const auto& support : cycles) {
        std::uint64_t mask = 0;
        for (EdgeIndex e : support) mask |= std::uint64_t(1) << e;
        masks.push_back(mask);
        lengths.push_back(cycle_length(g, support));
    }

    if (cycles.size() < genus) return {};
    std::vector<double> best;
    std::vector<std::size_t> pick(genus);
    for (std::size_t i = 0; i < genus; ++i) pick[i] = i;
    while (true) {
        std::vector<std::uint64_t> rows;
        for (std::size_t i : pick) rows.push_back(masks[i]);
        if (gf2_rank(rows) == static_cast<int>(genus)) {
            std::vector<double> seq;
            for (std::size_t i : pick) seq.push_back(lengths[i]);
            std::sort(seq.begin(), seq.end());
            if (best.empty() || seq < best) best = seq;
        }
        // next genus-combination of cycle indices
        std::size_t i = genus;
        while (i > 0 && pick[i - 1] == cycles.size() - genus + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < genus; ++j) pick[j] = pick[j - 1] + 1;
    }
    return best;
}

/// Same graph with every edge length scaled by lambda.
inline MetricGraph scale_graph(const MetricGraph& g, double lambda) {
    std::vector<EdgeSpec> edges;
    for (const Edge& e : g.edges())
        edges.push_back(EdgeSpec{e.id, g.vertex_id(e.u), g.vertex_id(e.v),
                                 e.length * lambda});
    return MetricGraph(g.vertex_ids(), std::move(edges));
}

}  // namespace test_util
