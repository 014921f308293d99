#pragma once

// Shortest system of loops: the homology basis whose non-decreasing
// length-sequence is lexicographically minimal. Candidates come from the
// Horton construction (shortest-path tree + one non-tree edge per root);
// selection is greedy over Z2-independent supports.

#include <vector>

#include "icgraph/metric_graph.hpp"

namespace icgraph {

/// A simple cycle as a Z2 1-chain: its edge support (sorted indices), a
/// closed vertex walk realizing it (walk.front() == walk.back()), and its
/// length (sum of member edge lengths).
struct Loop {
    std::vector<EdgeIndex> edges;
    std::vector<VertexIndex> walk;
    double length = 0.0;
};

struct LoopSystem {
    std::vector<Loop> loops;  // sorted by (length, edge-id tuple)
    std::vector<double> length_sequence() const;
};

/// Row-reduced set of Z2 edge vectors with pivot bookkeeping.
class Z2Basis {
public:
    explicit Z2Basis(std::size_t dimension);

    /// Membership test by Gaussian elimination; does not modify the basis.
    bool is_independent(const std::vector<EdgeIndex>& support) const;

    /// Inserts the vector if independent; returns false when dependent.
    bool add(const std::vector<EdgeIndex>& support);

    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<std::uint64_t> pack(const std::vector<EdgeIndex>& support) const;
    // Reduces `vec` in place against the stored rows; returns pivot bit or -1.
    long reduce(std::vector<std::uint64_t>& vec) const;

    std::size_t words_ = 0;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<long> pivots_;
};

/// Horton candidate cycles: for each root r and each non-tree edge (x, y)
/// reachable from r, the loop sp(r,x) + (x,y) + sp(y,r) when it is a simple
/// cycle. Deduplicated by edge support. Contains a shortest system of loops.
std::vector<Loop> candidate_cycles(const MetricGraph& g, const DistanceOracle& oracle);

/// Greedy minimum over the candidates, sorted by (length, sorted edge-id
/// tuple). Requires a simple (normalized) graph. Throws GraphError if the
/// candidate set cannot span the cycle space (would indicate a bug).
LoopSystem shortest_system(const MetricGraph& g, const DistanceOracle& oracle);
LoopSystem shortest_system(const MetricGraph& g);

}  // namespace icgraph
