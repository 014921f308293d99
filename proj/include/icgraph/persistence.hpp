#pragma once

// Z2 persistent homology of a filtered complex by boundary-matrix column
// reduction, and the bottleneck distance between diagrams.

#include <array>
#include <cmath>
#include <vector>

#include "icgraph/cech_complex.hpp"

namespace icgraph {

struct DiagramPoint {
    double birth = 0.0;
    double death = 0.0;  // +inf for essential classes
    bool infinite() const { return std::isinf(death); }
};

bool operator==(const DiagramPoint& a, const DiagramPoint& b);

/// Per-dimension multisets of (birth, death) pairs. Zero-persistence pairs
/// are never stored here; see ReductionResult::raw_pairs for them.
struct PersistenceDiagram {
    std::array<std::vector<DiagramPoint>, 3> by_dim;

    /// Sorted (birth, death) points of the given dimension, dim in {0, 1}.
    /// Throws std::out_of_range otherwise.
    std::vector<DiagramPoint> points(int dim) const;
};

struct ReductionOptions {
    bool clearing = true;
};

/// Every creator/destroyer pair of the reduction, zero-persistence ones
/// included; death is +inf for unpaired creators.
struct RawPair {
    int dim = 0;
    double birth = 0.0;
    double death = 0.0;
};

struct ReductionResult {
    PersistenceDiagram diagram;
    std::vector<RawPair> raw_pairs;
    std::size_t simplex_count = 0;
    std::size_t finite_pair_count = 0;
    std::size_t infinite_count = 0;
};

/// Standard column reduction over Z2 (clearing optional). Rejects
/// non-face-monotone input naming the offending face/coface pair. Verifies
/// the pairing conservation law #simplices = 2*finite + infinite.
ReductionResult reduce_full(const FilteredComplex& fc, ReductionOptions opts = {});
PersistenceDiagram reduce(const FilteredComplex& fc, ReductionOptions opts = {});

/// Exact bottleneck distance under the infinity norm with diagonal
/// projections. Points with infinite death must match in count between the
/// two diagrams, else the distance is +inf; they match among themselves by
/// birth. match entries: index into the other diagram, or -1 for the
/// diagonal, or -2 when unmatchable.
struct BottleneckMatching {
    double value = 0.0;
    std::vector<int> a_match;
    std::vector<int> b_match;
};

BottleneckMatching bottleneck_matching(const std::vector<DiagramPoint>& a,
                                       const std::vector<DiagramPoint>& b);
double bottleneck(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b);

}  // namespace icgraph
