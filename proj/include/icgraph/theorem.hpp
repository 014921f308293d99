#pragma once

// Closed-form dim-1 diagram from the shortest system of loops, the
// brute-force pipeline (discretize -> filtration -> reduction), empirical
// cross-validation of the two, and the intrinsic Cech distance d_IC.

#include <string>
#include <vector>

#include "icgraph/loops.hpp"
#include "icgraph/persistence.hpp"

namespace icgraph {

/// Closed form: one point (0, l_i / 4) per loop of the shortest system.
PersistenceDiagram predicted_diagram(const MetricGraph& g);

struct PipelineOptions {
    double delta = 0.0;                            // required, > 0
    FiltrationModel model = FiltrationModel::cech;
    double eps_max = 0.0;                          // <= 0: auto 0.35 * longest loop
    int threads = 0;                               // 0: hardware concurrency
};

/// Brute force: normalize -> delta-discretize -> filtration -> reduction.
PersistenceDiagram computed_diagram(const MetricGraph& g, const PipelineOptions& opts);

/// One row of the verification matching: predicted point index (or -1 for a
/// diagonal-matched computed point), computed point index (or -1), and the
/// infinity-norm displacement paid by that assignment.
struct MatchEntry {
    int predicted = -1;
    int computed = -1;
    double error = 0.0;
};

struct VerificationReport {
    FiltrationModel model = FiltrationModel::cech;
    double delta = 0.0;
    double eps_max = 0.0;
    double tol = 0.0;
    bool scale_valid = false;
    double shortest_loop = 0.0;
    std::vector<DiagramPoint> predicted;  // dim 1, sorted
    std::vector<DiagramPoint> computed;   // dim 1, sorted
    std::vector<MatchEntry> matches;
    double bottleneck_distance = 0.0;
    bool pass = false;
    std::string status;
};

/// Runs the pipeline and compares against the closed form. Passes iff the
/// point counts agree, the bottleneck distance is within tol, and the scale
/// condition delta < l1/4 holds. tol <= 0 picks max(2*delta, 0.02 * l_g/4).
/// The Rips model has a closed form only for genus <= 1 and is rejected
/// otherwise.
VerificationReport verify(const MetricGraph& g, double delta, double tol = 0.0,
                          FiltrationModel model = FiltrationModel::cech, double eps_max = 0.0,
                          int threads = 0);

/// Intrinsic Cech distance: bottleneck distance between the two closed-form
/// dim-1 diagrams.
double d_ic(const MetricGraph& g1, const MetricGraph& g2);

}  // namespace icgraph
