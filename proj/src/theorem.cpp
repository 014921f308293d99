#include "icgraph/theorem.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace icgraph {

PersistenceDiagram predicted_diagram(const MetricGraph& g) {
    PersistenceDiagram diagram;
    const MetricGraph normalized = normalize(g).graph;
    if (normalized.genus() == 0) return diagram;
    LoopSystem system = shortest_system(normalized);
    for (const Loop& loop : system.loops)
        diagram.by_dim[1].push_back(DiagramPoint{0.0, loop.length / 4.0});
    return diagram;
}

namespace {

struct PipelineRun {
    PersistenceDiagram diagram;
    double eps_max = 0.0;
    double shortest_loop = 0.0;  // +inf for trees
    double longest_loop = 0.0;
    std::vector<double> loop_lengths;
};

PipelineRun run_pipeline(const MetricGraph& g, const PipelineOptions& opts) {
    if (!(std::isfinite(opts.delta) && opts.delta > 0.0))
        throw GraphError("delta must be positive");

    PipelineRun run;
    const MetricGraph normalized = normalize(g).graph;
    if (normalized.genus() > 0) {
        LoopSystem system = shortest_system(normalized);
        run.loop_lengths = system.length_sequence();
        run.shortest_loop = run.loop_lengths.front();
        run.longest_loop = run.loop_lengths.back();
    } else {
        run.shortest_loop = std::numeric_limits<double>::infinity();
    }

    // Auto cutoff: strictly above the largest predicted death l_g/4 so every
    // class dies inside the window; trees only need the complex connected.
    run.eps_max = opts.eps_max > 0.0
                      ? opts.eps_max
                      : (run.longest_loop > 0.0 ? 0.35 * run.longest_loop : 2.0 * opts.delta);

    Discretization discrete = delta_discretize(normalized, opts.delta);
    FilteredComplex fc = build_filtration(discrete, opts.model, run.eps_max, opts.threads);
    run.diagram = reduce(fc);
    return run;
}

}  // namespace

PersistenceDiagram computed_diagram(const MetricGraph& g, const PipelineOptions& opts) {
    return run_pipeline(g, opts).diagram;
}

VerificationReport verify(const MetricGraph& g, double delta, double tol,
                          FiltrationModel model, double eps_max, int threads) {
    PipelineOptions opts;
    opts.delta = delta;
    opts.model = model;
    opts.eps_max = eps_max;
    opts.threads = threads;

    PipelineRun run = run_pipeline(g, opts);

    VerificationReport report;
    report.model = model;
    report.delta = delta;
    report.eps_max = run.eps_max;
    report.computed = run.diagram.points(1);

    // Death divided by 4 for the Cech model; the Rips closed form is the
    // single-cycle one, so restrict that model to genus <= 1.
    if (model == FiltrationModel::rips && run.loop_lengths.size() > 1)
        throw GraphError("rips verification is limited to graphs of genus <= 1");
    const double divisor = model == FiltrationModel::cech ? 4.0 : 6.0;
    for (double length : run.loop_lengths)
        report.predicted.push_back(DiagramPoint{0.0, length / divisor});

    report.tol = tol > 0.0 ? tol
                           : std::max(2.0 * delta, run.loop_lengths.empty()
                                                       ? 0.0
                                                       : 0.02 * run.longest_loop / 4.0);

    const ScaleCheck scale = validate_scale(run.shortest_loop, delta);
    report.scale_valid = scale.valid;
    report.shortest_loop = run.shortest_loop;

    BottleneckMatching matching = bottleneck_matching(report.predicted, report.computed);
    report.bottleneck_distance = matching.value;
    for (std::size_t i = 0; i < report.predicted.size(); ++i) {
        MatchEntry entry;
        entry.predicted = static_cast<int>(i);
        entry.computed = matching.a_match[i];
        entry.error = entry.computed >= 0
                          ? std::max(std::abs(report.predicted[i].birth -
                                              report.computed[entry.computed].birth),
                                     std::abs(report.predicted[i].death -
                                              report.computed[entry.computed].death))
                          : (report.predicted[i].death - report.predicted[i].birth) / 2.0;
        report.matches.push_back(entry);
    }
    for (std::size_t j = 0; j < report.computed.size(); ++j) {
        if (matching.b_match[j] >= 0) continue;
        MatchEntry entry;
        entry.computed = static_cast<int>(j);
        entry.error = (report.computed[j].death - report.computed[j].birth) / 2.0;
        report.matches.push_back(entry);
    }

    const bool counts_match = report.predicted.size() == report.computed.size();
    report.pass =
        report.scale_valid && counts_match && report.bottleneck_distance <= report.tol;
    std::ostringstream status;
    if (!report.scale_valid)
        status << "scale condition failed: " << scale.detail;
    else if (!counts_match)
        status << "point count mismatch: predicted " << report.predicted.size()
               << ", computed " << report.computed.size();
    else if (report.bottleneck_distance > report.tol)
        status << "bottleneck " << report.bottleneck_distance << " exceeds tol " << report.tol;
    else
        status << "ok";
    report.status = status.str();
    return report;
}

double d_ic(const MetricGraph& g1, const MetricGraph& g2) {
    return bottleneck(predicted_diagram(g1).points(1), predicted_diagram(g2).points(1));
}

}  // namespace icgraph
