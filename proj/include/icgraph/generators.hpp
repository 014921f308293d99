#pragma once

// Deterministic synthetic metric-graph families for tests and benchmarks.

#include <cstdint>
#include <vector>

#include "icgraph/metric_graph.hpp"

namespace icgraph {

struct GeneratorSpec {
    enum class Family { cycle, wedge, theta, complete, random_graph };

    Family family = Family::cycle;
    std::vector<double> lengths;  // cycle: {L}; wedge: petal lengths; theta: {a, b, c}
    int vertices = 0;             // complete, random
    int edges = 0;                // random
    double edge_length = 1.0;     // complete
    std::uint64_t seed = 0;       // random; lengths drawn uniformly from [0.5, 2.0]
};

/// Pure function of its arguments: byte-identical output across runs. The
/// random family uses mt19937_64 and builds a random attachment tree plus
/// uniform extra edges, so the graph is always connected. Invalid parameters
/// raise GraphError.
MetricGraph generate(const GeneratorSpec& spec);

}  // namespace icgraph
