#pragma once

// Intrinsic Cech / Vietoris-Rips filtrations on the vertex set of a
// delta-discretization, up to dimension 2, with filtration values computed
// exactly in the graph metric.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "icgraph/metric_graph.hpp"

namespace icgraph {

enum class FiltrationModel { cech, rips };

std::string to_string(FiltrationModel model);

/// A simplex of dimension 0, 1, or 2 with its entry radius. Vertices are
/// strictly increasing; unused slots hold -1.
struct Simplex {
    double value = 0.0;
    std::int8_t dim = 0;
    std::array<VertexIndex, 3> v{-1, -1, -1};
};

/// Simplices sorted by (value, dim, vertex tuple); faces precede cofaces.
struct FilteredComplex {
    std::vector<Simplex> simplices;
    std::size_t vertex_count = 0;
    FiltrationModel model = FiltrationModel::cech;
    double eps_max = 0.0;
};

/// Entry radius of the edge {x, y}: half the graph distance. Balls of
/// radius eps about x and y first meet at the shortest-path midpoint.
double edge_value(const DistanceOracle& oracle, VertexIndex x, VertexIndex y);

/// Entry radius of the Cech triangle {x, y, z}: the 1-center radius
/// min over points w of the graph of max_i d(w, p_i). Exact: on each edge
/// the objective is a max of three piecewise-linear tents, minimized over
/// the endpoints and all pairwise crossings of the constituent lines.
double cech_triangle_value(const MetricGraph& g, const DistanceOracle& oracle, VertexIndex x,
                           VertexIndex y, VertexIndex z);

/// Rips triangle value: half the diameter, i.e. the largest edge value.
double rips_triangle_value(const DistanceOracle& oracle, VertexIndex x, VertexIndex y,
                           VertexIndex z);

/// Builds the filtration on all vertices of the discretization: every edge
/// with value <= eps_max, every triangle whose edges survive and whose own
/// value is <= eps_max. Triangle values may be computed in parallel
/// (threads = 0 picks the hardware count).
FilteredComplex build_filtration(const Discretization& d, FiltrationModel model,
                                 double eps_max, int threads = 0);

/// Good-cover condition for a faithful nerve: delta strictly below a
/// quarter of the shortest loop length.
struct ScaleCheck {
    bool valid = false;
    double shortest_loop = 0.0;  // +inf for trees
    double bound = 0.0;          // shortest_loop / 4
    std::string detail;
};

ScaleCheck validate_scale(double shortest_loop, double delta);
/// Convenience overload; normalizes and computes the shortest system first.
ScaleCheck validate_scale(const MetricGraph& g, double delta);

/// Debug dump, one line per simplex: "dim value v0 v1 [v2]", filtration order.
void dump_complex(std::ostream& out, const FilteredComplex& fc);

}  // namespace icgraph
