#include "icgraph/cech_complex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "icgraph/loops.hpp"

namespace icgraph {

std::string to_string(FiltrationModel model) {
    return model == FiltrationModel::cech ? "cech" : "rips";
}

double edge_value(const DistanceOracle& oracle, VertexIndex x, VertexIndex y) {
    return oracle(x, y) / 2.0;
}

double rips_triangle_value(const DistanceOracle& oracle, VertexIndex x, VertexIndex y,
                           VertexIndex z) {
    return std::max({oracle(x, y), oracle(y, z), oracle(x, z)}) / 2.0;
}

double cech_triangle_value(const MetricGraph& g, const DistanceOracle& oracle, VertexIndex x,
                           VertexIndex y, VertexIndex z) {
    const VertexIndex pts[3] = {x, y, z};
    const double half_diameter = rips_triangle_value(oracle, x, y, z);

    // Initial bound: best center among the sample vertices themselves
    // (covers the t = 0 and t = L endpoint candidates of every edge).
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t w = 0; w < g.vertex_count(); ++w) {
        double radius = 0.0;
        for (VertexIndex p : pts)
            radius = std::max(radius, oracle(static_cast<VertexIndex>(w), p));
        best = std::min(best, radius);
    }

    // Interior candidates: on edge (u, v, L), the distance from the point at
    // offset t to target p is min(d(u,p) + t, d(v,p) + L - t). The objective
    // is the max of three such tents; its minimum lies at a crossing of an
    // increasing line with a decreasing one.
    for (const Edge& e : g.edges()) {
        const double L = e.length;
        double au[3], av[3];
        bool reachable = true;
        double weak_bound = 0.0;  // max_i min_t of tent_i, a valid lower bound
        for (int i = 0; i < 3; ++i) {
            au[i] = oracle(e.u, pts[i]);
            av[i] = oracle(e.v, pts[i]);
            if (!std::isfinite(au[i]) || !std::isfinite(av[i])) {
                reachable = false;
                break;
            }
            weak_bound = std::max(weak_bound, std::min(au[i], av[i]));
        }
        if (!reachable || weak_bound >= best) continue;

        const auto objective = [&](double t) {
            double radius = 0.0;
            for (int i = 0; i < 3; ++i)
                radius = std::max(radius, std::min(au[i] + t, av[i] + L - t));
            return radius;
        };
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                double t = (av[j] + L - au[i]) / 2.0;
                t = std::clamp(t, 0.0, L);
                best = std::min(best, objective(t));
            }
        }
    }

    // The 1-center radius can never be below half the diameter; snap back
    // onto it when floating-point accumulation lands within 1e-9 so that
    // geodesic triples (trees, aligned triples) match their largest edge
    // value exactly and the resulting zero-persistence pairs cancel.
    if (best <= half_diameter ||
        std::abs(best - half_diameter) <= 1e-9 * std::max(1.0, half_diameter))
        return half_diameter;
    return best;
}

namespace {

struct TriangleRecord {
    double value;
    VertexIndex i, j, k;
};

}  // namespace

// Chunked parallel loop; falls back to the calling thread for small jobs.
static void run_parallel(std::size_t count, int threads,
                         const std::function<void(std::size_t, std::size_t)>& chunk) {
    unsigned n = threads > 0 ? static_cast<unsigned>(threads)
                             : std::max(1u, std::thread::hardware_concurrency());
    if (n <= 1 || count < 64) {
        chunk(0, count);
        return;
    }
    n = std::min<unsigned>(n, 64);
    std::vector<std::thread> pool;
    const std::size_t step = (count + n - 1) / n;
    for (unsigned t = 0; t < n; ++t) {
        const std::size_t lo = t * step;
        const std::size_t hi = std::min(count, lo + step);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] { chunk(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

FilteredComplex build_filtration(const Discretization& d, FiltrationModel model,
                                 double eps_max, int threads) {
    if (!(std::isfinite(eps_max) && eps_max > 0.0))
        throw GraphError("eps_max must be positive");

    const MetricGraph& g = d.graph;
    const DistanceOracle oracle(g);
    const auto n = static_cast<VertexIndex>(g.vertex_count());

    FilteredComplex fc;
    fc.vertex_count = g.vertex_count();
    fc.model = model;
    fc.eps_max = eps_max;

    for (VertexIndex v = 0; v < n; ++v)
        fc.simplices.push_back(Simplex{0.0, 0, {v, -1, -1}});

    // Pairs beyond 2 * eps_max can never appear; remember survivors.
    std::vector<char> pair_ok(static_cast<std::size_t>(n) * n, 0);
    for (VertexIndex i = 0; i < n; ++i) {
        for (VertexIndex j = i + 1; j < n; ++j) {
            const double dij = oracle(i, j);
            if (!std::isfinite(dij)) continue;
            const double value = dij / 2.0;
            if (value > eps_max) continue;
            pair_ok[static_cast<std::size_t>(i) * n + j] = 1;
            fc.simplices.push_back(Simplex{value, 1, {i, j, -1}});
        }
    }

    // Triangles, parallel over the smallest vertex.
    std::vector<std::vector<TriangleRecord>> found(n);
    run_parallel(static_cast<std::size_t>(n), threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t ii = lo; ii < hi; ++ii) {
            const auto i = static_cast<VertexIndex>(ii);
            for (VertexIndex j = i + 1; j < n; ++j) {
                if (!pair_ok[ii * n + j]) continue;
                for (VertexIndex k = j + 1; k < n; ++k) {
                    if (!pair_ok[ii * n + k] || !pair_ok[static_cast<std::size_t>(j) * n + k])
                        continue;
                    const double rips = rips_triangle_value(oracle, i, j, k);
                    if (rips > eps_max) continue;
                    const double value = model == FiltrationModel::rips
                                             ? rips
                                             : cech_triangle_value(g, oracle, i, j, k);
                    if (value <= eps_max)
                        found[ii].push_back(TriangleRecord{value, i, j, k});
                }
            }
        }
    });
    for (const auto& records : found)
        for (const TriangleRecord& r : records)
            fc.simplices.push_back(Simplex{r.value, 2, {r.i, r.j, r.k}});

    std::sort(fc.simplices.begin(), fc.simplices.end(), [](const Simplex& a, const Simplex& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.v < b.v;
    });
    return fc;
}

ScaleCheck validate_scale(double shortest_loop, double delta) {
    ScaleCheck check;
    check.shortest_loop = shortest_loop;
    if (std::isinf(shortest_loop)) {
        check.valid = true;
        check.bound = std::numeric_limits<double>::infinity();
        check.detail = "no loops: any delta is valid";
        return check;
    }
    check.bound = shortest_loop / 4.0;
    check.valid = delta < check.bound;
    std::ostringstream msg;
    msg << "delta " << delta << (check.valid ? " < " : " >= ") << "l1/4 = " << check.bound
        << " (shortest loop " << shortest_loop << ")";
    check.detail = msg.str();
    return check;
}

ScaleCheck validate_scale(const MetricGraph& g, double delta) {
    const MetricGraph normalized = normalize(g).graph;
    if (normalized.genus() == 0)
        return validate_scale(std::numeric_limits<double>::infinity(), delta);
    LoopSystem system = shortest_system(normalized);
    return validate_scale(system.loops.front().length, delta);
}

void dump_complex(std::ostream& out, const FilteredComplex& fc) {
    for (const Simplex& s : fc.simplices) {
        out << static_cast<int>(s.dim) << ' ' << s.value;
        for (int i = 0; i <= s.dim; ++i) out << ' ' << s.v[i];
        out << '\n';
    }
}

}  // namespace icgraph
