#include "icgraph/generators.hpp"

#include <cmath>
#include <random>
#include <set>
#include <string>

namespace icgraph {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw GraphError("generator: " + message);
}

void require_positive_lengths(const std::vector<double>& lengths) {
    for (double value : lengths)
        require(std::isfinite(value) && value > 0.0, "lengths must be positive");
}

std::string vid(int i) { return "v" + std::to_string(i); }

// Uniform double in [lo, hi) from the top 53 bits; the standard library
// distributions are not bit-stable across implementations.
double uniform_double(std::mt19937_64& rng, double lo, double hi) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

// 3-vertex cycle anchor -> a -> b -> anchor in equal thirds.
void make_cycle_through(std::vector<std::string>& vertices, std::vector<EdgeSpec>& edges,
                        const std::string& prefix, const std::string& anchor, double total,
                        int id_base) {
    const double third = total / 3.0;
    const std::string a = prefix + "a", b = prefix + "b";
    vertices.push_back(a);
    vertices.push_back(b);
    edges.push_back(EdgeSpec{"e" + std::to_string(id_base), anchor, a, third});
    edges.push_back(EdgeSpec{"e" + std::to_string(id_base + 1), a, b, third});
    edges.push_back(EdgeSpec{"e" + std::to_string(id_base + 2), b, anchor, third});
}

}  // namespace

MetricGraph generate(const GeneratorSpec& spec) {
    using Family = GeneratorSpec::Family;
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;

    switch (spec.family) {
        case Family::cycle: {
            require(spec.lengths.size() == 1, "cycle takes one length");
            require_positive_lengths(spec.lengths);
            vertices.push_back("v0");
            make_cycle_through(vertices, edges, "v0", "v0", spec.lengths[0], 0);
            break;
        }
        case Family::wedge: {
            require(!spec.lengths.empty(), "wedge takes at least one petal length");
            require_positive_lengths(spec.lengths);
            vertices.push_back("c");
            for (std::size_t i = 0; i < spec.lengths.size(); ++i)
                make_cycle_through(vertices, edges, "p" + std::to_string(i), "c",
                                   spec.lengths[i], static_cast<int>(3 * i));
            break;
        }
        case Family::theta: {
            require(spec.lengths.size() == 3, "theta takes three path lengths");
            require_positive_lengths(spec.lengths);
            vertices = {"u", "v"};
            for (int i = 0; i < 3; ++i)
                edges.push_back(
                    EdgeSpec{"e" + std::to_string(i), "u", "v", spec.lengths[i]});
            break;
        }
        case Family::complete: {
            require(spec.vertices >= 1, "complete needs at least one vertex");
            require(std::isfinite(spec.edge_length) && spec.edge_length > 0.0,
                    "edge length must be positive");
            for (int i = 0; i < spec.vertices; ++i) vertices.push_back(vid(i));
            int id = 0;
            for (int i = 0; i < spec.vertices; ++i)
                for (int j = i + 1; j < spec.vertices; ++j)
                    edges.push_back(EdgeSpec{"e" + std::to_string(id++), vid(i), vid(j),
                                             spec.edge_length});
            break;
        }
        case Family::random_graph: {
            const int n = spec.vertices, m = spec.edges;
            require(n >= 2, "random needs at least two vertices");
            require(m >= n - 1, "random needs at least n-1 edges to stay connected");
            require(static_cast<long>(m) <= static_cast<long>(n) * (n - 1) / 2,
                    "random has at most n(n-1)/2 simple edges");
            std::mt19937_64 rng(spec.seed);
            for (int i = 0; i < n; ++i) vertices.push_back(vid(i));

            std::set<std::pair<int, int>> present;
            int id = 0;
            const auto add = [&](int a, int b) {
                present.insert(std::minmax(a, b));
                edges.push_back(EdgeSpec{"e" + std::to_string(id++), vid(a), vid(b),
                                         uniform_double(rng, 0.5, 2.0)});
            };
            // Random attachment tree, then uniform extra edges.
            for (int i = 1; i < n; ++i)
                add(static_cast<int>(rng() % static_cast<std::uint64_t>(i)), i);
            while (static_cast<int>(edges.size()) < m) {
                const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
                const int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
                if (a == b || present.count(std::minmax(a, b))) continue;
                add(a, b);
            }
            break;
        }
    }
    return MetricGraph(std::move(vertices), std::move(edges));
}

}  // namespace icgraph
