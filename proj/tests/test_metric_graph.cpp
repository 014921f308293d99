#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "icgraph/json_io.hpp"
#include "icgraph/metric_graph.hpp"
#include "test_util.hpp"

using namespace icgraph;
using namespace test_util;
using doctest::Approx;

namespace {

bool throws_with(const std::function<void()>& fn, const std::string& fragment) {
    try {
        fn();
    } catch (const GraphError& err) {
        return std::string(err.what()).find(fragment) != std::string::npos;
    }
    return false;
}

}  // namespace

TEST_CASE("load: minimal valid input preserves ids") {
    MetricGraph g =
        parse_graph(R"({"vertices": ["a", "b"], "edges": [["e1", "a", "b", 1.0]]})");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.vertex_id(0) == "a");
    CHECK(g.edge(0).id == "e1");
    CHECK(g.edge(0).length == 1.0);
    CHECK(g.genus() == 0);
}

TEST_CASE("load: each invalid record is named in the error") {
    CHECK(throws_with(
        [] { parse_graph(R"({"vertices": ["a"], "edges": [["e", "a", "a", 0.0]]})"); },
        "nonpositive length"));
    CHECK(throws_with(
        [] { parse_graph(R"({"vertices": ["a"], "edges": [["e", "a", "a", -2.0]]})"); },
        "nonpositive length"));
    CHECK(throws_with(
        [] { parse_graph(R"({"vertices": ["a"], "edges": [["e", "a", "q", 1.0]]})"); },
        "unknown endpoint \"q\""));
    CHECK(throws_with(
        [] { parse_graph(R"({"vertices": ["a", "a"], "edges": []})"); },
        "duplicate vertex id"));
    CHECK(throws_with(
        [] {
            parse_graph(
                R"({"vertices": ["a", "b"],
                    "edges": [["e", "a", "b", 1.0], ["e", "b", "a", 2.0]]})");
        },
        "duplicate edge id"));
    CHECK(throws_with([] { parse_graph("{nope"); }, "parse error"));
    CHECK(throws_with([] { parse_graph(R"({"vertices": []})"); }, "edges"));
    // NaN is not valid JSON; the validation also catches it at the API level.
    CHECK(throws_with(
        [] {
            MetricGraph({"a"}, {EdgeSpec{"e", "a", "a", std::nan("")}});
        },
        "nonpositive length"));
}

TEST_CASE("load: five vertices, six edges with one self-loop") {
    MetricGraph g = parse_graph(R"({
        "vertices": ["a", "b", "c", "d", "f"],
        "edges": [["e1", "a", "b", 1.0], ["e2", "b", "c", 2.0], ["e3", "c", "d", 1.5],
                  ["e4", "d", "a", 1.0], ["e5", "b", "d", 2.0], ["e6", "f", "f", 3.0]]})");
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 6);
    CHECK_FALSE(g.is_simple());
    CHECK(g.component_count() == 2);
    CHECK(g.genus() == 3);  // 6 - 5 + 2
}

TEST_CASE("normalize: self-loop becomes a 3-cycle of equal thirds") {
    MetricGraph g = make_graph({"v"}, {{"loop", "v", "v"}}, {6.0});
    Normalization n = normalize(g);
    CHECK(n.graph.is_simple());
    CHECK(n.graph.vertex_count() == 3);
    CHECK(n.graph.edge_count() == 3);
    for (const Edge& e : n.graph.edges()) CHECK(e.length == Approx(2.0));
    CHECK(n.graph.genus() == g.genus());
    CHECK(n.graph.total_length() == Approx(6.0));
    REQUIRE(n.provenance.count("loop") == 1);
    CHECK(n.provenance.at("loop").size() == 3);
}

TEST_CASE("normalize: parallel edges split at their midpoints") {
    MetricGraph g = make_graph({"u", "v"}, {{"p", "u", "v"}, {"q", "u", "v"}}, {2.0, 4.0});
    Normalization n = normalize(g);
    CHECK(n.graph.is_simple());
    CHECK(n.graph.vertex_count() == 4);
    CHECK(n.graph.edge_count() == 4);
    CHECK(n.graph.genus() == 1);
    // p: (1, 1); q: (2, 2)
    const auto& pchain = n.provenance.at("p");
    const auto& qchain = n.provenance.at("q");
    REQUIRE(pchain.size() == 2);
    REQUIRE(qchain.size() == 2);
    CHECK(n.graph.edge(n.graph.edge_index(pchain[0])).length == Approx(1.0));
    CHECK(n.graph.edge(n.graph.edge_index(qchain[0])).length == Approx(2.0));
}

TEST_CASE("normalize: simple graphs pass through unchanged") {
    MetricGraph g = make_cycle(12.0, 4);
    Normalization n = normalize(g);
    CHECK(n.provenance.empty());
    CHECK(n.graph.vertex_count() == g.vertex_count());
    CHECK(n.graph.edge_count() == g.edge_count());
    CHECK(n.graph.edge(0).id == g.edge(0).id);
}

TEST_CASE("normalize preserves distances between original vertices") {
    MetricGraph g = parse_graph(R"({
        "vertices": ["a", "b", "c"],
        "edges": [["e1", "a", "b", 1.0], ["e2", "a", "b", 2.0], ["e3", "b", "c", 1.0],
                  ["e4", "c", "c", 4.0]]})");
    Normalization n = normalize(g);
    DistanceOracle before(g), after(n.graph);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        for (std::size_t j = 0; j < g.vertex_count(); ++j) {
            const auto a = n.graph.vertex_index(g.vertex_id(static_cast<VertexIndex>(i)));
            const auto b = n.graph.vertex_index(g.vertex_id(static_cast<VertexIndex>(j)));
            CHECK(after(a, b) ==
                  Approx(before(static_cast<VertexIndex>(i), static_cast<VertexIndex>(j)))
                      .epsilon(1e-12));
        }
    }
    CHECK(n.graph.total_length() == Approx(g.total_length()));
    CHECK(n.graph.genus() == g.genus());
}

TEST_CASE("genus: triangle, K4, trees") {
    CHECK(make_cycle(3.0, 3).genus() == 1);

    MetricGraph k4({"v0", "v1", "v2", "v3"},
                   {EdgeSpec{"e0", "v0", "v1", 1}, EdgeSpec{"e1", "v0", "v2", 1},
                    EdgeSpec{"e2", "v0", "v3", 1}, EdgeSpec{"e3", "v1", "v2", 1},
                    EdgeSpec{"e4", "v1", "v3", 1}, EdgeSpec{"e5", "v2", "v3", 1}});
    CHECK(k4.genus() == 3);

    CHECK(make_path({1.0, 2.0, 0.5}).genus() == 0);
}

TEST_CASE("all_pairs_distances: cycle, theta, disconnected") {
    MetricGraph cycle = make_cycle(12.0, 4);
    DistanceOracle oracle(cycle);
    CHECK(oracle(0, 2) == Approx(6.0));  // antipodal
    CHECK(oracle(0, 1) == Approx(3.0));
    CHECK(oracle(1, 3) == Approx(6.0));

    MetricGraph theta = make_graph({"u", "v"},
                                   {{"e0", "u", "v"}, {"e1", "u", "v"}, {"e2", "u", "v"}},
                                   {1.0, 2.0, 3.0});
    DistanceOracle theta_oracle(theta);
    CHECK(theta_oracle(0, 1) == Approx(1.0));

    MetricGraph disjoint = make_graph({"a", "b", "c", "d"},
                                      {{"e0", "a", "b"}, {"e1", "c", "d"}}, {1.0, 1.0});
    DistanceOracle disjoint_oracle(disjoint);
    CHECK(std::isinf(disjoint_oracle(0, 2)));
    CHECK(disjoint_oracle(0, 1) == Approx(1.0));
    CHECK(disjoint.genus() == 0);
    CHECK(disjoint.component_count() == 2);
}

TEST_CASE("dijkstra agrees with floyd-warshall to 1e-9 relative") {
    std::vector<MetricGraph> graphs;
    graphs.push_back(make_cycle(12.0, 7));
    graphs.push_back(normalize(make_graph(
                                   {"u", "v"},
                                   {{"e0", "u", "v"}, {"e1", "u", "v"}, {"e2", "u", "v"}},
                                   {1.0, 2.0, 3.0}))
                         .graph);
    graphs.push_back(delta_discretize(make_cycle(9.0, 3), 0.4).graph);
    for (const MetricGraph& g : graphs) {
        DistanceOracle oracle(g);
        auto fw = floyd_warshall(g);
        for (std::size_t i = 0; i < g.vertex_count(); ++i)
            for (std::size_t j = 0; j < g.vertex_count(); ++j)
                CHECK(oracle(static_cast<VertexIndex>(i), static_cast<VertexIndex>(j)) ==
                      Approx(fw[i][j]).epsilon(1e-9));
    }
}

TEST_CASE("metric axioms hold exhaustively below 50 vertices") {
    Discretization d = delta_discretize(make_cycle(10.0, 5), 0.25);
    const MetricGraph& g = d.graph;
    REQUIRE(g.vertex_count() <= 50);
    REQUIRE(g.vertex_count() >= 40);
    DistanceOracle oracle(g);
    const auto n = static_cast<VertexIndex>(g.vertex_count());
    for (VertexIndex i = 0; i < n; ++i) {
        CHECK(oracle(i, i) == 0.0);
        for (VertexIndex j = 0; j < n; ++j) {
            CHECK(oracle(i, j) == oracle(j, i));
            if (i != j) CHECK(oracle(i, j) > 0.0);
            for (VertexIndex k = 0; k < n; ++k)
                CHECK(oracle(i, j) <= oracle(i, k) + oracle(k, j) + 1e-12);
        }
    }
}

TEST_CASE("point_distance: along-edge, endpoint, and cycle routing") {
    // p, q on one long edge, no shorter detour
    MetricGraph path = make_path({5.0});
    DistanceOracle path_oracle(path);
    CHECK(point_distance(path, path_oracle, GraphPoint{0, 1.0}, GraphPoint{0, 4.0}) ==
          Approx(3.0));

    // offset 0 degenerates to the vertex distance
    MetricGraph two = make_path({2.0, 3.0});
    DistanceOracle two_oracle(two);
    CHECK(point_distance(two, two_oracle, GraphPoint{0, 0.0}, GraphPoint{1, 1.5}) ==
          Approx(two_oracle(0, 1) + 1.5));

    // positions 0 and 7 on a cycle of length 12: both arcs enumerated
    MetricGraph cycle = make_cycle(12.0, 4);  // vertices at 0, 3, 6, 9
    DistanceOracle cycle_oracle(cycle);
    // arc position 7 = edge v2 -> v3 (arc [6, 9]) at offset 1
    const double expected = std::min(7.0, 12.0 - 7.0);
    CHECK(point_distance(cycle, cycle_oracle, GraphPoint{0, 0.0}, GraphPoint{2, 1.0}) ==
          Approx(expected));

    CHECK_THROWS_AS(
        point_distance(cycle, cycle_oracle, GraphPoint{0, 5.0}, GraphPoint{0, 0.0}),
        GraphError);
}

TEST_CASE("delta_discretize: piece counts and exact length sums") {
    MetricGraph one = make_path({2.5});
    Discretization d1 = delta_discretize(one, 1.0);
    CHECK(d1.graph.edge_count() == 3);
    for (const Edge& e : d1.graph.edges()) CHECK(e.length == Approx(2.5 / 3.0));

    Discretization d2 = delta_discretize(make_path({1.0}), 1.0);
    CHECK(d2.graph.edge_count() == 1);
    CHECK(d2.graph.edge(0).id == "e0");  // unchanged edge keeps its id

    // cycle of length 12 on 4 vertices at delta 0.15: 20 pieces per edge
    Discretization d3 = delta_discretize(make_cycle(12.0, 4), 0.15);
    CHECK(d3.graph.edge_count() == 80);
    CHECK(d3.graph.genus() == 1);
    for (const auto& [orig, chain] : d3.provenance) {
        double sum = 0.0;
        for (const auto& id : chain) sum += d3.graph.edge(d3.graph.edge_index(id)).length;
        const double expect = 3.0;
        CHECK(std::abs(sum - expect) <= 8 * std::numeric_limits<double>::epsilon() * expect);
        for (const auto& id : chain)
            CHECK(d3.graph.edge(d3.graph.edge_index(id)).length <= 0.15);
    }
}

TEST_CASE("delta_discretize keeps original vertices, genus, and distances") {
    MetricGraph g = normalize(make_graph(
                                  {"u", "v"},
                                  {{"e0", "u", "v"}, {"e1", "u", "v"}, {"e2", "u", "v"}},
                                  {1.0, 2.0, 3.0}))
                        .graph;
    DistanceOracle before(g);
    for (double delta : {0.07, 0.25, 0.8, 5.0}) {
        Discretization d = delta_discretize(g, delta);
        CHECK(d.graph.genus() == g.genus());
        DistanceOracle after(d.graph);
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            const auto a = d.graph.vertex_index(g.vertex_id(static_cast<VertexIndex>(i)));
            for (std::size_t j = 0; j < g.vertex_count(); ++j) {
                const auto b =
                    d.graph.vertex_index(g.vertex_id(static_cast<VertexIndex>(j)));
                CHECK(after(a, b) ==
                      Approx(before(static_cast<VertexIndex>(i),
                                    static_cast<VertexIndex>(j)))
                          .epsilon(1e-12));
            }
        }
    }
    CHECK_THROWS_AS(delta_discretize(g, 0.0), GraphError);
    CHECK_THROWS_AS(delta_discretize(g, -1.0), GraphError);
}

TEST_CASE("graph json round trip") {
    MetricGraph g = make_cycle(7.5, 5);
    MetricGraph back = graph_from_json(graph_to_json(g));
    CHECK(back.vertex_ids() == g.vertex_ids());
    REQUIRE(back.edge_count() == g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        CHECK(back.edge(static_cast<EdgeIndex>(e)).id == g.edge(static_cast<EdgeIndex>(e)).id);
        CHECK(back.edge(static_cast<EdgeIndex>(e)).length ==
              g.edge(static_cast<EdgeIndex>(e)).length);
    }
}
