#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "graph.hpp"
#include "oracles.hpp"

using namespace netvuln;

TEST_SUITE_BEGIN("graph");

TEST_CASE("from_edges builds a simple graph") {
    const std::vector<Edge> edges{{0, 1}, {1, 2}};
    const Graph g = Graph::from_edges(edges);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);
}

TEST_CASE("from_edges drops duplicates and self-loops with a count") {
    const std::vector<Edge> edges{{0, 1}, {1, 0}, {2, 2}};
    BuildCounts counts;
    const Graph g = Graph::from_edges(edges, 3, &counts);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(counts.dropped_self_loops == 1);
    CHECK(counts.dropped_duplicate_edges == 1);
}

TEST_CASE("from_edges keeps declared isolated nodes") {
    const std::vector<Edge> edges{{0, 1}};
    const Graph g = Graph::from_edges(edges, 5);
    CHECK(g.node_count() == 5);
    CHECK(g.degree(4) == 0);
}

TEST_CASE("remove_nodes isolates a star when the hub goes") {
    const Graph g = oracle::star_graph(4);
    const std::vector<NodeId> victims{0};
    const Graph rest = g.remove_nodes(victims);
    CHECK(rest.node_count() == 4);
    CHECK(rest.edge_count() == 0);
}

TEST_CASE("remove_nodes splits a path") {
    const Graph g = oracle::path_graph(5);
    const std::vector<NodeId> victims{2};
    const Graph rest = g.remove_nodes(victims);
    const auto parts = connected_components(rest);
    REQUIRE(parts.components.size() == 2);
    CHECK(parts.components[0] == std::vector<NodeId>{0, 1});
    CHECK(parts.components[1] == std::vector<NodeId>{3, 4});
}

TEST_CASE("remove_nodes with no victims is the identity") {
    const Graph g = oracle::cycle_graph(6);
    const Graph same = g.remove_nodes({});
    CHECK(same.node_count() == g.node_count());
    CHECK(same.edges() == g.edges());
}

TEST_CASE("remove_nodes rejects unknown victims") {
    const Graph g = oracle::path_graph(3);
    const std::vector<NodeId> victims{7};
    CHECK_THROWS_AS((void)g.remove_nodes(victims), std::invalid_argument);
    const Graph rest = g.remove_nodes(std::vector<NodeId>{1});
    CHECK_THROWS_AS((void)rest.remove_nodes(std::vector<NodeId>{1}), std::invalid_argument);
}

TEST_CASE("connected_components on simple shapes") {
    CHECK(connected_components(oracle::cycle_graph(6)).components.size() == 1);
    CHECK(connected_components(Graph{}).components.empty());

    const Graph split = oracle::path_graph(5).remove_nodes(std::vector<NodeId>{2});
    const auto parts = connected_components(split);
    REQUIRE(parts.components.size() == 2);
    CHECK(parts.components[0].size() == 2);
    CHECK(parts.components[1].size() == 2);
}

TEST_CASE("largest_connected_component breaks ties toward the smallest id") {
    const Graph split = oracle::path_graph(5).remove_nodes(std::vector<NodeId>{2});
    const auto [nodes, size] = largest_connected_component(split);
    CHECK(size == 2);
    CHECK(nodes == std::vector<NodeId>{0, 1});

    const auto [empty_nodes, empty_size] = largest_connected_component(Graph{});
    CHECK(empty_size == 0);
    CHECK(empty_nodes.empty());
}

TEST_CASE("bfs_distances on paths, stars and cycles") {
    const Graph p5 = oracle::path_graph(5);
    const auto d = bfs_distances(p5, 0);
    CHECK(d == std::vector<std::int64_t>{0, 1, 2, 3, 4});

    const Graph star = oracle::star_graph(4);
    const auto hub = bfs_distances(star, 0);
    for (NodeId leaf = 1; leaf <= 4; ++leaf) CHECK(hub[leaf] == 1);

    // 5-cycle from any source: one zero, two ones, two twos.
    const Graph c5 = oracle::cycle_graph(5);
    auto ring = bfs_distances(c5, 0);
    std::sort(ring.begin(), ring.end());
    CHECK(ring == std::vector<std::int64_t>{0, 1, 1, 2, 2});
}

TEST_CASE("bfs_distances marks other components unreachable") {
    const Graph split = oracle::path_graph(5).remove_nodes(std::vector<NodeId>{2});
    const auto d = bfs_distances(split, 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == -1);
    CHECK(d[3] == -1);
    CHECK_THROWS_AS((void)bfs_distances(split, 2), std::invalid_argument);
}

TEST_CASE("random graphs: removal counts, LCC monotonicity, partition sums") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 80; ++trial) {
        const Graph g = oracle::random_graph(2 + trial % 12, 0.4, rng);
        const auto nodes = g.nodes();

        std::vector<NodeId> victims;
        for (NodeId v : nodes) {
            if (rng() % 3 == 0) victims.push_back(v);
        }
        const Graph rest = g.remove_nodes(victims);
        CHECK(rest.node_count() == g.node_count() - victims.size());
        CHECK(largest_component_size(rest) <= largest_component_size(g));

        std::size_t total = 0;
        for (const auto& comp : connected_components(rest).components) {
            total += comp.size();
        }
        CHECK(total == rest.node_count());
    }
}

TEST_CASE("bfs distances are symmetric and satisfy the triangle inequality") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::random_connected_graph(8, rng);
        const auto nodes = g.nodes();
        std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);
        for (int i = 0; i < 10; ++i) {
            const NodeId a = nodes[pick(rng)];
            const NodeId b = nodes[pick(rng)];
            const NodeId c = nodes[pick(rng)];
            const auto da = bfs_distances(g, a);
            const auto db = bfs_distances(g, b);
            CHECK(da[b] == db[a]);
            CHECK(da[c] <= da[b] + db[c]);
        }
    }
}

TEST_SUITE_END();
