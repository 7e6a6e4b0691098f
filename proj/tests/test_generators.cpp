#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "generators.hpp"
#include "metrics.hpp"
#include "oracles.hpp"

using namespace netvuln;

TEST_SUITE_BEGIN("generators");

TEST_CASE("erdos_renyi extremes") {
    const Graph k4 = erdos_renyi(4, 1.0, 42);
    CHECK(k4.node_count() == 4);
    CHECK(k4.edge_count() == 6);

    const Graph empty = erdos_renyi(100, 0.0, 42);
    CHECK(empty.node_count() == 100);
    CHECK(empty.edge_count() == 0);

    CHECK_THROWS_AS((void)erdos_renyi(10, 1.5, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)erdos_renyi(10, -0.1, 0), std::invalid_argument);
}

TEST_CASE("erdos_renyi hits the target mean degree") {
    const double p = 6.0 / 499.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Graph g = erdos_renyi(500, p, seed);
        const double mean_degree = 2.0 * static_cast<double>(g.edge_count()) / 500.0;
        CHECK(mean_degree > 5.5);
        CHECK(mean_degree < 6.5);
    }
}

TEST_CASE("erdos_renyi edge count is unbiased across 50 seeds") {
    const double p = 6.0 / 499.0;
    const double expected = 0.5 * 500.0 * 499.0 * p;  // C(500,2) * p
    const double variance = 0.5 * 500.0 * 499.0 * p * (1.0 - p);
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        total += static_cast<double>(erdos_renyi(500, p, seed).edge_count());
    }
    const double mean = total / 50.0;
    const double standard_error = std::sqrt(variance / 50.0);
    CHECK(std::abs(mean - expected) < 3.0 * standard_error);
}

TEST_CASE("watts_strogatz beta=0 is the plain lattice") {
    const Graph ring = watts_strogatz(10, 2, 0.0, 1);
    CHECK(ring.edges() == oracle::cycle_graph(10).edges());

    const Graph lattice = watts_strogatz(500, 6, 0.0, 1);
    CHECK(lattice.edge_count() == 1500);
    for (NodeId v : lattice.nodes()) {
        CHECK(lattice.degree(v) == 6);
        CHECK(local_clustering(lattice, v) == doctest::Approx(0.6));
    }
}

TEST_CASE("watts_strogatz rewiring moves edges but never deletes them") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Graph g = watts_strogatz(500, 6, 0.1, seed);
        CHECK(g.edge_count() == 1500);
        CHECK(g.node_count() == 500);
    }
    const Graph heavy = watts_strogatz(200, 4, 1.0, 9);
    CHECK(heavy.edge_count() == 400);
}

TEST_CASE("watts_strogatz validates parameters") {
    CHECK_THROWS_AS((void)watts_strogatz(10, 3, 0.1, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)watts_strogatz(10, 0, 0.1, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)watts_strogatz(10, 10, 0.1, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)watts_strogatz(10, 2, 1.5, 0), std::invalid_argument);
}

TEST_CASE("barabasi_albert small case is complete") {
    const Graph g = barabasi_albert(4, 3, 7);
    CHECK(g.edge_count() == 6);
    for (NodeId v : g.nodes()) CHECK(g.degree(v) == 3);
}

TEST_CASE("barabasi_albert edge arithmetic at the standard scale") {
    const Graph g = barabasi_albert(500, 3, 1);
    CHECK(g.edge_count() == 3 + 3 * 497);  // seed clique + m per newcomer
    const double mean_degree = 2.0 * static_cast<double>(g.edge_count()) / 500.0;
    CHECK(mean_degree == doctest::Approx(5.976));
}

TEST_CASE("barabasi_albert grows heavy tails") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Graph g = barabasi_albert(500, 3, seed);
        std::size_t max_degree = 0;
        std::size_t min_degree = 500;
        std::size_t degree_sum = 0;
        for (NodeId v : g.nodes()) {
            max_degree = std::max(max_degree, g.degree(v));
            min_degree = std::min(min_degree, g.degree(v));
            degree_sum += g.degree(v);
        }
        CHECK(max_degree > 30);
        CHECK(min_degree >= 3);
        CHECK(degree_sum == 2 * (3 + 3 * 497));
    }
}

TEST_CASE("barabasi_albert validates parameters") {
    CHECK_THROWS_AS((void)barabasi_albert(5, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)barabasi_albert(5, 5, 0), std::invalid_argument);
}

TEST_CASE("generation is deterministic per spec") {
    for (const GeneratorSpec spec :
         {GeneratorSpec{ModelKind::ErdosRenyi, 120, 0.05, 0, 0.1, 0, 77},
          GeneratorSpec{ModelKind::WattsStrogatz, 120, 0.0, 4, 0.2, 0, 77},
          GeneratorSpec{ModelKind::BarabasiAlbert, 120, 0.0, 0, 0.1, 2, 77}}) {
        const Graph a = generate(spec);
        const Graph b = generate(spec);
        CHECK(a.edges() == b.edges());

        GeneratorSpec other = spec;
        other.seed = 78;
        CHECK(generate(other).edges() != a.edges());
    }
}

TEST_CASE("watts_strogatz preserves total degree for any beta") {
    for (const double beta : {0.0, 0.1, 0.5, 1.0}) {
        const Graph g = watts_strogatz(100, 6, beta, 3);
        std::size_t degree_sum = 0;
        for (NodeId v : g.nodes()) degree_sum += g.degree(v);
        CHECK(degree_sum == 2 * g.edge_count());
        CHECK(g.edge_count() == 300);
    }
}

TEST_CASE("extract_giant remaps ids densely") {
    const Graph split = oracle::path_graph(5).remove_nodes(std::vector<NodeId>{2});
    const Graph giant = extract_giant(split);
    CHECK(giant.node_count() == 2);
    CHECK(giant.edge_count() == 1);
    CHECK(giant.nodes() == std::vector<NodeId>{0, 1});

    const Graph c6 = oracle::cycle_graph(6);
    CHECK(extract_giant(c6).edges() == c6.edges());

    CHECK_THROWS_AS((void)extract_giant(Graph{}), std::domain_error);
}

TEST_CASE("extract_giant output is connected") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const Graph g = erdos_renyi(80, 0.02, seed);
        const Graph giant = extract_giant(g);
        CHECK(is_connected(giant));
        CHECK(giant.node_count() == largest_component_size(g));
    }
}

TEST_SUITE_END();
