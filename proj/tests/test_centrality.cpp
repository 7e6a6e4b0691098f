#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "centrality.hpp"
#include "metrics.hpp"
#include "oracles.hpp"

using namespace netvuln;

namespace {

std::vector<NodeId> tier_nodes(const CentralityTiers& tiers, std::size_t i) {
    return tiers.tiers.at(i).nodes;
}

}  // namespace

TEST_SUITE_BEGIN("centrality");

TEST_CASE("degrees of stars and cycles") {
    const Graph star = oracle::star_graph(4);
    const auto ds = degrees(star);
    CHECK(ds[0] == 4);
    for (NodeId leaf = 1; leaf <= 4; ++leaf) CHECK(ds[leaf] == 1);

    for (NodeId v = 0; v < 6; ++v) CHECK(degrees(oracle::cycle_graph(6))[v] == 2);
}

TEST_CASE("eccentricities on paths and stars") {
    const auto p5 = eccentricities(oracle::path_graph(5));
    CHECK(p5 == std::vector<std::int64_t>{4, 3, 2, 3, 4});

    const auto star = eccentricities(oracle::star_graph(4));
    CHECK(star[0] == 1);
    for (NodeId leaf = 1; leaf <= 4; ++leaf) CHECK(star[leaf] == 2);

    const Graph split = oracle::path_graph(5).remove_nodes(std::vector<NodeId>{2});
    CHECK_THROWS_AS((void)eccentricities(split), std::domain_error);
}

TEST_CASE("remoteness on paths, stars and cycles") {
    CHECK(remoteness(oracle::path_graph(5)) ==
          std::vector<std::int64_t>{10, 7, 6, 7, 10});

    const auto star = remoteness(oracle::star_graph(4));
    CHECK(star[0] == 4);
    for (NodeId leaf = 1; leaf <= 4; ++leaf) CHECK(star[leaf] == 7);

    const auto c5 = remoteness(oracle::cycle_graph(5));
    for (NodeId v = 0; v < 5; ++v) CHECK(c5[v] == 6);

    CHECK_THROWS_AS((void)remoteness(Graph{}), std::domain_error);
}

TEST_CASE("betweenness matches hand values and the path oracle") {
    const Graph p5 = oracle::path_graph(5);
    const auto got = betweenness(p5);
    const std::vector<double> expected{0, 3, 4, 3, 0};
    for (NodeId v = 0; v < 5; ++v) CHECK(got[v] == doctest::Approx(expected[v]));
    const auto ref = oracle::betweenness(p5);
    for (NodeId v = 0; v < 5; ++v) CHECK(got[v] == doctest::Approx(ref[v]));

    const auto star = betweenness(oracle::star_graph(4));
    CHECK(star[0] == doctest::Approx(6.0));  // C(4,2) leaf pairs
    for (NodeId leaf = 1; leaf <= 4; ++leaf) CHECK(star[leaf] == doctest::Approx(0.0));

    const auto c5 = betweenness(oracle::cycle_graph(5));
    const auto c5_ref = oracle::betweenness(oracle::cycle_graph(5));
    for (NodeId v = 0; v < 5; ++v) {
        CHECK(c5[v] == doctest::Approx(1.0));
        CHECK(c5_ref[v] == doctest::Approx(1.0));
    }
}

TEST_CASE("betweenness handles disconnected input per component") {
    const Graph split = oracle::path_graph(6).remove_nodes(std::vector<NodeId>{2});
    const auto got = betweenness(split);
    CHECK(got[0] == doctest::Approx(0.0));
    CHECK(got[4] == doctest::Approx(1.0));  // one pair {3,5} routes through 4
}

TEST_CASE("central_set picks the extreme tier") {
    CHECK(central_set(oracle::path_graph(5), CentralityKind::Remoteness) ==
          std::vector<NodeId>{2});
    CHECK(central_set(oracle::star_graph(4), CentralityKind::Degree) ==
          std::vector<NodeId>{0});

    const Graph c4 = oracle::cycle_graph(4);
    for (const auto kind :
         {CentralityKind::Degree, CentralityKind::Eccentricity,
          CentralityKind::Remoteness, CentralityKind::Betweenness}) {
        CHECK(central_set(c4, kind) == std::vector<NodeId>{0, 1, 2, 3});
    }

    CHECK_THROWS_AS((void)central_set(Graph{}, CentralityKind::Degree),
                    std::domain_error);
}

TEST_CASE("centrality_tiers partitions by score") {
    const Graph p5 = oracle::path_graph(5);

    const auto ecc = centrality_tiers(p5, CentralityKind::Eccentricity);
    REQUIRE(ecc.tiers.size() == 3);
    CHECK(tier_nodes(ecc, 0) == std::vector<NodeId>{2});
    CHECK(tier_nodes(ecc, 1) == std::vector<NodeId>{1, 3});
    CHECK(tier_nodes(ecc, 2) == std::vector<NodeId>{0, 4});

    const auto btw = centrality_tiers(p5, CentralityKind::Betweenness);
    REQUIRE(btw.tiers.size() == 3);
    CHECK(tier_nodes(btw, 0) == std::vector<NodeId>{2});
    CHECK(btw.tiers[0].score == doctest::Approx(4.0));
    CHECK(btw.tiers[1].score == doctest::Approx(3.0));
    CHECK(btw.tiers[2].score == doctest::Approx(0.0));

    const auto c6 = centrality_tiers(oracle::cycle_graph(6), CentralityKind::Degree);
    REQUIRE(c6.tiers.size() == 1);
    CHECK(c6.tiers[0].nodes.size() == 6);
}

TEST_CASE("all four measures match the brute-force oracle on the corpus") {
    std::vector<Graph> corpus;
    for (std::size_t n = 2; n <= 8; ++n) {
        corpus.push_back(oracle::path_graph(n));
        corpus.push_back(oracle::cycle_graph(std::max<std::size_t>(n, 3)));
        corpus.push_back(oracle::star_graph(n - 1));
        corpus.push_back(oracle::complete_graph(n));
    }
    std::mt19937 rng(99);
    for (int i = 0; i < 60; ++i) corpus.push_back(oracle::random_connected_graph(8, rng));

    for (const Graph& g : corpus) {
        const auto got_b = betweenness(g);
        const auto ref_b = oracle::betweenness(g);
        const auto got_e = eccentricities(g);
        const auto ref_e = oracle::eccentricities(g);
        const auto got_r = remoteness(g);
        const auto ref_r = oracle::remoteness(g);
        for (NodeId v : g.nodes()) {
            CHECK(got_b[v] == doctest::Approx(ref_b[v]).epsilon(1e-9));
            CHECK(got_e[v] == ref_e[v]);
            CHECK(got_r[v] == ref_r[v]);
        }
        for (const auto kind :
             {CentralityKind::Degree, CentralityKind::Eccentricity,
              CentralityKind::Remoteness, CentralityKind::Betweenness}) {
            CHECK(central_set(g, kind) == oracle::central_set(g, kind));
        }
    }
}

TEST_CASE("betweenness mass equals summed average interior length") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = oracle::random_connected_graph(8, rng);
        const auto scores = betweenness(g);
        double total = 0.0;
        for (NodeId v : g.nodes()) total += scores[v];

        // Each unordered pair contributes its average geodesic interior
        // length: sum over interior nodes of sigma_st(v)/sigma_st.
        const auto ref = oracle::betweenness(g);
        double ref_total = 0.0;
        for (NodeId v : g.nodes()) ref_total += ref[v];
        CHECK(total == doctest::Approx(ref_total).epsilon(1e-9));
    }
}

TEST_CASE("radius and diameter bounds") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracle::random_connected_graph(8, rng);
        const auto ecc = eccentricities(g);
        std::int64_t radius = ecc[g.nodes().front()];
        std::int64_t diameter = radius;
        for (NodeId v : g.nodes()) {
            radius = std::min(radius, ecc[v]);
            diameter = std::max(diameter, ecc[v]);
        }
        CHECK(radius <= diameter);
        CHECK(diameter <= 2 * radius);
    }
}

TEST_CASE("summed remoteness agrees with the metrics module") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = oracle::random_connected_graph(8, rng);
        const auto rem = remoteness(g);
        double total = 0.0;
        for (NodeId v : g.nodes()) total += static_cast<double>(rem[v]);

        const NetworkStats stats = network_stats(g);
        CHECK(total == doctest::Approx(stats.characteristic_path_length *
                                       static_cast<double>(stats.connected_pair_count)));
    }
}

TEST_CASE("central_set equals the first tier") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracle::random_connected_graph(8, rng);
        for (const auto kind :
             {CentralityKind::Degree, CentralityKind::Eccentricity,
              CentralityKind::Remoteness, CentralityKind::Betweenness}) {
            CHECK(central_set(g, kind) == centrality_tiers(g, kind).tiers.front().nodes);
        }
    }
}

TEST_CASE("measures are invariant under relabeling") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph g = oracle::random_connected_graph(8, rng);
        const auto nodes = g.nodes();
        std::vector<NodeId> perm(nodes.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<NodeId>(i);
        std::shuffle(perm.begin(), perm.end(), rng);

        std::vector<Edge> relabeled;
        for (const Edge& e : g.edges()) relabeled.push_back({perm[e.a], perm[e.b]});
        const Graph h = Graph::from_edges(relabeled, nodes.size());

        const auto bg = betweenness(g);
        const auto bh = betweenness(h);
        const auto eg = eccentricities(g);
        const auto eh = eccentricities(h);
        const auto rg = remoteness(g);
        const auto rh = remoteness(h);
        const auto dg = degrees(g);
        const auto dh = degrees(h);
        for (NodeId v : nodes) {
            CHECK(bg[v] == doctest::Approx(bh[perm[v]]).epsilon(1e-9));
            CHECK(eg[v] == eh[perm[v]]);
            CHECK(rg[v] == rh[perm[v]]);
            CHECK(dg[v] == dh[perm[v]]);
        }
    }
}

TEST_SUITE_END();
