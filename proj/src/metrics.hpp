#pragma once

#include <cstdint>

#include "graph.hpp"

namespace netvuln {

/// Whole-graph statistical summary. Diameter and radius describe the largest
/// component when the graph is disconnected; path-length figures average
/// over ordered node pairs at finite distance.
struct NetworkStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::size_t ncc = 0;
    std::int64_t diameter = 0;
    std::int64_t radius = 0;
    std::size_t connected_pair_count = 0;
    double characteristic_path_length = 0.0;
    double average_degree = 0.0;
    double clustering_coefficient = 0.0;
};

/// Computes every field exactly via all-sources BFS.
/// Throws std::domain_error on an empty graph.
NetworkStats network_stats(const Graph& g);

/// 2·(edges among neighbors) / (δ(v)·(δ(v)−1)); 0 when δ(v) < 2.
/// The graph-level clustering_coefficient averages this over all nodes,
/// counting degree-<2 nodes as 0 (the convention that reproduces the
/// published reference values for the bundled datasets).
double local_clustering(const Graph& g, NodeId v);

}  // namespace netvuln
