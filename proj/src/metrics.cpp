#include "metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace netvuln {

double local_clustering(const Graph& g, NodeId v) {
    const auto& nbrs = g.neighbors(v);  // validates v
    const std::size_t deg = nbrs.size();
    if (deg < 2) return 0.0;

    std::size_t links = 0;
    for (NodeId u : nbrs) {
        const auto& un = g.neighbors(u);
        // Count pairs once: only neighbors w > u.
        auto it = std::upper_bound(un.begin(), un.end(), u);
        for (; it != un.end(); ++it) {
            if (std::binary_search(nbrs.begin(), nbrs.end(), *it)) ++links;
        }
    }
    return 2.0 * static_cast<double>(links) /
           (static_cast<double>(deg) * static_cast<double>(deg - 1));
}

NetworkStats network_stats(const Graph& g) {
    if (g.node_count() == 0) {
        throw std::domain_error("network_stats: empty graph");
    }

    NetworkStats s;
    s.node_count = g.node_count();
    s.edge_count = g.edge_count();
    s.average_degree = 2.0 * static_cast<double>(s.edge_count) /
                       static_cast<double>(s.node_count);

    const ComponentPartition parts = connected_components(g);
    s.ncc = parts.components.size();
    const auto& lcc = parts.components.front();
    std::vector<std::uint8_t> in_lcc(g.slot_count(), 0);
    for (NodeId v : lcc) in_lcc[v] = 1;

    std::int64_t dia = 0;
    std::int64_t rad = -1;
    std::int64_t dist_sum = 0;
    std::size_t pairs = 0;
    double clustering_sum = 0.0;

    for (NodeId v : g.nodes()) {
        std::int64_t ecc = 0;
        for (std::int64_t d : bfs_distances(g, v)) {
            if (d <= 0) continue;
            dist_sum += d;
            ++pairs;
            ecc = std::max(ecc, d);
        }
        if (in_lcc[v]) {
            dia = std::max(dia, ecc);
            rad = (rad < 0) ? ecc : std::min(rad, ecc);
        }
        clustering_sum += local_clustering(g, v);
    }

    s.diameter = dia;
    s.radius = std::max<std::int64_t>(rad, 0);
    s.connected_pair_count = pairs;
    s.characteristic_path_length =
        pairs == 0 ? 0.0 : static_cast<double>(dist_sum) / static_cast<double>(pairs);
    s.clustering_coefficient = clustering_sum / static_cast<double>(s.node_count);
    return s;
}

}  // namespace netvuln
