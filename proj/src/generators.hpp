#pragma once

#include <cstdint>
#include <string_view>

#include "graph.hpp"

namespace netvuln {

enum class ModelKind { ErdosRenyi, WattsStrogatz, BarabasiAlbert };

std::string_view model_code(ModelKind model);  // "er" / "ws" / "ba"

/// Parameters for one synthetic-graph construction. Only the fields of the
/// chosen model are read (p for ER; k and beta for WS; m for BA).
struct GeneratorSpec {
    ModelKind model = ModelKind::ErdosRenyi;
    std::size_t n = 0;
    double p = 0.0;
    std::size_t k = 0;
    double beta = 0.1;
    std::size_t m = 0;
    std::uint64_t seed = 0;
};

/// G(n, p): every unordered pair becomes an edge with probability p, pairs
/// visited in lexicographic order. Identical (n, p, seed) gives an identical
/// edge set.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Ring lattice joining each node to k/2 neighbors per side, then one rewire
/// pass per lattice distance class: each edge's far endpoint is replaced
/// with probability beta by a uniform draw that avoids self-loops and
/// duplicates. k must be even, 0 < k < n; rewiring preserves the edge count.
Graph watts_strogatz(std::size_t n, std::size_t k, double beta, std::uint64_t seed);

/// Preferential attachment: a complete seed graph on m nodes, then each new
/// node attaches m edges to distinct targets drawn proportionally to current
/// degree (duplicates redrawn). Requires 1 <= m < n.
Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

Graph generate(const GeneratorSpec& spec);

/// Induced subgraph on the largest component with ids remapped to 0..s-1 in
/// ascending original-id order; labels carried over. Throws std::domain_error
/// on an empty graph.
Graph extract_giant(const Graph& g);

}  // namespace netvuln
