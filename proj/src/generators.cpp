#include "generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "rng.hpp"

namespace netvuln {

namespace {

// Per-model stream-splitting constants XORed into the user seed.
constexpr std::uint64_t kErStream = 0x45522d5354524d31ull;
constexpr std::uint64_t kWsStream = 0x57532d5354524d32ull;
constexpr std::uint64_t kBaStream = 0x42412d5354524d33ull;

}  // namespace

std::string_view model_code(ModelKind model) {
    switch (model) {
        case ModelKind::ErdosRenyi: return "er";
        case ModelKind::WattsStrogatz: return "ws";
        case ModelKind::BarabasiAlbert: return "ba";
    }
    return "?";
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("erdos_renyi: p must lie in [0, 1]");
    }
    SplitMix64 rng(seed ^ kErStream);
    std::vector<Edge> edges;
    for (NodeId i = 0; i + 1 < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (rng.next_unit() < p) edges.push_back({i, j});
        }
    }
    return Graph::from_edges(edges, n);
}

Graph watts_strogatz(std::size_t n, std::size_t k, double beta, std::uint64_t seed) {
    if (k == 0 || k % 2 != 0 || k >= n) {
        throw std::invalid_argument("watts_strogatz: k must be even with 0 < k < n");
    }
    if (beta < 0.0 || beta > 1.0) {
        throw std::invalid_argument("watts_strogatz: beta must lie in [0, 1]");
    }
    SplitMix64 rng(seed ^ kWsStream);

    // Adjacency sets for duplicate checks during rewiring.
    std::vector<std::unordered_set<NodeId>> adj(n);
    auto connect = [&](NodeId a, NodeId b) {
        adj[a].insert(b);
        adj[b].insert(a);
    };
    for (std::size_t j = 1; j <= k / 2; ++j) {
        for (NodeId i = 0; i < n; ++i) {
            connect(i, static_cast<NodeId>((i + j) % n));
        }
    }

    for (std::size_t j = 1; j <= k / 2; ++j) {
        for (NodeId i = 0; i < n; ++i) {
            if (rng.next_unit() >= beta) continue;
            if (adj[i].size() >= n - 1) continue;  // no legal target left
            const NodeId old = static_cast<NodeId>((i + j) % n);
            if (!adj[i].count(old)) continue;  // far endpoint already rewired away
            NodeId fresh;
            do {
                fresh = static_cast<NodeId>(rng.next_below(n));
            } while (fresh == i || adj[i].count(fresh));
            adj[i].erase(old);
            adj[old].erase(i);
            connect(i, fresh);
        }
    }

    std::vector<Edge> edges;
    for (NodeId v = 0; v < n; ++v) {
        for (NodeId w : adj[v]) {
            if (v < w) edges.push_back({v, w});
        }
    }
    return Graph::from_edges(edges, n);
}

Graph barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (m < 1 || m >= n) {
        throw std::invalid_argument("barabasi_albert: m must satisfy 1 <= m < n");
    }
    SplitMix64 rng(seed ^ kBaStream);

    std::vector<Edge> edges;
    // Degree-proportional sampling off a repeated-endpoint list.
    std::vector<NodeId> repeated;
    for (NodeId i = 0; i + 1 < m; ++i) {
        for (NodeId j = i + 1; j < m; ++j) {
            edges.push_back({i, j});
            repeated.push_back(i);
            repeated.push_back(j);
        }
    }

    std::vector<NodeId> chosen;
    for (NodeId v = static_cast<NodeId>(m); v < n; ++v) {
        chosen.clear();
        while (chosen.size() < m) {
            NodeId target;
            if (repeated.empty()) {
                // Degenerate m=1 start: the single seed node has degree 0.
                target = static_cast<NodeId>(rng.next_below(v));
            } else {
                target = repeated[rng.next_below(repeated.size())];
            }
            if (std::find(chosen.begin(), chosen.end(), target) == chosen.end()) {
                chosen.push_back(target);
            }
        }
        for (NodeId t : chosen) {
            edges.push_back({v, t});
            repeated.push_back(t);
            repeated.push_back(v);
        }
    }
    return Graph::from_edges(edges, n);
}

Graph generate(const GeneratorSpec& spec) {
    switch (spec.model) {
        case ModelKind::ErdosRenyi:
            return erdos_renyi(spec.n, spec.p, spec.seed);
        case ModelKind::WattsStrogatz:
            return watts_strogatz(spec.n, spec.k, spec.beta, spec.seed);
        case ModelKind::BarabasiAlbert:
            return barabasi_albert(spec.n, spec.m, spec.seed);
    }
    throw std::invalid_argument("generate: unknown model");
}

Graph extract_giant(const Graph& g) {
    if (g.node_count() == 0) {
        throw std::domain_error("extract_giant: empty graph");
    }
    const auto [lcc, size] = largest_connected_component(g);

    std::vector<NodeId> dense(g.slot_count(), 0);
    for (std::size_t i = 0; i < lcc.size(); ++i) dense[lcc[i]] = static_cast<NodeId>(i);

    std::vector<Edge> edges;
    for (NodeId v : lcc) {
        for (NodeId w : g.neighbors(v)) {
            if (v < w) edges.push_back({dense[v], dense[w]});
        }
    }
    Graph out = Graph::from_edges(edges, size);
    if (g.has_labels()) {
        std::vector<std::string> labels(size);
        for (NodeId v : lcc) labels[dense[v]] = g.label(v);
        out.set_labels(std::move(labels));
    }
    return out;
}

}  // namespace netvuln
