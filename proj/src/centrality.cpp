#include "centrality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace netvuln {

bool higher_is_central(CentralityKind kind) {
    return kind == CentralityKind::Degree || kind == CentralityKind::Betweenness;
}

std::string_view kind_name(CentralityKind kind) {
    switch (kind) {
        case CentralityKind::Degree: return "degree";
        case CentralityKind::Eccentricity: return "eccentricity";
        case CentralityKind::Remoteness: return "remoteness";
        case CentralityKind::Betweenness: return "betweenness";
    }
    return "?";
}

std::vector<std::int64_t> degrees(const Graph& g) {
    std::vector<std::int64_t> out(g.slot_count(), 0);
    for (NodeId v : g.nodes()) out[v] = static_cast<std::int64_t>(g.degree(v));
    return out;
}

namespace {

void require_connected(const Graph& g, const char* what) {
    if (g.node_count() == 0) {
        throw std::domain_error(std::string(what) + ": empty graph");
    }
    if (!is_connected(g)) {
        throw std::domain_error(std::string(what) + ": graph is disconnected");
    }
}

}  // namespace

std::vector<std::int64_t> eccentricities(const Graph& g) {
    require_connected(g, "eccentricities");
    std::vector<std::int64_t> out(g.slot_count(), 0);
    for (NodeId v : g.nodes()) {
        std::int64_t worst = 0;
        for (std::int64_t d : bfs_distances(g, v)) worst = std::max(worst, d);
        out[v] = worst;
    }
    return out;
}

std::vector<std::int64_t> remoteness(const Graph& g) {
    require_connected(g, "remoteness");
    std::vector<std::int64_t> out(g.slot_count(), 0);
    for (NodeId v : g.nodes()) {
        std::int64_t total = 0;
        for (std::int64_t d : bfs_distances(g, v)) {
            if (d > 0) total += d;
        }
        out[v] = total;
    }
    return out;
}

std::vector<double> betweenness(const Graph& g) {
    const std::size_t slots = g.slot_count();
    std::vector<double> score(slots, 0.0);
    const std::vector<NodeId> all = g.nodes();

    // Brandes: one BFS per source builds the shortest-path DAG (predecessor
    // lists + path counts), then dependencies accumulate in reverse BFS
    // order. Sources run in ascending id order so accumulation is
    // reproducible bit for bit.
    std::vector<std::int64_t> dist(slots);
    std::vector<double> sigma(slots);
    std::vector<double> delta(slots);
    std::vector<std::vector<NodeId>> preds(slots);
    std::vector<NodeId> order;
    order.reserve(slots);

    for (NodeId s : all) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        order.clear();

        dist[s] = 0;
        sigma[s] = 1.0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const NodeId v = order[head];
            for (NodeId w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        for (std::size_t i = order.size(); i-- > 1;) {
            const NodeId w = order[i];
            const double coeff = (1.0 + delta[w]) / sigma[w];
            for (NodeId v : preds[w]) delta[v] += sigma[v] * coeff;
            if (w != s) score[w] += delta[w];
        }
    }

    // Each unordered pair was accumulated from both endpoints.
    for (double& x : score) x /= 2.0;
    return score;
}

bool scores_tie(CentralityKind kind, double a, double b) {
    if (kind != CentralityKind::Betweenness) return a == b;
    const double tol = std::max(1e-12, 1e-9 * std::max(std::abs(a), std::abs(b)));
    return std::abs(a - b) <= tol;
}

namespace {

std::vector<double> scores_for(const Graph& g, CentralityKind kind) {
    std::vector<double> out(g.slot_count(), 0.0);
    switch (kind) {
        case CentralityKind::Degree: {
            for (NodeId v : g.nodes()) out[v] = static_cast<double>(g.degree(v));
            break;
        }
        case CentralityKind::Eccentricity: {
            auto e = eccentricities(g);
            for (NodeId v : g.nodes()) out[v] = static_cast<double>(e[v]);
            break;
        }
        case CentralityKind::Remoteness: {
            auto r = remoteness(g);
            for (NodeId v : g.nodes()) out[v] = static_cast<double>(r[v]);
            break;
        }
        case CentralityKind::Betweenness: {
            out = betweenness(g);
            break;
        }
    }
    return out;
}

}  // namespace

std::vector<NodeId> central_set(const Graph& g, CentralityKind kind) {
    if (g.node_count() == 0) {
        throw std::domain_error("central_set: empty graph");
    }
    const std::vector<double> score = scores_for(g, kind);
    const std::vector<NodeId> all = g.nodes();
    const bool want_max = higher_is_central(kind);

    double extreme = score[all.front()];
    for (NodeId v : all) {
        if (want_max ? score[v] > extreme : score[v] < extreme) extreme = score[v];
    }
    std::vector<NodeId> out;
    for (NodeId v : all) {
        if (scores_tie(kind, score[v], extreme)) out.push_back(v);
    }
    return out;
}

CentralityTiers centrality_tiers(const Graph& g, CentralityKind kind) {
    if (g.node_count() == 0) {
        throw std::domain_error("centrality_tiers: empty graph");
    }
    const std::vector<double> score = scores_for(g, kind);
    std::vector<NodeId> order = g.nodes();
    const bool want_max = higher_is_central(kind);
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        return want_max ? score[a] > score[b] : score[a] < score[b];
    });

    CentralityTiers out;
    out.kind = kind;
    for (NodeId v : order) {
        // Ties are judged against the tier's head score, so equal-score runs
        // never split from accumulated rounding.
        if (out.tiers.empty() || !scores_tie(kind, score[v], out.tiers.back().score)) {
            out.tiers.push_back({score[v], {}});
        }
        out.tiers.back().nodes.push_back(v);
    }
    for (auto& tier : out.tiers) std::sort(tier.nodes.begin(), tier.nodes.end());
    return out;
}

}  // namespace netvuln
