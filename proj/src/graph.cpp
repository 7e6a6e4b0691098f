#include "graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace netvuln {

namespace {

const std::vector<NodeId> kNoNeighbors;

}  // namespace

void Graph::check_node(NodeId v, const char* what) const {
    if (!has_node(v)) {
        throw std::invalid_argument(std::string(what) + ": node " +
                                    std::to_string(v) + " is not in the graph");
    }
}

Graph Graph::from_edges(std::span<const Edge> edges, std::size_t n_hint,
                        BuildCounts* counts) {
    std::size_t slots = n_hint;
    for (const Edge& e : edges) {
        slots = std::max({slots, static_cast<std::size_t>(e.a) + 1,
                          static_cast<std::size_t>(e.b) + 1});
    }

    Graph g;
    g.adjacency_.assign(slots, {});
    g.present_.assign(slots, 1);
    g.node_count_ = slots;

    BuildCounts local;
    for (const Edge& e : edges) {
        if (e.a == e.b) {
            ++local.dropped_self_loops;
            continue;
        }
        g.adjacency_[e.a].push_back(e.b);
        g.adjacency_[e.b].push_back(e.a);
    }
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        const auto dup = std::unique(nbrs.begin(), nbrs.end());
        local.dropped_duplicate_edges += static_cast<std::size_t>(nbrs.end() - dup);
        nbrs.erase(dup, nbrs.end());
        g.edge_count_ += nbrs.size();
    }
    g.edge_count_ /= 2;
    local.dropped_duplicate_edges /= 2;

    if (counts != nullptr) *counts = local;
    return g;
}

const std::vector<NodeId>& Graph::neighbors(NodeId v) const {
    check_node(v, "neighbors");
    return adjacency_[v];
}

std::vector<NodeId> Graph::nodes() const {
    std::vector<NodeId> out;
    out.reserve(node_count_);
    for (NodeId v = 0; v < present_.size(); ++v) {
        if (present_[v]) out.push_back(v);
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId v = 0; v < adjacency_.size(); ++v) {
        if (!present_[v]) continue;
        for (NodeId w : adjacency_[v]) {
            if (v < w) out.push_back({v, w});
        }
    }
    return out;
}

Graph Graph::remove_nodes(std::span<const NodeId> victims) const {
    for (NodeId v : victims) check_node(v, "remove_nodes");

    Graph g = *this;
    std::vector<std::uint8_t> gone(slot_count(), 0);
    for (NodeId v : victims) gone[v] = 1;

    for (NodeId v : victims) {
        if (!g.present_[v]) continue;  // duplicate victim entry
        for (NodeId w : g.adjacency_[v]) {
            if (gone[w]) continue;  // w's list is dropped wholesale below
            auto& nbrs = g.adjacency_[w];
            nbrs.erase(std::lower_bound(nbrs.begin(), nbrs.end(), v));
            --g.edge_count_;
        }
        g.edge_count_ -= std::count_if(g.adjacency_[v].begin(), g.adjacency_[v].end(),
                                       [&](NodeId w) { return gone[w] && w > v; });
        g.adjacency_[v].clear();
        g.adjacency_[v].shrink_to_fit();
        g.present_[v] = 0;
        --g.node_count_;
    }
    return g;
}

Graph Graph::induced(std::span<const NodeId> keep) const {
    for (NodeId v : keep) check_node(v, "induced");

    std::vector<std::uint8_t> kept(slot_count(), 0);
    for (NodeId v : keep) kept[v] = 1;

    Graph g;
    g.adjacency_.assign(slot_count(), {});
    g.present_.assign(slot_count(), 0);
    g.labels_ = labels_;
    for (NodeId v = 0; v < slot_count(); ++v) {
        if (!kept[v]) continue;
        g.present_[v] = 1;
        ++g.node_count_;
        for (NodeId w : adjacency_[v]) {
            if (kept[w]) g.adjacency_[v].push_back(w);
        }
        g.edge_count_ += g.adjacency_[v].size();
    }
    g.edge_count_ /= 2;
    return g;
}

std::string Graph::label(NodeId v) const {
    if (v < labels_.size() && !labels_[v].empty()) return labels_[v];
    return std::to_string(v);
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (labels.size() != slot_count()) {
        throw std::invalid_argument("set_labels: expected one label per node slot");
    }
    labels_ = std::move(labels);
}

ComponentPartition connected_components(const Graph& g) {
    ComponentPartition out;
    std::vector<std::uint8_t> seen(g.slot_count(), 0);
    std::vector<NodeId> queue;
    for (NodeId start = 0; start < g.slot_count(); ++start) {
        if (!g.has_node(start) || seen[start]) continue;
        std::vector<NodeId> comp;
        queue.clear();
        queue.push_back(start);
        seen[start] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const NodeId v = queue[head];
            comp.push_back(v);
            for (NodeId w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
    }
    // Discovery order is by minimum id already; a stable sort on size keeps
    // that order inside each size class, which is the documented tie-break.
    std::stable_sort(out.components.begin(), out.components.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return out;
}

std::pair<std::vector<NodeId>, std::size_t> largest_connected_component(const Graph& g) {
    ComponentPartition parts = connected_components(g);
    if (parts.components.empty()) return {{}, 0};
    auto& lcc = parts.components.front();
    return {std::move(lcc), parts.components.front().size()};
}

std::size_t largest_component_size(const Graph& g) {
    std::size_t best = 0;
    for (const auto& comp : connected_components(g).components) {
        best = std::max(best, comp.size());
    }
    return best;
}

bool is_connected(const Graph& g) {
    if (g.node_count() == 0) return true;
    return largest_component_size(g) == g.node_count();
}

std::vector<std::int64_t> bfs_distances(const Graph& g, NodeId source) {
    if (!g.has_node(source)) {
        throw std::invalid_argument("bfs_distances: unknown source node " +
                                    std::to_string(source));
    }
    std::vector<std::int64_t> dist(g.slot_count(), -1);
    std::vector<NodeId> queue;
    queue.push_back(source);
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId v = queue[head];
        for (NodeId w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

}  // namespace netvuln
