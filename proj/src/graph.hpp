#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netvuln {

using NodeId = std::uint32_t;

struct Edge {
    NodeId a = 0;
    NodeId b = 0;

    bool operator==(const Edge&) const = default;
};

struct BuildCounts {
    std::size_t dropped_self_loops = 0;
    std::size_t dropped_duplicate_edges = 0;
};

/// Undirected simple unweighted graph over a dense id space.
///
/// Node ids live in [0, slot_count()). Removing nodes leaves the ids of the
/// survivors untouched, so centrality results computed on an induced subgraph
/// stay valid in the parent graph. Instances are immutable once built; all
/// mutating operations return a new value.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Self-loops and duplicate edges are
    /// dropped (counted in `counts` when given). Ids beyond the largest
    /// endpoint can be declared via `n_hint` to keep isolated nodes.
    static Graph from_edges(std::span<const Edge> edges, std::size_t n_hint = 0,
                            BuildCounts* counts = nullptr);

    std::size_t slot_count() const { return adjacency_.size(); }
    std::size_t node_count() const { return node_count_; }
    std::size_t edge_count() const { return edge_count_; }

    bool has_node(NodeId v) const {
        return v < present_.size() && present_[v] != 0;
    }
    /// Sorted neighbor list. `v` must be a present node.
    const std::vector<NodeId>& neighbors(NodeId v) const;
    std::size_t degree(NodeId v) const { return neighbors(v).size(); }

    /// Present node ids in ascending order.
    std::vector<NodeId> nodes() const;
    /// Canonical edge list (a < b), lexicographically sorted.
    std::vector<Edge> edges() const;

    /// New graph without `victims` or any edge touching them.
    /// Throws std::invalid_argument if a victim is not a present node.
    Graph remove_nodes(std::span<const NodeId> victims) const;

    /// Induced subgraph on `keep`, ids preserved. Throws std::invalid_argument
    /// on unknown nodes.
    Graph induced(std::span<const NodeId> keep) const;

    bool has_labels() const { return !labels_.empty(); }
    /// Display label for `v`; falls back to the decimal id when unlabeled.
    std::string label(NodeId v) const;
    /// Attaches display labels; must cover every slot.
    void set_labels(std::vector<std::string> labels);
    const std::vector<std::string>& raw_labels() const { return labels_; }

private:
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<std::uint8_t> present_;
    std::vector<std::string> labels_;
    std::size_t node_count_ = 0;
    std::size_t edge_count_ = 0;

    void check_node(NodeId v, const char* what) const;
};

/// Connected components, largest first; equal sizes ordered by smallest
/// contained id. Component node lists are ascending.
struct ComponentPartition {
    std::vector<std::vector<NodeId>> components;
};

ComponentPartition connected_components(const Graph& g);

/// Node set and size of the largest component. Ties broken toward the
/// component with the smallest minimum id; (empty, 0) for the empty graph.
std::pair<std::vector<NodeId>, std::size_t> largest_connected_component(const Graph& g);

std::size_t largest_component_size(const Graph& g);

bool is_connected(const Graph& g);

/// Hop counts from `source`, indexed by node id; -1 marks nodes outside the
/// source's component (and absent slots). Throws std::invalid_argument for an
/// unknown source.
std::vector<std::int64_t> bfs_distances(const Graph& g, NodeId source);

}  // namespace netvuln
