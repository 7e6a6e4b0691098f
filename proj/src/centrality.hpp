#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace netvuln {

/// The four node-importance measures driving the attack strategies.
/// Degree and Betweenness rank higher scores as more central; Eccentricity
/// and Remoteness rank lower scores as more central.
enum class CentralityKind { Degree, Eccentricity, Remoteness, Betweenness };

bool higher_is_central(CentralityKind kind);
std::string_view kind_name(CentralityKind kind);

/// δ(v) for every present node, indexed by id (absent slots are 0).
std::vector<std::int64_t> degrees(const Graph& g);

/// Exact eccentricity (max hop distance) per node via all-sources BFS.
/// Requires a connected, non-empty graph; throws std::domain_error otherwise.
std::vector<std::int64_t> eccentricities(const Graph& g);

/// Total hop distance from each node to all others. Same preconditions as
/// eccentricities().
std::vector<std::int64_t> remoteness(const Graph& g);

/// Exact betweenness via Brandes dependency accumulation, one BFS pass per
/// source. Scores are unnormalized, counted over unordered pairs {s,t} with
/// the endpoints excluded. Disconnected graphs are fine: pairs are counted
/// within components.
std::vector<double> betweenness(const Graph& g);

/// Equality tolerance used to group real-valued betweenness scores into
/// tiers (relative 1e-9 with an absolute floor of 1e-12).
bool scores_tie(CentralityKind kind, double a, double b);

/// All nodes attaining the most-central score, ascending by id.
/// Throws std::domain_error on an empty graph (and on disconnected input for
/// Eccentricity/Remoteness).
std::vector<NodeId> central_set(const Graph& g, CentralityKind kind);

/// Partition of the node set into equal-score tiers, most central first.
struct CentralityTiers {
    CentralityKind kind = CentralityKind::Degree;
    struct Tier {
        double score = 0;
        std::vector<NodeId> nodes;  // ascending
    };
    std::vector<Tier> tiers;
};

CentralityTiers centrality_tiers(const Graph& g, CentralityKind kind);

}  // namespace netvuln
