#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "centrality.hpp"
#include "generators.hpp"
#include "graph.hpp"

namespace netvuln {

/// One of the eight node-removal strategies: a centrality measure plus the
/// choice of attacking on initial or recalculated information. Two-letter
/// codes follow the usual naming: I/R + B (betweenness), C (center, i.e.
/// minimum eccentricity), D (degree), M (median, i.e. minimum remoteness).
struct AttackStrategy {
    enum class Info { Initial, Recalculated };

    Info info = Info::Recalculated;
    CentralityKind kind = CentralityKind::Degree;

    std::string code() const;
    static std::optional<AttackStrategy> from_code(std::string_view code);

    bool operator==(const AttackStrategy&) const = default;
};

/// The canonical strategy enumeration order: IB IC ID IM RB RC RD RM.
const std::vector<AttackStrategy>& all_strategies();
std::size_t strategy_index(const AttackStrategy& s);

/// Per-iteration record of an attack run. Row 0 is the untouched state
/// (f = 0, lcc_prime = 1); each later row logs one removal step. f is the
/// cumulative removed fraction of the initial node count N and lcc_prime the
/// largest-component size over N. Runs end once the largest component has at
/// most 3 nodes.
struct AttackTrace {
    AttackStrategy strategy;
    std::string subject;                 // dataset or model label
    std::optional<std::uint64_t> seed;   // present for generated graphs
    std::size_t initial_n = 0;

    struct Row {
        std::size_t iteration = 0;
        std::vector<NodeId> removed;     // this step, ascending
        std::size_t removed_cum = 0;
        double f = 0.0;
        std::size_t lcc_size = 0;
        double lcc_prime = 0.0;
    };
    std::vector<Row> rows;

    /// False only if tiers ran out with the largest component still above 3
    /// nodes; removing every tier empties the graph, so a connected input
    /// cannot get here.
    bool destructive = true;
};

/// Repeatedly removes the most-central node set of the current largest
/// component (recomputed each iteration) from the whole graph.
/// Requires a connected graph with more than 3 nodes; throws
/// std::domain_error otherwise.
AttackTrace run_recalculated(const Graph& g, CentralityKind kind);

/// Computes centrality tiers once on the untouched graph, then removes one
/// whole tier per iteration, tracking the largest component after each step.
/// Same preconditions as run_recalculated.
AttackTrace run_initial(const Graph& g, CentralityKind kind);

AttackTrace run_attack(const Graph& g, AttackStrategy strategy);

struct AttackSummary {
    double destruction_f = 0.0;     // f of the final row
    double robustness_index = 0.0;  // mean lcc_prime over all rows
    std::size_t iterations = 0;
};

AttackSummary summarize(const AttackTrace& trace);

/// One (strategy, seed) execution inside a sweep. A failed run keeps its
/// provenance and carries the error text instead of a trace.
struct SweepRun {
    AttackStrategy strategy;
    std::uint64_t seed = 0;
    std::optional<AttackTrace> trace;
    std::string error;
};

/// Generates `runs` graphs from `spec` with seeds base_seed, base_seed+1, …,
/// extracts each giant component and executes every strategy on it. Runs are
/// independent and may execute in parallel; the result is ordered by
/// (strategy index, seed) and is identical for any thread count. Per-run
/// failures are recorded without aborting the rest.
std::vector<SweepRun> sweep(const GeneratorSpec& spec,
                            const std::vector<AttackStrategy>& strategies,
                            std::size_t runs, std::uint64_t base_seed);

}  // namespace netvuln
