#include "attack.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>

namespace netvuln {

std::string AttackStrategy::code() const {
    std::string out(1, info == Info::Initial ? 'I' : 'R');
    switch (kind) {
        case CentralityKind::Betweenness: out += 'B'; break;
        case CentralityKind::Eccentricity: out += 'C'; break;
        case CentralityKind::Degree: out += 'D'; break;
        case CentralityKind::Remoteness: out += 'M'; break;
    }
    return out;
}

std::optional<AttackStrategy> AttackStrategy::from_code(std::string_view code) {
    if (code.size() != 2) return std::nullopt;
    AttackStrategy s;
    switch (code[0]) {
        case 'I': s.info = Info::Initial; break;
        case 'R': s.info = Info::Recalculated; break;
        default: return std::nullopt;
    }
    switch (code[1]) {
        case 'B': s.kind = CentralityKind::Betweenness; break;
        case 'C': s.kind = CentralityKind::Eccentricity; break;
        case 'D': s.kind = CentralityKind::Degree; break;
        case 'M': s.kind = CentralityKind::Remoteness; break;
        default: return std::nullopt;
    }
    return s;
}

const std::vector<AttackStrategy>& all_strategies() {
    static const std::vector<AttackStrategy> order = [] {
        std::vector<AttackStrategy> out;
        for (const char* code : {"IB", "IC", "ID", "IM", "RB", "RC", "RD", "RM"}) {
            out.push_back(*AttackStrategy::from_code(code));
        }
        return out;
    }();
    return order;
}

std::size_t strategy_index(const AttackStrategy& s) {
    const auto& order = all_strategies();
    return static_cast<std::size_t>(
        std::find(order.begin(), order.end(), s) - order.begin());
}

namespace {

constexpr std::size_t kDestroyedSize = 3;

void require_attackable(const Graph& g, const char* what) {
    if (!is_connected(g) || g.node_count() == 0) {
        throw std::domain_error(std::string(what) + ": input must be connected");
    }
    if (g.node_count() <= kDestroyedSize) {
        throw std::domain_error(std::string(what) +
                                ": graph already has 3 or fewer nodes");
    }
}

void push_row(AttackTrace& trace, std::vector<NodeId> removed,
              std::size_t removed_cum, std::size_t lcc_size) {
    const double n = static_cast<double>(trace.initial_n);
    AttackTrace::Row row;
    row.iteration = trace.rows.size();
    row.removed = std::move(removed);
    row.removed_cum = removed_cum;
    row.f = static_cast<double>(removed_cum) / n;
    row.lcc_size = lcc_size;
    row.lcc_prime = static_cast<double>(lcc_size) / n;
    trace.rows.push_back(std::move(row));
}

}  // namespace

AttackTrace run_recalculated(const Graph& g, CentralityKind kind) {
    require_attackable(g, "run_recalculated");

    AttackTrace trace;
    trace.strategy = {AttackStrategy::Info::Recalculated, kind};
    trace.initial_n = g.node_count();
    push_row(trace, {}, 0, g.node_count());

    Graph current = g;
    std::vector<NodeId> lcc = g.nodes();
    std::size_t removed_cum = 0;
    while (true) {
        const std::vector<NodeId> victims = central_set(current.induced(lcc), kind);
        current = current.remove_nodes(victims);
        removed_cum += victims.size();
        auto [next_lcc, lcc_size] = largest_connected_component(current);
        lcc = std::move(next_lcc);
        push_row(trace, victims, removed_cum, lcc_size);
        if (lcc_size <= kDestroyedSize) break;
    }
    return trace;
}

AttackTrace run_initial(const Graph& g, CentralityKind kind) {
    require_attackable(g, "run_initial");

    AttackTrace trace;
    trace.strategy = {AttackStrategy::Info::Initial, kind};
    trace.initial_n = g.node_count();
    push_row(trace, {}, 0, g.node_count());

    const CentralityTiers tiers = centrality_tiers(g, kind);
    Graph current = g;
    std::size_t removed_cum = 0;
    std::size_t lcc_size = g.node_count();
    for (const auto& tier : tiers.tiers) {
        // Tier members are removed whether or not they still sit in the
        // largest component; the strategy only knows the initial ranking.
        current = current.remove_nodes(tier.nodes);
        removed_cum += tier.nodes.size();
        lcc_size = largest_component_size(current);
        push_row(trace, tier.nodes, removed_cum, lcc_size);
        if (lcc_size <= kDestroyedSize) return trace;
    }
    trace.destructive = lcc_size <= kDestroyedSize;
    return trace;
}

AttackTrace run_attack(const Graph& g, AttackStrategy strategy) {
    return strategy.info == AttackStrategy::Info::Initial
               ? run_initial(g, strategy.kind)
               : run_recalculated(g, strategy.kind);
}

AttackSummary summarize(const AttackTrace& trace) {
    AttackSummary s;
    s.destruction_f = trace.rows.back().f;
    s.iterations = trace.rows.size() - 1;
    double total = 0.0;
    for (const auto& row : trace.rows) total += row.lcc_prime;
    s.robustness_index = total / static_cast<double>(trace.rows.size());
    return s;
}

std::vector<SweepRun> sweep(const GeneratorSpec& spec,
                            const std::vector<AttackStrategy>& strategies,
                            std::size_t runs, std::uint64_t base_seed) {
    if (runs < 1) {
        throw std::invalid_argument("sweep: runs must be at least 1");
    }

    // One task per run: generate, extract the giant, execute every strategy.
    auto run_one = [&](std::size_t r) {
        const std::uint64_t seed = base_seed + r;
        std::vector<SweepRun> out;
        GeneratorSpec run_spec = spec;
        run_spec.seed = seed;
        Graph giant;
        std::string generation_error;
        try {
            giant = extract_giant(generate(run_spec));
        } catch (const std::exception& ex) {
            generation_error = ex.what();
        }
        for (const AttackStrategy& strategy : strategies) {
            SweepRun run;
            run.strategy = strategy;
            run.seed = seed;
            if (!generation_error.empty()) {
                run.error = generation_error;
            } else {
                try {
                    run.trace = run_attack(giant, strategy);
                    run.trace->subject = std::string(model_code(spec.model));
                    run.trace->seed = seed;
                } catch (const std::exception& ex) {
                    run.error = ex.what();
                }
            }
            out.push_back(std::move(run));
        }
        return out;
    };

    std::vector<std::future<std::vector<SweepRun>>> futures;
    futures.reserve(runs);
    for (std::size_t r = 0; r < runs; ++r) {
        futures.push_back(std::async(std::launch::async, run_one, r));
    }
    std::vector<std::vector<SweepRun>> per_run;
    per_run.reserve(runs);
    for (auto& f : futures) per_run.push_back(f.get());

    // Deterministic output order: strategy-major, then seed.
    std::vector<SweepRun> out;
    out.reserve(runs * strategies.size());
    for (std::size_t s = 0; s < strategies.size(); ++s) {
        for (std::size_t r = 0; r < runs; ++r) {
            out.push_back(std::move(per_run[r][s]));
        }
    }
    return out;
}

}  // namespace netvuln
