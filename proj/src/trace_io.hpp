#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "attack.hpp"
#include "metrics.hpp"

namespace netvuln {

/// CSV schema: one header line, then one row per trace row in trace order:
///   strategy,model_or_dataset,seed,iteration,removed_step,removed_cum,f,lcc_size,lcc_prime
/// Reals are fixed 6-decimal with '.' separators; seed prints '-' when the
/// trace has none. Returns the number of data rows written.
std::size_t write_trace_csv(std::span<const AttackTrace> traces, std::ostream& out);
std::size_t write_trace_csv_file(std::span<const AttackTrace> traces,
                                 const std::string& path);

/// Standalone SVG chart of LCC' against f: unit axes with 0.2 ticks, one
/// step-polyline per trace, colors and legend fixed by the canonical
/// strategy order. Requires at least one trace.
void render_chart(std::span<const AttackTrace> traces, std::ostream& out);
void render_chart_file(std::span<const AttackTrace> traces, const std::string& path);

/// Flat JSON object with the NetworkStats fields, in declaration order.
std::string stats_json(const NetworkStats& stats);

}  // namespace netvuln
