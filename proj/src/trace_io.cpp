#include "trace_io.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "graph_io.hpp"

namespace netvuln {

namespace {

std::string fixed6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

}  // namespace

std::size_t write_trace_csv(std::span<const AttackTrace> traces, std::ostream& out) {
    out << "strategy,model_or_dataset,seed,iteration,removed_step,removed_cum,"
           "f,lcc_size,lcc_prime\n";
    std::size_t rows = 0;
    for (const AttackTrace& trace : traces) {
        const std::string seed =
            trace.seed ? std::to_string(*trace.seed) : std::string("-");
        for (const auto& row : trace.rows) {
            out << trace.strategy.code() << ',' << trace.subject << ',' << seed << ','
                << row.iteration << ',' << row.removed.size() << ',' << row.removed_cum
                << ',' << fixed6(row.f) << ',' << row.lcc_size << ','
                << fixed6(row.lcc_prime) << '\n';
            ++rows;
        }
    }
    if (!out) throw IoError("trace CSV write failed");
    return rows;
}

std::size_t write_trace_csv_file(std::span<const AttackTrace> traces,
                                 const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return write_trace_csv(traces, out);
}

namespace {

constexpr std::array<std::string_view, 8> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
    "#9467bd", "#8c564b", "#e377c2", "#17becf",
};

constexpr double kWidth = 760.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 660.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 460.0;

double sx(double f) { return kLeft + f * (kRight - kLeft); }
double sy(double p) { return kBottom - p * (kBottom - kTop); }

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

void render_chart(std::span<const AttackTrace> traces, std::ostream& out) {
    if (traces.empty()) {
        throw std::invalid_argument("render_chart: need at least one trace");
    }

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
        << kHeight << "\">\n";
    out << "  <rect width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";

    // Axes with 0.2-spaced ticks on both unit ranges.
    out << "  <g stroke=\"black\" stroke-width=\"1\">\n";
    out << "    <line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(kBottom)
        << "\" x2=\"" << coord(kRight) << "\" y2=\"" << coord(kBottom) << "\"/>\n";
    out << "    <line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(kBottom)
        << "\" x2=\"" << coord(kLeft) << "\" y2=\"" << coord(kTop) << "\"/>\n";
    out << "  </g>\n";
    out << "  <g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    for (int i = 0; i <= 5; ++i) {
        const double v = i * 0.2;
        char label[8];
        std::snprintf(label, sizeof(label), "%.1f", v);
        out << "    <line x1=\"" << coord(sx(v)) << "\" y1=\"" << coord(kBottom)
            << "\" x2=\"" << coord(sx(v)) << "\" y2=\"" << coord(kBottom + 5)
            << "\" stroke=\"black\"/>\n";
        out << "    <text x=\"" << coord(sx(v)) << "\" y=\"" << coord(kBottom + 20)
            << "\" text-anchor=\"middle\">" << label << "</text>\n";
        out << "    <line x1=\"" << coord(kLeft - 5) << "\" y1=\"" << coord(sy(v))
            << "\" x2=\"" << coord(kLeft) << "\" y2=\"" << coord(sy(v))
            << "\" stroke=\"black\"/>\n";
        out << "    <text x=\"" << coord(kLeft - 10) << "\" y=\"" << coord(sy(v) + 4)
            << "\" text-anchor=\"end\">" << label << "</text>\n";
    }
    out << "    <text x=\"" << coord((kLeft + kRight) / 2) << "\" y=\""
        << coord(kBottom + 40) << "\" text-anchor=\"middle\">"
        << "fraction of nodes removed (f)</text>\n";
    out << "    <text x=\"18\" y=\"" << coord((kTop + kBottom) / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << coord((kTop + kBottom) / 2) << ")\">LCC&apos;</text>\n";
    out << "  </g>\n";

    // Step curves; the value holds until the next removal completes.
    for (const AttackTrace& trace : traces) {
        const std::size_t color = strategy_index(trace.strategy) % kPalette.size();
        out << "  <polyline fill=\"none\" stroke=\"" << kPalette[color]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < trace.rows.size(); ++i) {
            const auto& row = trace.rows[i];
            if (i > 0) {
                out << ' ' << coord(sx(row.f)) << ','
                    << coord(sy(trace.rows[i - 1].lcc_prime)) << ' ';
            }
            out << coord(sx(row.f)) << ',' << coord(sy(row.lcc_prime));
        }
        out << "\"/>\n";
    }

    // Legend: one entry per strategy present, canonical order.
    std::array<bool, 8> present{};
    for (const AttackTrace& trace : traces) {
        present[strategy_index(trace.strategy) % present.size()] = true;
    }
    out << "  <g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    double y = kTop + 10;
    for (std::size_t i = 0; i < all_strategies().size(); ++i) {
        if (!present[i]) continue;
        out << "    <line x1=\"" << coord(kRight + 14) << "\" y1=\"" << coord(y - 4)
            << "\" x2=\"" << coord(kRight + 38) << "\" y2=\"" << coord(y - 4)
            << "\" stroke=\"" << kPalette[i] << "\" stroke-width=\"2\"/>\n";
        out << "    <text x=\"" << coord(kRight + 44) << "\" y=\"" << coord(y)
            << "\">" << all_strategies()[i].code() << "</text>\n";
        y += 18;
    }
    out << "  </g>\n";
    out << "</svg>\n";
    if (!out) throw IoError("chart write failed");
}

void render_chart_file(std::span<const AttackTrace> traces, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    render_chart(traces, out);
}

std::string stats_json(const NetworkStats& stats) {
    nlohmann::ordered_json j;
    j["node_count"] = stats.node_count;
    j["edge_count"] = stats.edge_count;
    j["ncc"] = stats.ncc;
    j["diameter"] = stats.diameter;
    j["radius"] = stats.radius;
    j["connected_pair_count"] = stats.connected_pair_count;
    j["characteristic_path_length"] = stats.characteristic_path_length;
    j["average_degree"] = stats.average_degree;
    j["clustering_coefficient"] = stats.clustering_coefficient;
    return j.dump(2);
}

}  // namespace netvuln
