// netvuln command-line driver. Talks to the library strictly through the
// public C API so the binary doubles as an integration check of that surface.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netvuln.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;  // parse/validation failures
constexpr int kExitIo = 2;     // filesystem failures

int exit_code_for(nv_status status) {
    switch (status) {
        case NV_OK: return kExitOk;
        case NV_ERR_IO: return kExitIo;
        default: return kExitUsage;
    }
}

int report(nv_status status) {
    std::fprintf(stderr, "netvuln: %s: %s\n", nv_status_name(status), nv_last_error());
    return exit_code_for(status);
}

std::uint64_t default_seed() {
    const char* env = std::getenv("NETVULN_SEED");
    if (env == nullptr || *env == '\0') return 0;
    return std::strtoull(env, nullptr, 10);
}

struct GraphHandle {
    nv_graph* g = nullptr;
    ~GraphHandle() { nv_graph_free(g); }
};

struct TraceList {
    std::vector<nv_trace*> traces;
    ~TraceList() {
        for (nv_trace* t : traces) nv_trace_free(t);
    }
};

void warn_dropped(const nv_graph* g) {
    const size_t loops = nv_graph_dropped_self_loops(g);
    const size_t dups = nv_graph_dropped_duplicate_edges(g);
    if (loops > 0 || dups > 0) {
        std::fprintf(stderr,
                     "netvuln: dropped %zu self-loop(s) and %zu duplicate edge(s)\n",
                     loops, dups);
    }
}

int load_input(const std::string& path, const std::string& format, bool giant,
               bool require_connected, GraphHandle* out) {
    GraphHandle raw;
    nv_status status = nv_graph_read_file(path.c_str(), format.c_str(), &raw.g);
    if (status != NV_OK) {
        // A missing or malformed input is an argument problem, not an I/O
        // failure of ours: exit 1 either way.
        std::fprintf(stderr, "netvuln: %s: %s\n", nv_status_name(status),
                     nv_last_error());
        return kExitUsage;
    }
    warn_dropped(raw.g);

    if (giant) {
        status = nv_graph_extract_giant(raw.g, &out->g);
        if (status != NV_OK) return report(status);
        const size_t kept = nv_graph_node_count(out->g);
        const size_t total = nv_graph_node_count(raw.g);
        if (kept < total) {
            std::fprintf(stderr, "netvuln: giant component keeps %zu of %zu nodes\n",
                         kept, total);
        }
        return kExitOk;
    }
    if (require_connected && !nv_graph_is_connected(raw.g)) {
        std::fprintf(stderr,
                     "netvuln: input is disconnected (largest component %zu of %zu "
                     "nodes); pass --giant to attack the giant component\n",
                     nv_graph_lcc_size(raw.g), nv_graph_node_count(raw.g));
        return kExitUsage;
    }
    out->g = raw.g;
    raw.g = nullptr;
    return kExitOk;
}

std::string subject_label(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"center-based node-removal attacks on complex networks"};
    app.require_subcommand(1);

    // --- generate ---------------------------------------------------
    auto* gen = app.add_subcommand("generate", "write a synthetic network as an edge list");
    std::string gen_model;
    std::size_t gen_n = 500;
    double gen_p = -1.0, gen_avg_degree = -1.0, gen_beta = 0.1;
    std::size_t gen_k = 0, gen_m = 0;
    std::uint64_t gen_seed = default_seed();
    std::string gen_out;
    gen->add_option("--model", gen_model, "er, ws or ba")->required();
    gen->add_option("--n", gen_n, "node count")->required();
    gen->add_option("--p", gen_p, "er: edge probability");
    gen->add_option("--avg-degree", gen_avg_degree, "er: target mean degree (sets p)");
    gen->add_option("--k", gen_k, "ws: even lattice degree");
    gen->add_option("--beta", gen_beta, "ws: rewiring probability");
    gen->add_option("--m", gen_m, "ba: edges per new node");
    gen->add_option("--seed", gen_seed, "PRNG seed (default $NETVULN_SEED or 0)");
    gen->add_option("--out", gen_out, "output edge-list path")->required();

    // --- stats ------------------------------------------------------
    auto* stats = app.add_subcommand("stats", "print network statistics as JSON");
    std::string stats_in, stats_format;
    bool stats_giant = false;
    stats->add_option("--in", stats_in, "input file")->required();
    stats->add_option("--format", stats_format, "edgelist, pajek or gml")->required();
    stats->add_flag("--giant", stats_giant, "analyse the giant component only");

    // --- attack -----------------------------------------------------
    auto* attack = app.add_subcommand("attack", "run attack strategies on a network file");
    std::string atk_in, atk_format, atk_strategies, atk_csv, atk_svg;
    bool atk_giant = false;
    attack->add_option("--in", atk_in, "input file")->required();
    attack->add_option("--format", atk_format, "edgelist, pajek or gml")->required();
    attack->add_option("--strategy", atk_strategies,
                       "comma-separated codes from IB,IC,ID,IM,RB,RC,RD,RM")->required();
    attack->add_flag("--giant", atk_giant, "attack the giant component");
    attack->add_option("--csv", atk_csv, "trace CSV output path")->required();
    attack->add_option("--svg", atk_svg, "optional chart output path");

    // --- sweep ------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "attack a batch of generated networks");
    std::string swp_model, swp_strategies, swp_csv, swp_svg;
    std::size_t swp_n = 500, swp_k = 0, swp_m = 0, swp_runs = 10;
    double swp_p = -1.0, swp_avg_degree = -1.0, swp_beta = 0.1;
    std::uint64_t swp_seed = default_seed();
    sweep->add_option("--model", swp_model, "er, ws or ba")->required();
    sweep->add_option("--n", swp_n, "node count");
    sweep->add_option("--p", swp_p, "er: edge probability");
    sweep->add_option("--avg-degree", swp_avg_degree, "er: target mean degree (sets p)");
    sweep->add_option("--k", swp_k, "ws: even lattice degree");
    sweep->add_option("--beta", swp_beta, "ws: rewiring probability");
    sweep->add_option("--m", swp_m, "ba: edges per new node");
    sweep->add_option("--runs", swp_runs, "number of seeds");
    sweep->add_option("--seed", swp_seed, "base seed (default $NETVULN_SEED or 0)");
    sweep->add_option("--strategy", swp_strategies,
                      "comma-separated strategy codes")->required();
    sweep->add_option("--csv", swp_csv, "trace CSV output path")->required();
    sweep->add_option("--svg", swp_svg, "optional chart output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    auto fill_spec = [](nv_generator_spec* spec, const std::string& model,
                        std::size_t n, double p, double avg_degree, std::size_t k,
                        double beta, std::size_t m, std::uint64_t seed) -> bool {
        *spec = {};
        spec->model = model.c_str();
        spec->n = n;
        spec->k = k;
        spec->beta = beta;
        spec->m = m;
        spec->seed = seed;
        if (model == "er") {
            if (p < 0.0 && avg_degree < 0.0) {
                std::fprintf(stderr, "netvuln: er needs --p or --avg-degree\n");
                return false;
            }
            spec->p = p >= 0.0 ? p : avg_degree / static_cast<double>(n - 1);
        }
        return true;
    };

    if (gen->parsed()) {
        nv_generator_spec spec;
        if (!fill_spec(&spec, gen_model, gen_n, gen_p, gen_avg_degree, gen_k,
                       gen_beta, gen_m, gen_seed)) {
            return kExitUsage;
        }
        GraphHandle g;
        nv_status status = nv_generate(&spec, &g.g);
        if (status != NV_OK) return report(status);
        status = nv_graph_write_edgelist(g.g, gen_out.c_str());
        if (status != NV_OK) return report(status);
        std::fprintf(stderr, "netvuln: wrote %zu nodes, %zu edges to %s\n",
                     nv_graph_node_count(g.g), nv_graph_edge_count(g.g),
                     gen_out.c_str());
        return kExitOk;
    }

    if (stats->parsed()) {
        GraphHandle g;
        const int rc = load_input(stats_in, stats_format, stats_giant, false, &g);
        if (rc != kExitOk) return rc;
        char* json = nullptr;
        const nv_status status = nv_graph_stats_json(g.g, &json);
        if (status != NV_OK) return report(status);
        std::printf("%s\n", json);
        nv_string_free(json);
        return kExitOk;
    }

    if (attack->parsed()) {
        GraphHandle g;
        const int rc = load_input(atk_in, atk_format, atk_giant, true, &g);
        if (rc != kExitOk) return rc;

        const std::string label = subject_label(atk_in);
        TraceList traces;
        std::string code;
        std::stringstream codes(atk_strategies);
        while (std::getline(codes, code, ',')) {
            nv_trace* trace = nullptr;
            const nv_status status =
                nv_attack_run(g.g, code.c_str(), label.c_str(), &trace);
            if (status != NV_OK) return report(status);
            traces.traces.push_back(trace);

            nv_trace_summary summary;
            nv_trace_get_summary(trace, &summary);
            std::fprintf(stderr,
                         "netvuln: %s destroyed %s at f=%.4f (%zu iterations)\n",
                         code.c_str(), label.c_str(), summary.destruction_f,
                         summary.iterations);
        }

        size_t rows = 0;
        nv_status status = nv_traces_write_csv(traces.traces.data(),
                                               traces.traces.size(),
                                               atk_csv.c_str(), &rows);
        if (status != NV_OK) return report(status);
        if (!atk_svg.empty()) {
            status = nv_traces_render_svg(traces.traces.data(), traces.traces.size(),
                                          atk_svg.c_str());
            if (status != NV_OK) return report(status);
        }
        return kExitOk;
    }

    if (sweep->parsed()) {
        nv_generator_spec spec;
        if (!fill_spec(&spec, swp_model, swp_n, swp_p, swp_avg_degree, swp_k,
                       swp_beta, swp_m, swp_seed)) {
            return kExitUsage;
        }
        nv_trace** traces = nullptr;
        size_t count = 0;
        nv_status status =
            nv_sweep(&spec, swp_strategies.c_str(), swp_runs, &traces, &count);
        if (status != NV_OK) return report(status);

        size_t rows = 0;
        status = nv_traces_write_csv(traces, count, swp_csv.c_str(), &rows);
        if (status == NV_OK && !swp_svg.empty()) {
            status = nv_traces_render_svg(traces, count, swp_svg.c_str());
        }
        nv_trace_array_free(traces, count);
        if (status != NV_OK) return report(status);
        std::fprintf(stderr, "netvuln: wrote %zu trace rows (%zu runs) to %s\n",
                     rows, count, swp_csv.c_str());
        return kExitOk;
    }

    return kExitUsage;
}
