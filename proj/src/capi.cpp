#include "netvuln.h"

#include <cstdio>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "attack.hpp"
#include "centrality.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "metrics.hpp"
#include "trace_io.hpp"

using namespace netvuln;

struct nv_graph {
    Graph graph;
    ReadReport report;
};

struct nv_trace {
    AttackTrace trace;
};

namespace {

thread_local std::string g_last_error;

nv_status fail(nv_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

nv_status guard(const std::exception& ex) {
    g_last_error = ex.what();
    if (dynamic_cast<const std::invalid_argument*>(&ex)) return NV_ERR_INVALID_ARGUMENT;
    if (dynamic_cast<const std::domain_error*>(&ex)) return NV_ERR_DOMAIN;
    if (dynamic_cast<const ParseError*>(&ex)) return NV_ERR_PARSE;
    if (dynamic_cast<const IoError*>(&ex)) return NV_ERR_IO;
    return NV_ERR_INTERNAL;
}

nv_status spec_from_c(const nv_generator_spec* in, GeneratorSpec* out) {
    if (in == nullptr || in->model == nullptr) {
        return fail(NV_ERR_INVALID_ARGUMENT, "generator spec is null");
    }
    const std::string model = in->model;
    if (model == "er") {
        out->model = ModelKind::ErdosRenyi;
    } else if (model == "ws") {
        out->model = ModelKind::WattsStrogatz;
    } else if (model == "ba") {
        out->model = ModelKind::BarabasiAlbert;
    } else {
        return fail(NV_ERR_INVALID_ARGUMENT, "unknown model '" + model + "'");
    }
    out->n = in->n;
    out->p = in->p;
    out->k = in->k;
    out->beta = in->beta;
    out->m = in->m;
    out->seed = in->seed;
    return NV_OK;
}

nv_status parse_strategies(const char* csv, std::vector<AttackStrategy>* out) {
    if (csv == nullptr || *csv == '\0') {
        return fail(NV_ERR_INVALID_ARGUMENT, "no attack strategies given");
    }
    std::stringstream ss(csv);
    std::string code;
    while (std::getline(ss, code, ',')) {
        const auto strategy = AttackStrategy::from_code(code);
        if (!strategy) {
            return fail(NV_ERR_INVALID_ARGUMENT,
                        "unknown attack strategy '" + code + "'");
        }
        out->push_back(*strategy);
    }
    return NV_OK;
}

nv_status read_graph_impl(std::istream& in, const char* format, nv_graph** out) {
    const auto fmt = format_from_name(format == nullptr ? "" : format);
    if (!fmt) {
        return fail(NV_ERR_INVALID_ARGUMENT,
                    std::string("unknown format '") +
                        (format == nullptr ? "(null)" : format) + "'");
    }
    auto handle = std::make_unique<nv_graph>();
    try {
        handle->graph = read_graph(in, *fmt, &handle->report);
    } catch (const std::exception& ex) {
        return guard(ex);
    }
    *out = handle.release();
    return NV_OK;
}

nv_status collect_traces(nv_trace* const* traces, size_t count,
                         std::vector<AttackTrace>* out) {
    if (traces == nullptr && count > 0) {
        return fail(NV_ERR_INVALID_ARGUMENT, "null trace array");
    }
    out->reserve(count);
    for (size_t i = 0; i < count; ++i) {
        if (traces[i] == nullptr) {
            return fail(NV_ERR_INVALID_ARGUMENT, "null trace in array");
        }
        out->push_back(traces[i]->trace);
    }
    return NV_OK;
}

}  // namespace

extern "C" {

const char* nv_status_name(nv_status status) {
    switch (status) {
        case NV_OK: return "ok";
        case NV_ERR_INVALID_ARGUMENT: return "invalid argument";
        case NV_ERR_DOMAIN: return "domain error";
        case NV_ERR_PARSE: return "parse error";
        case NV_ERR_IO: return "i/o error";
        case NV_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* nv_last_error(void) { return g_last_error.c_str(); }

nv_status nv_graph_from_edges(const nv_node* endpoints, size_t edge_count,
                              size_t n_hint, nv_graph** out) {
    if (out == nullptr || (endpoints == nullptr && edge_count > 0)) {
        return fail(NV_ERR_INVALID_ARGUMENT, "null argument");
    }
    try {
        std::vector<Edge> edges(edge_count);
        for (size_t i = 0; i < edge_count; ++i) {
            edges[i] = {endpoints[2 * i], endpoints[2 * i + 1]};
        }
        auto handle = std::make_unique<nv_graph>();
        BuildCounts counts;
        handle->graph = Graph::from_edges(edges, n_hint, &counts);
        handle->report = {counts.dropped_self_loops, counts.dropped_duplicate_edges};
        *out = handle.release();
        return NV_OK;
    } catch (const std::exception& ex) {
        return guard(ex);
    }
}

nv_status nv_graph_read_file(const char* path, const char* format, nv_graph** out) {
    if (path == nullptr || out == nullptr) {
        return fail(NV_ERR_INVALID_ARGUMENT, "null argument");
    }
    const auto fmt = format_from_name(format == nullptr ? "" : format);
    if (!fmt) {
        return fail(NV_ERR_INVALID_ARGUMENT,
                    std::string("unknown format '") +
                        (format == nullptr ? "(null)" : format) + "'");
    }
    auto handle = std::make_unique<nv_graph>();
    try {
        handle->graph = read_graph_file(path, *fmt, &handle->report);
    } catch (const std::exception& ex) {
        return guard(ex);
    }
    *out = handle.release();
    return NV_OK;
}

nv_status nv_graph_read_string(const char* text, const char* format, nv_graph** out) {
    if (text == nullptr || out == nullptr) {
        return fail(NV_ERR_INVALID_ARGUMENT, "null argument");
    }
    std::istringstream in{std::string(text)};
    return read_graph_impl(in, format, out);
}

void nv_graph_free(nv_graph* g) { delete g; }

size_t nv_graph_node_count(const nv_graph* g) {
    return g == nullptr ? 0 : g->graph.node_count();
}

size_t nv_graph_edge_count(const nv_graph* g) {
    return g == nullptr ? 0 : g->graph.edge_count();
}

int nv_graph_is_connected(const nv_graph* g) {
    return (g != nullptr && is_connected(g->graph)) ? 1 : 0;
}

size_t nv_graph_lcc_size(const nv_graph* g) {
    return g == nullptr ? 0 : largest_component_size(g->graph);
}

size_t nv_graph_dropped_self_loops(const nv_graph* g) {
    return g == nullptr ? 0 : g->report.dropped_self_loops;
}

size_t nv_graph_dropped_duplicate_edges(const nv_graph* g) {
    return g == nullptr ? 0 : g->report.dropped_duplicate_edges;
}

nv_status nv_graph_extract_giant(const nv_graph* g, nv_graph** out) {
    if (g == nullptr || out == nullptr) {
        return fail(NV_ERR_INVALID_ARGUMENT, "null argument");
    }
    try {
        auto handle = std::make_unique<nv_graph>();
        handle->graph = extract_giant(g->graph);
        *out = handle.release();
        return NV_OK;
    } catch (const std::exception& ex) {
        return guard(ex);
    }
}

nv_status nv_graph_write_edgelist(const nv_graph* g, const char* path) {
    if (g == nullptr || path == nullptr) {
        return fail(NV_ERR_INVALID_ARGUMENT, "null argument");
    }
    try {
        write_edge_list_file(g->graph, path);
        return NV_OK;
    } catch (const std::exception& ex) {
        return guard(ex);
    }
}

nv_status nv_generate(const nv_generator_spec* spec, nv_graph** out) {
    if (out == nullptr) return fail(NV_ERR_INVALID_ARGUMENT, "null argument");
    GeneratorSpec parsed;
    const nv_status status = spec_from_c(spec, &parsed);
    if (status != NV_OK) return status;
    try {
        auto handle = std::make_unique<nv_graph>();
        handle->graph = generate(parsed);
        *out = handle.release();
        return NV_OK;
    } catch (const std::exception& ex) {
        return guard(ex);
    }
}

nv_status nv_graph_stats_json(const nv_graph* g, char** out_json) {
    if (g == nullptr || out_json == nullptr) {
        return fail(NV_ERR_INVALID_ARGUMENT, "null argument");
    }
    try {
        const std::string json = stats_json(network_stats(g->graph));
        char* copy = new char[json.size() + 1];
        std::memcpy(copy, json.c_str(), json.size() + 1);
        *out_json = copy;
        return NV_OK;
    } catch (const std::exception& ex) {
        return guard(ex);
    }
}

void nv_string_free(char* s) { delete[] s; }

nv_status nv_attack_run(const nv_graph* g, const char* strategy, const char* label,
                        nv_trace** out) {
    if (g == nullptr || strategy == nullptr || out == nullptr) {
        return fail(NV_ERR_INVALID_ARGUMENT, "null argument");
    }
    const auto parsed = AttackStrategy::from_code(strategy);
    if (!parsed) {
        return fail(NV_ERR_INVALID_ARGUMENT,
                    std::string("unknown attack strategy '") + strategy + "'");
    }
    try {
        auto handle = std::make_unique<nv_trace>();
        handle->trace = run_attack(g->graph, *parsed);
        handle->trace.subject = label == nullptr ? "" : label;
        *out = handle.release();
        return NV_OK;
    } catch (const std::exception& ex) {
        return guard(ex);
    }
}

size_t nv_trace_row_count(const nv_trace* t) {
    return t == nullptr ? 0 : t->trace.rows.size();
}

nv_status nv_trace_get_row(const nv_trace* t, size_t index, nv_trace_row* out) {
    if (t == nullptr || out == nullptr) {
        return fail(NV_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (index >= t->trace.rows.size()) {
        return fail(NV_ERR_INVALID_ARGUMENT, "row index out of range");
    }
    const auto& row = t->trace.rows[index];
    out->iteration = row.iteration;
    out->removed_step = row.removed.size();
    out->removed_cum = row.removed_cum;
    out->f = row.f;
    out->lcc_size = row.lcc_size;
    out->lcc_prime = row.lcc_prime;
    return NV_OK;
}

nv_status nv_trace_get_summary(const nv_trace* t, nv_trace_summary* out) {
    if (t == nullptr || out == nullptr) {
        return fail(NV_ERR_INVALID_ARGUMENT, "null argument");
    }
    const AttackSummary s = summarize(t->trace);
    out->destruction_f = s.destruction_f;
    out->robustness_index = s.robustness_index;
    out->iterations = s.iterations;
    return NV_OK;
}

const char* nv_trace_strategy(const nv_trace* t) {
    thread_local std::string code;
    if (t == nullptr) return "";
    code = t->trace.strategy.code();
    return code.c_str();
}

void nv_trace_free(nv_trace* t) { delete t; }

nv_status nv_sweep(const nv_generator_spec* spec, const char* strategies_csv,
                   size_t runs, nv_trace*** out_traces, size_t* out_count) {
    if (out_traces == nullptr || out_count == nullptr) {
        return fail(NV_ERR_INVALID_ARGUMENT, "null argument");
    }
    GeneratorSpec parsed;
    nv_status status = spec_from_c(spec, &parsed);
    if (status != NV_OK) return status;
    std::vector<AttackStrategy> strategies;
    status = parse_strategies(strategies_csv, &strategies);
    if (status != NV_OK) return status;
    if (runs < 1) return fail(NV_ERR_INVALID_ARGUMENT, "runs must be at least 1");

    try {
        std::vector<SweepRun> result = sweep(parsed, strategies, runs, spec->seed);
        std::vector<std::unique_ptr<nv_trace>> traces;
        for (SweepRun& run : result) {
            if (!run.trace) {
                std::fprintf(stderr, "netvuln: sweep run (%s, seed %llu) failed: %s\n",
                             run.strategy.code().c_str(),
                             static_cast<unsigned long long>(run.seed),
                             run.error.c_str());
                continue;
            }
            auto handle = std::make_unique<nv_trace>();
            handle->trace = std::move(*run.trace);
            traces.push_back(std::move(handle));
        }
        auto** array = new nv_trace*[traces.size()];
        for (size_t i = 0; i < traces.size(); ++i) array[i] = traces[i].release();
        *out_traces = array;
        *out_count = traces.size();
        return NV_OK;
    } catch (const std::exception& ex) {
        return guard(ex);
    }
}

void nv_trace_array_free(nv_trace** traces, size_t count) {
    if (traces == nullptr) return;
    for (size_t i = 0; i < count; ++i) delete traces[i];
    delete[] traces;
}

nv_status nv_traces_write_csv(nv_trace* const* traces, size_t count,
                              const char* path, size_t* rows_out) {
    if (path == nullptr) return fail(NV_ERR_INVALID_ARGUMENT, "null path");
    std::vector<AttackTrace> collected;
    const nv_status status = collect_traces(traces, count, &collected);
    if (status != NV_OK) return status;
    try {
        const size_t rows = write_trace_csv_file(collected, path);
        if (rows_out != nullptr) *rows_out = rows;
        return NV_OK;
    } catch (const std::exception& ex) {
        return guard(ex);
    }
}

nv_status nv_traces_render_svg(nv_trace* const* traces, size_t count,
                               const char* path) {
    if (path == nullptr) return fail(NV_ERR_INVALID_ARGUMENT, "null path");
    std::vector<AttackTrace> collected;
    const nv_status status = collect_traces(traces, count, &collected);
    if (status != NV_OK) return status;
    try {
        render_chart_file(collected, path);
        return NV_OK;
    } catch (const std::exception& ex) {
        return guard(ex);
    }
}

}  // extern "C"
