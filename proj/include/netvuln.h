/* netvuln — network vulnerability toolkit, C API.
 *
 * The library analyses how complex networks fall apart under center-based
 * node-removal attacks. It exposes a small C89-compatible surface on top of
 * the C++ core: opaque handles, integer status codes, and a thread-local
 * error message retrievable via nv_last_error().
 *
 * Every function that creates an object returns it through an out-parameter
 * and reports NV_OK on success. Objects are freed with their matching
 * nv_*_free function; passing NULL to a free function is a no-op.
 */

#ifndef NETVULN_H
#define NETVULN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NETVULN_API __declspec(dllexport)
#else
#define NETVULN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nv_status {
    NV_OK = 0,
    NV_ERR_INVALID_ARGUMENT = 1, /* bad parameter or node id */
    NV_ERR_DOMAIN = 2,           /* operation undefined for this input */
    NV_ERR_PARSE = 3,            /* malformed input file */
    NV_ERR_IO = 4,               /* unreadable/unwritable file */
    NV_ERR_INTERNAL = 5
} nv_status;

NETVULN_API const char* nv_status_name(nv_status status);

/* Message describing the most recent failure on this thread. */
NETVULN_API const char* nv_last_error(void);

typedef struct nv_graph nv_graph;
typedef struct nv_trace nv_trace;

typedef uint32_t nv_node;

/* ------------------------------------------------------------------ */
/* Graph construction and queries                                      */

/* Builds a simple undirected graph from `edge_count` (a, b) pairs laid out
 * flat in `endpoints` (2 * edge_count entries). Self-loops and duplicates
 * are dropped. `n_hint` declares extra isolated trailing nodes. */
NETVULN_API nv_status nv_graph_from_edges(const nv_node* endpoints,
                                          size_t edge_count, size_t n_hint,
                                          nv_graph** out);

/* Parses a graph file; format is "edgelist", "pajek" or "gml". */
NETVULN_API nv_status nv_graph_read_file(const char* path, const char* format,
                                         nv_graph** out);
NETVULN_API nv_status nv_graph_read_string(const char* text, const char* format,
                                           nv_graph** out);

NETVULN_API void nv_graph_free(nv_graph* g);

NETVULN_API size_t nv_graph_node_count(const nv_graph* g);
NETVULN_API size_t nv_graph_edge_count(const nv_graph* g);
NETVULN_API int nv_graph_is_connected(const nv_graph* g);
NETVULN_API size_t nv_graph_lcc_size(const nv_graph* g);

/* Counts of items dropped while ingesting this graph (0 for generated). */
NETVULN_API size_t nv_graph_dropped_self_loops(const nv_graph* g);
NETVULN_API size_t nv_graph_dropped_duplicate_edges(const nv_graph* g);

/* Largest component as a standalone graph with densely remapped ids. */
NETVULN_API nv_status nv_graph_extract_giant(const nv_graph* g, nv_graph** out);

/* Writes the graph as a label-pair edge list. */
NETVULN_API nv_status nv_graph_write_edgelist(const nv_graph* g, const char* path);

/* ------------------------------------------------------------------ */
/* Generators                                                          */

/* model "er": fields n, p; model "ws": n, k (even), beta; model "ba": n, m.
 * Identical spec fields produce an identical graph on every platform. */
typedef struct nv_generator_spec {
    const char* model;
    size_t n;
    double p;
    size_t k;
    double beta;
    size_t m;
    uint64_t seed;
} nv_generator_spec;

NETVULN_API nv_status nv_generate(const nv_generator_spec* spec, nv_graph** out);

/* ------------------------------------------------------------------ */
/* Statistics                                                          */

/* Returns a flat JSON object (node_count, edge_count, ncc, diameter, radius,
 * connected_pair_count, characteristic_path_length, average_degree,
 * clustering_coefficient). Free with nv_string_free. */
NETVULN_API nv_status nv_graph_stats_json(const nv_graph* g, char** out_json);
NETVULN_API void nv_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Attacks                                                             */

/* Strategy codes: IB IC ID IM RB RC RD RM — initial/recalculated x
 * betweenness / center (eccentricity) / degree / median (remoteness).
 * The graph must be connected with more than 3 nodes; runs end once the
 * largest connected component has at most 3 nodes. `label` names the
 * subject in CSV/SVG output (may be NULL). */
NETVULN_API nv_status nv_attack_run(const nv_graph* g, const char* strategy,
                                    const char* label, nv_trace** out);

typedef struct nv_trace_row {
    size_t iteration;
    size_t removed_step;
    size_t removed_cum;
    double f;          /* cumulative removed fraction of the initial size */
    size_t lcc_size;
    double lcc_prime;  /* lcc_size over the initial size */
} nv_trace_row;

typedef struct nv_trace_summary {
    double destruction_f;    /* f at termination */
    double robustness_index; /* mean lcc_prime over all rows */
    size_t iterations;
} nv_trace_summary;

NETVULN_API size_t nv_trace_row_count(const nv_trace* t);
NETVULN_API nv_status nv_trace_get_row(const nv_trace* t, size_t index,
                                       nv_trace_row* out);
NETVULN_API nv_status nv_trace_get_summary(const nv_trace* t,
                                           nv_trace_summary* out);
NETVULN_API const char* nv_trace_strategy(const nv_trace* t);
NETVULN_API void nv_trace_free(nv_trace* t);

/* Generates `runs` graphs with seeds spec->seed, spec->seed + 1, …, extracts
 * each giant component and runs every strategy in the comma-separated list
 * on it. Returns a strategy-major array of traces; free with
 * nv_trace_array_free. Failed runs are skipped with a note on stderr. */
NETVULN_API nv_status nv_sweep(const nv_generator_spec* spec,
                               const char* strategies_csv, size_t runs,
                               nv_trace*** out_traces, size_t* out_count);
NETVULN_API void nv_trace_array_free(nv_trace** traces, size_t count);

/* ------------------------------------------------------------------ */
/* Serialization                                                       */

/* CSV header: strategy,model_or_dataset,seed,iteration,removed_step,
 * removed_cum,f,lcc_size,lcc_prime. Stores the data-row count in
 * `rows_out` when non-NULL. */
NETVULN_API nv_status nv_traces_write_csv(nv_trace* const* traces, size_t count,
                                          const char* path, size_t* rows_out);

/* Standalone SVG chart of LCC' against f, one step curve per trace. */
NETVULN_API nv_status nv_traces_render_svg(nv_trace* const* traces, size_t count,
                                           const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NETVULN_H */
