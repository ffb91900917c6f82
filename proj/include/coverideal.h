/* C interface to the coverideal library.
 *
 * All functions return a cvi_status; results come back through out
 * parameters. Strings returned through char** are heap-allocated and must
 * be released with cvi_string_free. On failure the thread-local message
 * from cvi_last_error describes the problem.
 */
#ifndef COVERIDEAL_H
#define COVERIDEAL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cvi_status {
    CVI_OK = 0,
    CVI_ERR_DOMAIN = 1, /* invalid input or operation */
    CVI_ERR_BUDGET = 2, /* search or size budget exhausted */
    CVI_ERR_IO = 3,     /* file or parse failure */
} cvi_status;

typedef struct cvi_graph cvi_graph;
typedef struct cvi_ideal cvi_ideal;

const char* cvi_version(void);
/* Message for the most recent failure on this thread; never NULL. */
const char* cvi_last_error(void);
void cvi_string_free(char* s);

/* ---- graphs ---- */
/* {"vertices": [...], "edges": [["a","b"], ...]} */
cvi_status cvi_graph_from_json(const char* json_text, cvi_graph** out);
/* Same, or a family spec {"family": ..., ...}; see the library docs. */
cvi_status cvi_graph_from_spec(const char* spec_json, cvi_graph** out);
/* One edge per line; single-label lines declare isolated vertices. */
cvi_status cvi_graph_from_edge_list(const char* text, cvi_graph** out);
cvi_status cvi_graph_to_json(const cvi_graph* g, char** out_json);
cvi_status cvi_graph_to_edge_list(const cvi_graph* g, char** out_text);
/* Summary JSON: counts, degrees, components, and small-graph invariants. */
cvi_status cvi_graph_info(const cvi_graph* g, char** out_json);
/* Companion graph on k layers per vertex. */
cvi_status cvi_graph_companion(const cvi_graph* g, int k, cvi_graph** out);
void cvi_graph_free(cvi_graph* g);

/* ---- monomial ideals ---- */
/* {"ring": [...], "generators": [[e1,...,en], ...]} */
cvi_status cvi_ideal_from_json(const char* json_text, cvi_ideal** out);
cvi_status cvi_ideal_to_json(const cvi_ideal* a, char** out_json);
/* Human-readable "(x1*x2, ...)" rendering. */
cvi_status cvi_ideal_render(const cvi_ideal* a, char** out_text);
cvi_status cvi_cover_ideal(const cvi_graph* g, cvi_ideal** out);
cvi_status cvi_edge_ideal(const cvi_graph* g, cvi_ideal** out);
/* k-th symbolic power of the cover ideal, k >= 1. */
cvi_status cvi_symbolic_power(const cvi_graph* g, int k, cvi_ideal** out);
cvi_status cvi_ideal_power(const cvi_ideal* a, int k, cvi_ideal** out);
cvi_status cvi_ideal_intersect(const cvi_ideal* a, const cvi_ideal* b, cvi_ideal** out);
cvi_status cvi_ideal_polarize(const cvi_ideal* a, cvi_ideal** out);
/* Alexander dual of a squarefree ideal. */
cvi_status cvi_ideal_dual(const cvi_ideal* a, cvi_ideal** out);
void cvi_ideal_free(cvi_ideal* a);

/* ---- homological invariants ---- */
/* Betti table over F_p as {"field": p, "entries": [[i, j, beta], ...]}. */
cvi_status cvi_betti(const cvi_ideal* a, int p, unsigned threads, char** out_json);
/* Triangular text rendering of a Betti table JSON document. */
cvi_status cvi_betti_render(const char* betti_json, char** out_text);
/* Castelnuovo-Mumford regularity of the ideal. */
cvi_status cvi_regularity(const cvi_ideal* a, int p, unsigned threads, long long* out);

/* Tri-state predicate check. pred is one of "lq" (linear quotients of the
 * ideal), "vd" (vertex decomposability of the graph), "cwl" (componentwise
 * linearity of the ideal), "linres" (linear resolution of the ideal),
 * "seqcm" (sequential Cohen-Macaulay proxy of the graph). Pass the graph
 * or ideal the predicate needs; the other argument may be NULL. The JSON
 * report carries the outcome or boolean value plus any certificate. A
 * budget-exceeded search returns CVI_OK with outcome "budget-exceeded". */
cvi_status cvi_check(const char* pred, const cvi_graph* g, const cvi_ideal* a, int p,
                     unsigned long long budget_nodes, double budget_secs, unsigned threads,
                     char** out_json);

/* Re-checks a serialized certificate (JSON from cvi_check) against the
 * subject embedded in it. */
cvi_status cvi_validate_certificate(const char* cert_json, int* out_valid);

/* Runs one named verification suite, or all of them when suite is "all".
 * data_dir may be NULL or the directory holding the shipped instance
 * files. Returns a JSON array of suite reports; a failed check is reported
 * in the JSON, not as an error status. */
cvi_status cvi_verify(const char* suite, unsigned long long budget_nodes, double budget_secs,
                      unsigned threads, const char* data_dir, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
