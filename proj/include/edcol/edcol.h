#ifndef EDCOL_EDCOL_H
#define EDCOL_EDCOL_H

#include <stddef.h>
#include <stdint.h>

#if defined(EDCOL_BUILDING_LIBRARY)
#define EDCOL_API __attribute__((visibility("default")))
#else
#define EDCOL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every function returns EDCOL_OK or an error code; the message of the last
 * failure on the calling thread is available from edcol_last_error(). */
typedef enum edcol_status {
  EDCOL_OK = 0,
  EDCOL_E_PARSE = 1,
  EDCOL_E_INVALID = 2,
  EDCOL_E_RANGE = 3,
  EDCOL_E_IO = 4,
  EDCOL_E_VALIDATION = 5,
  EDCOL_E_BUDGET = 6,
  EDCOL_E_INTERNAL = 7,
  EDCOL_E_NULL = 8
} edcol_status;

typedef struct edcol_graph edcol_graph;
typedef struct edcol_order edcol_order;
typedef struct edcol_coloring edcol_coloring;
typedef struct edcol_decomp edcol_decomp;
typedef struct edcol_report edcol_report;

EDCOL_API const char* edcol_version(void);
EDCOL_API const char* edcol_last_error(void);
/* Line of the last parse error (1-based, 0 = end of input or not a parse error). */
EDCOL_API int edcol_last_error_line(void);

/* Strings and int arrays returned by the library. */
EDCOL_API void edcol_string_free(char* s);
EDCOL_API void edcol_ints_free(int* a);

/* graphs */
EDCOL_API edcol_status edcol_graph_parse(const char* text, edcol_graph** out);
EDCOL_API edcol_status edcol_graph_read(const char* path, edcol_graph** out);
EDCOL_API edcol_status edcol_graph_write(const edcol_graph* g, const char* path);
EDCOL_API edcol_status edcol_graph_format(const edcol_graph* g, char** out);
EDCOL_API void edcol_graph_free(edcol_graph* g);
EDCOL_API int edcol_graph_vertex_count(const edcol_graph* g);
EDCOL_API size_t edcol_graph_edge_count(const edcol_graph* g);
EDCOL_API int edcol_graph_max_degree(const edcol_graph* g);

typedef enum edcol_derived {
  EDCOL_EXACT_DISTANCE = 0,
  EDCOL_EXACT_POWER = 1,
  EDCOL_POWER = 2,
  EDCOL_ODD_UNION_DISTANCE = 3,
  EDCOL_ODD_UNION_PATH = 4
} edcol_derived;

/* p for the odd unions: every odd length (distance mode only). */
#define EDCOL_ALL_ODD (-1)

EDCOL_API edcol_status edcol_derive(const edcol_graph* g, edcol_derived kind, int p, edcol_graph** out);
/* *out = length of a shortest odd cycle, 0 when g is bipartite. */
EDCOL_API edcol_status edcol_odd_girth(const edcol_graph* g, int* out);

/* families: upper-case names (PATH, CYCLE, ..., SUBDIVISION). `base` is
 * read by G5 and SUBDIVISION and may be NULL otherwise. `order` may be
 * NULL; it is set to NULL for families without a prescribed order. */
EDCOL_API edcol_status edcol_generate(const char* family, const int* params, size_t n_params, const edcol_graph* base,
                                      edcol_graph** out, edcol_order** order);
/* path NULL: the bundled data file. */
EDCOL_API edcol_status edcol_load_g4(const char* path, edcol_graph** out);
EDCOL_API edcol_status edcol_validate_g4(const edcol_graph* g, int64_t budget_ms, edcol_report** out);

/* orders */
EDCOL_API edcol_status edcol_order_parse(const char* text, edcol_order** out);
EDCOL_API edcol_status edcol_order_read(const char* path, edcol_order** out);
EDCOL_API edcol_status edcol_order_write(const edcol_order* o, const char* path);
EDCOL_API edcol_status edcol_order_format(const edcol_order* o, char** out);
EDCOL_API void edcol_order_free(edcol_order* o);
EDCOL_API int edcol_order_size(const edcol_order* o);
/* position is 0-based */
EDCOL_API int edcol_order_at(const edcol_order* o, int position);

typedef enum edcol_strategy { EDCOL_DEGENERACY = 0, EDCOL_BFS_ROOT = 1, EDCOL_TD_DFS = 2 } edcol_strategy;
EDCOL_API edcol_status edcol_heuristic_order(const edcol_graph* g, edcol_strategy s, int root, edcol_order** out);

typedef enum edcol_access { EDCOL_WEAK = 0, EDCOL_STRONG = 1, EDCOL_DIST = 2 } edcol_access;
#define EDCOL_INFINITY (-1)

EDCOL_API edcol_status edcol_eval_colnum(const edcol_graph* g, const edcol_order* o, edcol_access a, int radius,
                                         int* out);
/* witness may be NULL. *optimal is 0 when the budget ran out. */
EDCOL_API edcol_status edcol_exact_colnum(const edcol_graph* g, edcol_access a, int radius, int64_t budget_ms,
                                          int* value, int* optimal, edcol_order** witness);
EDCOL_API edcol_status edcol_treedepth(const edcol_graph* g, int64_t budget_ms, int* out);

/* colourings */
typedef enum edcol_method {
  EDCOL_GREEDY = 0,   /* uses access and radius */
  EDCOL_ODD_P = 1,    /* exact distance p, p odd */
  EDCOL_EVEN_P = 2,   /* exact distance p, p even */
  EDCOL_SIGNATURE = 3 /* odd unions up to p, p odd */
} edcol_method;

EDCOL_API edcol_status edcol_color(const edcol_graph* g, const edcol_order* o, edcol_method m, int p,
                                   edcol_access a, int radius, edcol_coloring** out);
EDCOL_API edcol_status edcol_coloring_parse(const char* text, edcol_coloring** out);
EDCOL_API edcol_status edcol_coloring_read(const char* path, edcol_coloring** out);
EDCOL_API edcol_status edcol_coloring_write(const edcol_coloring* c, const char* path);
EDCOL_API edcol_status edcol_coloring_format(const edcol_coloring* c, char** out);
EDCOL_API void edcol_coloring_free(edcol_coloring* c);
EDCOL_API int edcol_coloring_palette_size(const edcol_coloring* c);
EDCOL_API int edcol_coloring_color(const edcol_coloring* c, int v);
/* *proper = 1 or 0; on 0, (*u, *v) is the first monochromatic edge. */
EDCOL_API edcol_status edcol_verify_proper(const edcol_graph* h, const edcol_coloring* c, int* proper, int* u,
                                           int* v);

/* chi / omega. Labels of the G_4 / G_t constructions on h (copied by
 * edcol_derive) add a certified lower bound. witness may be NULL. */
EDCOL_API edcol_status edcol_chromatic_number(const edcol_graph* h, int64_t budget_ms, int* exact, int* lower,
                                              int* upper, edcol_coloring** witness);
/* clique: ascending ids, free with edcol_ints_free; may be NULL. */
EDCOL_API edcol_status edcol_clique_number(const edcol_graph* h, int64_t budget_ms, int* value, int* optimal,
                                           int** clique, size_t* clique_len);

/* decompositions */
EDCOL_API edcol_status edcol_decomp_parse(const char* text, edcol_decomp** out);
EDCOL_API edcol_status edcol_decomp_read(const char* path, edcol_decomp** out);
EDCOL_API edcol_status edcol_decomp_write(const edcol_decomp* d, const char* path);
EDCOL_API edcol_status edcol_decomp_format(const edcol_decomp* d, char** out);
EDCOL_API void edcol_decomp_free(edcol_decomp* d);
EDCOL_API int edcol_decomp_size(const edcol_decomp* d);
EDCOL_API edcol_status edcol_decomp_peel(const edcol_graph* g, int root, edcol_decomp** out);
/* widths: one per part, free with edcol_ints_free; may be NULL. */
EDCOL_API edcol_status edcol_decomp_check(const edcol_graph* g, const edcol_decomp* d, int strict, int* connected,
                                          int* width, int** widths, size_t* n_widths);

typedef struct edcol_flat_violation {
  int part;
  int vertex;
  int k;
  int64_t count;
  int64_t bound;
} edcol_flat_violation;

/* profile: "LINEAR(a,b)" or "f0,f1,...". violation may be NULL. */
EDCOL_API edcol_status edcol_decomp_flat(const edcol_graph* g, const edcol_decomp* d, const char* profile, int k_max,
                                         int* flat, edcol_flat_violation* violation);
EDCOL_API edcol_status edcol_decomp_contract(const edcol_graph* g, const edcol_decomp* d, edcol_graph** out);
EDCOL_API edcol_status edcol_decomp_order(const edcol_graph* g, const edcol_decomp* d, edcol_order** out);

typedef struct edcol_bound_params {
  int64_t k, t, g, f, p, q, col;
} edcol_bound_params;

/* formula: planar-dcol, genus-dcol, treewidth-dcol, flatbound-dcol,
 * minor-free-flat, planar-wcol, signature-count, kierstead-yang. */
EDCOL_API edcol_status edcol_bound(const char* formula, const edcol_bound_params* params, uint64_t* out);

/* suites: PAPER_TABLE, FAMILY_PROPERTIES, COLORING_PROPERTIES,
 * ORDER_SANDWICH, DECOMP_CHECKS. budget_ms applies per check group. */
EDCOL_API edcol_status edcol_run_suite(const char* suite, int64_t budget_ms, uint64_t seed, edcol_report** out);
EDCOL_API edcol_report* edcol_report_new(void);
/* Appends the entries of `from` to `into`. */
EDCOL_API edcol_status edcol_report_merge(edcol_report* into, const edcol_report* from);
typedef enum edcol_format { EDCOL_TSV = 0, EDCOL_JSONL = 1 } edcol_format;
EDCOL_API edcol_status edcol_report_format(const edcol_report* r, edcol_format f, char** out);
EDCOL_API int edcol_report_any_fail(const edcol_report* r);
EDCOL_API size_t edcol_report_size(const edcol_report* r);
EDCOL_API void edcol_report_free(edcol_report* r);

#ifdef __cplusplus
}
#endif

#endif
