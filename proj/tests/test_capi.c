/* Exercises the public C API through the shared library only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "edcol/edcol.h"

static int failures = 0;

#define CHECK(cond)                                              \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: CHECK(%s)\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                \
    }                                                            \
  } while (0)

#define OK(call) CHECK((call) == EDCOL_OK)

static void test_errors(void) {
  edcol_graph* g = NULL;
  CHECK(edcol_graph_parse("p edge 3 1\ne 1 9\n", &g) == EDCOL_E_PARSE);
  CHECK(g == NULL);
  CHECK(edcol_last_error_line() == 2);
  CHECK(strlen(edcol_last_error()) > 0);
  CHECK(edcol_graph_parse(NULL, &g) == EDCOL_E_NULL);
  CHECK(edcol_graph_read("/nonexistent/x.gr", &g) == EDCOL_E_IO);

  int params[1] = {0};
  edcol_graph* h = NULL;
  CHECK(edcol_generate("NOPE", params, 1, NULL, &h, NULL) == EDCOL_E_INVALID);

  uint64_t v = 0;
  edcol_bound_params bp = {0};
  CHECK(edcol_bound("planar-dcol", &bp, &v) == EDCOL_E_INVALID);
}

static void test_graph_roundtrip(void) {
  edcol_graph* g = NULL;
  OK(edcol_graph_parse("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n", &g));
  CHECK(edcol_graph_vertex_count(g) == 4);
  CHECK(edcol_graph_edge_count(g) == 3);
  CHECK(edcol_graph_max_degree(g) == 2);

  char* text = NULL;
  OK(edcol_graph_format(g, &text));
  edcol_graph* back = NULL;
  OK(edcol_graph_parse(text, &back));
  CHECK(edcol_graph_edge_count(back) == 3);
  edcol_string_free(text);

  edcol_graph* d3 = NULL;
  OK(edcol_derive(g, EDCOL_EXACT_DISTANCE, 3, &d3));
  CHECK(edcol_graph_edge_count(d3) == 1);

  int girth = -1;
  OK(edcol_odd_girth(g, &girth));
  CHECK(girth == 0);

  edcol_graph_free(d3);
  edcol_graph_free(back);
  edcol_graph_free(g);
}

static void test_g4_chi(void) {
  edcol_graph* g4 = NULL;
  OK(edcol_load_g4(NULL, &g4));
  edcol_graph* h = NULL;
  OK(edcol_derive(g4, EDCOL_EXACT_DISTANCE, 3, &h));

  int exact = 0, lower = 0, upper = 0;
  edcol_coloring* w = NULL;
  OK(edcol_chromatic_number(h, 60000, &exact, &lower, &upper, &w));
  CHECK(exact == 1);
  CHECK(upper == 5);
  CHECK(edcol_coloring_palette_size(w) == 5);
  int proper = 0, u = 0, v = 0;
  OK(edcol_verify_proper(h, w, &proper, &u, &v));
  CHECK(proper == 1);

  edcol_report* r = NULL;
  OK(edcol_validate_g4(g4, 60000, &r));
  CHECK(edcol_report_any_fail(r) == 0);
  CHECK(edcol_report_size(r) > 0);

  edcol_report_free(r);
  edcol_coloring_free(w);
  edcol_graph_free(h);
  edcol_graph_free(g4);
}

static void test_orders_and_colnum(void) {
  int params[2] = {4, 3};
  edcol_graph* g = NULL;
  edcol_order* o = NULL;
  OK(edcol_generate("SNP", params, 2, NULL, &g, &o));
  CHECK(o != NULL);
  CHECK(edcol_order_size(o) == edcol_graph_vertex_count(g));
  CHECK(edcol_order_at(o, 0) == 1);

  int wcol = 0;
  OK(edcol_eval_colnum(g, o, EDCOL_WEAK, 2, &wcol));
  CHECK(wcol <= 4);

  edcol_coloring* c = NULL;
  OK(edcol_color(g, o, EDCOL_ODD_P, 3, EDCOL_WEAK, 0, &c));
  edcol_graph* h = NULL;
  OK(edcol_derive(g, EDCOL_EXACT_DISTANCE, 3, &h));
  int proper = 0, u = 0, v = 0;
  OK(edcol_verify_proper(h, c, &proper, &u, &v));
  CHECK(proper == 1);
  CHECK(edcol_color(g, o, EDCOL_ODD_P, 2, EDCOL_WEAK, 0, &c) == EDCOL_E_INVALID);

  edcol_graph* path = NULL;
  int n = 6;
  OK(edcol_generate("PATH", &n, 1, NULL, &path, NULL));
  int value = 0, optimal = 0;
  edcol_order* witness = NULL;
  OK(edcol_exact_colnum(path, EDCOL_WEAK, EDCOL_INFINITY, 0, &value, &optimal, &witness));
  CHECK(value == 3);
  CHECK(optimal == 1);
  int td = 0;
  OK(edcol_treedepth(path, 0, &td));
  CHECK(td == 3);

  edcol_order* deg = NULL;
  OK(edcol_heuristic_order(path, EDCOL_DEGENERACY, 1, &deg));
  CHECK(edcol_order_size(deg) == 6);

  edcol_order_free(deg);
  edcol_order_free(witness);
  edcol_graph_free(path);
  edcol_graph_free(h);
  edcol_coloring_free(c);
  edcol_order_free(o);
  edcol_graph_free(g);
}

static void test_omega(void) {
  int n = 5;
  edcol_graph* k5 = NULL;
  OK(edcol_generate("COMPLETE", &n, 1, NULL, &k5, NULL));
  int value = 0, optimal = 0;
  int* clique = NULL;
  size_t len = 0;
  OK(edcol_clique_number(k5, 0, &value, &optimal, &clique, &len));
  CHECK(value == 5 && optimal == 1 && len == 5);
  CHECK(clique[0] == 1 && clique[4] == 5);
  edcol_ints_free(clique);
  edcol_graph_free(k5);
}

static void test_decomp(void) {
  int n = 10;
  edcol_graph* c = NULL;
  OK(edcol_generate("CYCLE", &n, 1, NULL, &c, NULL));
  edcol_decomp* d = NULL;
  OK(edcol_decomp_peel(c, 1, &d));
  CHECK(edcol_decomp_size(d) >= 1);

  int connected = 0, width = -1;
  int* widths = NULL;
  size_t nw = 0;
  OK(edcol_decomp_check(c, d, 0, &connected, &width, &widths, &nw));
  CHECK(connected == 1);
  CHECK(width <= 2);
  CHECK((int)nw == edcol_decomp_size(d));
  edcol_ints_free(widths);

  int flat = 0;
  edcol_flat_violation viol;
  OK(edcol_decomp_flat(c, d, "LINEAR(2,1)", 5, &flat, &viol));
  CHECK(flat == 1);
  CHECK(edcol_decomp_flat(c, d, "LINEAR(", 5, &flat, NULL) == EDCOL_E_INVALID);

  edcol_graph* contracted = NULL;
  OK(edcol_decomp_contract(c, d, &contracted));
  CHECK(edcol_graph_vertex_count(contracted) == edcol_decomp_size(d));
  edcol_order* o = NULL;
  OK(edcol_decomp_order(c, d, &o));
  CHECK(edcol_order_size(o) == 10);

  edcol_decomp* bad = NULL;
  CHECK(edcol_decomp_parse("h 1 1\n", &bad) == EDCOL_E_PARSE);

  edcol_order_free(o);
  edcol_graph_free(contracted);
  edcol_decomp_free(d);
  edcol_graph_free(c);
}

static void test_bounds_and_reports(void) {
  edcol_bound_params bp = {0};
  bp.k = 5;
  uint64_t v = 0;
  OK(edcol_bound("planar-dcol", &bp, &v));
  CHECK(v == 143);

  edcol_report* r = NULL;
  OK(edcol_run_suite("PAPER_TABLE", 600000, 20170131u, &r));
  CHECK(edcol_report_any_fail(r) == 0);
  char* tsv = NULL;
  OK(edcol_report_format(r, EDCOL_TSV, &tsv));
  CHECK(strncmp(tsv, "name\texpected\tcomputed\tstatus\n", 30) == 0);
  CHECK(strstr(tsv, "chi_g4_d3\t5\t5\tPASS") != NULL);
  CHECK(strstr(tsv, "bound_planar_p3\t143\t143\tPASS") != NULL);

  edcol_report* again = NULL;
  OK(edcol_run_suite("PAPER_TABLE", 600000, 20170131u, &again));
  char* tsv2 = NULL;
  OK(edcol_report_format(again, EDCOL_TSV, &tsv2));
  CHECK(strcmp(tsv, tsv2) == 0);

  edcol_report* merged = edcol_report_new();
  OK(edcol_report_merge(merged, r));
  OK(edcol_report_merge(merged, again));
  CHECK(edcol_report_size(merged) == 2 * edcol_report_size(r));
  char* jsonl = NULL;
  OK(edcol_report_format(merged, EDCOL_JSONL, &jsonl));
  CHECK(jsonl[0] == '{');

  edcol_report* none = NULL;
  CHECK(edcol_run_suite("NOPE", 0, 1, &none) == EDCOL_E_INVALID);

  edcol_string_free(jsonl);
  edcol_string_free(tsv2);
  edcol_string_free(tsv);
  edcol_report_free(merged);
  edcol_report_free(again);
  edcol_report_free(r);
}

int main(void) {
  CHECK(edcol_version() != NULL);
  test_errors();
  test_graph_roundtrip();
  test_g4_chi();
  test_orders_and_colnum();
  test_omega();
  test_decomp();
  test_bounds_and_reports();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("capi: all checks passed\n");
  return 0;
}
