#include "edcol/edcol.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "edcol/chi.hpp"
#include "edcol/coloring.hpp"
#include "edcol/decomp.hpp"
#include "edcol/error.hpp"
#include "edcol/families.hpp"
#include "edcol/graph.hpp"
#include "edcol/orderings.hpp"
#include "edcol/report.hpp"
#include "edcol/suites.hpp"

struct edcol_graph {
  edcol::Graph g;
};
struct edcol_order {
  edcol::LinearOrder o;
};
struct edcol_coloring {
  edcol::Coloring c;
};
struct edcol_decomp {
  edcol::Decomposition d;
};
struct edcol_report {
  edcol::Report r;
};

namespace {

thread_local std::string last_error;
thread_local int last_line = 0;

edcol_status fail(edcol_status s, const std::string& what, int line = 0) {
  last_error = what;
  last_line = line;
  return s;
}

edcol_status from_code(edcol::ErrorCode c) {
  switch (c) {
    case edcol::ErrorCode::Parse: return EDCOL_E_PARSE;
    case edcol::ErrorCode::InvalidArgument: return EDCOL_E_INVALID;
    case edcol::ErrorCode::OutOfRange: return EDCOL_E_RANGE;
    case edcol::ErrorCode::Io: return EDCOL_E_IO;
    case edcol::ErrorCode::Validation: return EDCOL_E_VALIDATION;
    case edcol::ErrorCode::Budget: return EDCOL_E_BUDGET;
    case edcol::ErrorCode::Internal: return EDCOL_E_INTERNAL;
  }
  return EDCOL_E_INTERNAL;
}

template <typename F>
edcol_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    last_line = 0;
    return EDCOL_OK;
  } catch (const edcol::ParseError& e) {
    return fail(EDCOL_E_PARSE, e.what(), e.line());
  } catch (const edcol::Error& e) {
    return fail(from_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(EDCOL_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(EDCOL_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int* dup(const std::vector<int>& v) {
  int* out = static_cast<int*>(std::malloc(std::max<std::size_t>(v.size(), 1) * sizeof(int)));
  if (!out) throw std::bad_alloc();
  if (!v.empty()) std::memcpy(out, v.data(), v.size() * sizeof(int));
  return out;
}

edcol::Access access_of(edcol_access a) {
  switch (a) {
    case EDCOL_WEAK: return edcol::Access::Weak;
    case EDCOL_STRONG: return edcol::Access::Strong;
    case EDCOL_DIST: return edcol::Access::Dist;
  }
  throw edcol::Error(edcol::ErrorCode::InvalidArgument, "unknown access kind");
}

#define EDCOL_REQUIRE(...)                                                    \
  do {                                                                        \
    const void* ptrs_[] = {__VA_ARGS__};                                      \
    for (const void* p_ : ptrs_)                                              \
      if (!p_) return fail(EDCOL_E_NULL, "null argument");                    \
  } while (0)

}  // namespace

extern "C" {

const char* edcol_version(void) { return "0.1.0"; }
const char* edcol_last_error(void) { return last_error.c_str(); }
int edcol_last_error_line(void) { return last_line; }
void edcol_string_free(char* s) { std::free(s); }
void edcol_ints_free(int* a) { std::free(a); }

edcol_status edcol_graph_parse(const char* text, edcol_graph** out) {
  EDCOL_REQUIRE(text, out);
  return guard([&] { *out = new edcol_graph{edcol::parse_graph(text)}; });
}

edcol_status edcol_graph_read(const char* path, edcol_graph** out) {
  EDCOL_REQUIRE(path, out);
  return guard([&] { *out = new edcol_graph{edcol::read_graph_file(path)}; });
}

edcol_status edcol_graph_write(const edcol_graph* g, const char* path) {
  EDCOL_REQUIRE(g, path);
  return guard([&] { edcol::write_graph_file(g->g, path); });
}

edcol_status edcol_graph_format(const edcol_graph* g, char** out) {
  EDCOL_REQUIRE(g, out);
  return guard([&] { *out = dup(edcol::format_graph(g->g)); });
}

void edcol_graph_free(edcol_graph* g) { delete g; }
int edcol_graph_vertex_count(const edcol_graph* g) { return g ? g->g.vertex_count() : 0; }
size_t edcol_graph_edge_count(const edcol_graph* g) { return g ? g->g.edge_count() : 0; }
int edcol_graph_max_degree(const edcol_graph* g) { return g ? g->g.max_degree() : 0; }

edcol_status edcol_derive(const edcol_graph* g, edcol_derived kind, int p, edcol_graph** out) {
  EDCOL_REQUIRE(g, out);
  return guard([&] {
    edcol::Graph h;
    switch (kind) {
      case EDCOL_EXACT_DISTANCE: h = edcol::exact_distance_graph(g->g, p); break;
      case EDCOL_EXACT_POWER: h = edcol::exact_power_graph(g->g, p); break;
      case EDCOL_POWER: h = edcol::power_graph(g->g, p); break;
      case EDCOL_ODD_UNION_DISTANCE: h = edcol::odd_union_graph(g->g, p, edcol::UnionMode::Distance); break;
      case EDCOL_ODD_UNION_PATH: h = edcol::odd_union_graph(g->g, p, edcol::UnionMode::Path); break;
      default: throw edcol::Error(edcol::ErrorCode::InvalidArgument, "unknown derived graph kind");
    }
    *out = new edcol_graph{std::move(h)};
  });
}

edcol_status edcol_odd_girth(const edcol_graph* g, int* out) {
  EDCOL_REQUIRE(g, out);
  return guard([&] { *out = edcol::odd_girth(g->g).value_or(0); });
}

edcol_status edcol_generate(const char* family, const int* params, size_t n_params, const edcol_graph* base,
                            edcol_graph** out, edcol_order** order) {
  EDCOL_REQUIRE(family, out);
  if (n_params > 0 && !params) return fail(EDCOL_E_NULL, "null parameter array");
  return guard([&] {
    auto f = edcol::family_from_name(family);
    if (!f) throw edcol::Error(edcol::ErrorCode::InvalidArgument, std::string("unknown family ") + family);
    edcol::FamilySpec spec;
    spec.family = *f;
    spec.params.assign(params, params + n_params);
    if (base) spec.base = base->g;
    edcol::FamilyOutput res = edcol::generate(spec);
    auto* g = new edcol_graph{std::move(res.graph)};
    if (order) *order = res.prescribed_order ? new edcol_order{*res.prescribed_order} : nullptr;
    *out = g;
  });
}

edcol_status edcol_load_g4(const char* path, edcol_graph** out) {
  EDCOL_REQUIRE(out);
  return guard([&] { *out = new edcol_graph{path ? edcol::load_g4(path) : edcol::load_g4()}; });
}

edcol_status edcol_validate_g4(const edcol_graph* g, int64_t budget_ms, edcol_report** out) {
  EDCOL_REQUIRE(g, out);
  return guard([&] { *out = new edcol_report{edcol::validate_g4(g->g, edcol::Deadline::after_ms(budget_ms))}; });
}

edcol_status edcol_order_parse(const char* text, edcol_order** out) {
  EDCOL_REQUIRE(text, out);
  return guard([&] { *out = new edcol_order{edcol::parse_order(text)}; });
}

edcol_status edcol_order_read(const char* path, edcol_order** out) {
  EDCOL_REQUIRE(path, out);
  return guard([&] { *out = new edcol_order{edcol::read_order_file(path)}; });
}

edcol_status edcol_order_write(const edcol_order* o, const char* path) {
  EDCOL_REQUIRE(o, path);
  return guard([&] { edcol::write_order_file(o->o, path); });
}

edcol_status edcol_order_format(const edcol_order* o, char** out) {
  EDCOL_REQUIRE(o, out);
  return guard([&] { *out = dup(edcol::format_order(o->o)); });
}

void edcol_order_free(edcol_order* o) { delete o; }
int edcol_order_size(const edcol_order* o) { return o ? o->o.size() : 0; }
int edcol_order_at(const edcol_order* o, int position) {
  return o && position >= 0 && position < o->o.size() ? o->o.at(position) : 0;
}

edcol_status edcol_heuristic_order(const edcol_graph* g, edcol_strategy s, int root, edcol_order** out) {
  EDCOL_REQUIRE(g, out);
  return guard([&] {
    edcol::OrderStrategy strategy;
    switch (s) {
      case EDCOL_DEGENERACY: strategy = edcol::OrderStrategy::Degeneracy; break;
      case EDCOL_BFS_ROOT: strategy = edcol::OrderStrategy::BfsRoot; break;
      case EDCOL_TD_DFS: strategy = edcol::OrderStrategy::TdDfs; break;
      default: throw edcol::Error(edcol::ErrorCode::InvalidArgument, "unknown order strategy");
    }
    *out = new edcol_order{edcol::heuristic_order(g->g, strategy, root)};
  });
}

edcol_status edcol_eval_colnum(const edcol_graph* g, const edcol_order* o, edcol_access a, int radius, int* out) {
  EDCOL_REQUIRE(g, o, out);
  return guard([&] {
    if (o->o.size() != g->g.vertex_count())
      throw edcol::Error(edcol::ErrorCode::InvalidArgument, "order size does not match the graph");
    *out = edcol::eval_colnum(g->g, o->o, {access_of(a), radius});
  });
}

edcol_status edcol_exact_colnum(const edcol_graph* g, edcol_access a, int radius, int64_t budget_ms, int* value,
                                int* optimal, edcol_order** witness) {
  EDCOL_REQUIRE(g, value, optimal);
  return guard([&] {
    edcol::ColnumResult r = edcol::exact_colnum(g->g, {access_of(a), radius}, edcol::Deadline::after_ms(budget_ms));
    *value = r.value;
    *optimal = r.optimal ? 1 : 0;
    if (witness) *witness = new edcol_order{r.witness};
  });
}

edcol_status edcol_treedepth(const edcol_graph* g, int64_t budget_ms, int* out) {
  EDCOL_REQUIRE(g, out);
  return guard([&] { *out = edcol::treedepth_exact(g->g, edcol::Deadline::after_ms(budget_ms)); });
}

edcol_status edcol_color(const edcol_graph* g, const edcol_order* o, edcol_method m, int p, edcol_access a,
                         int radius, edcol_coloring** out) {
  EDCOL_REQUIRE(g, o, out);
  return guard([&] {
    if (o->o.size() != g->g.vertex_count())
      throw edcol::Error(edcol::ErrorCode::InvalidArgument, "order size does not match the graph");
    edcol::Coloring c;
    switch (m) {
      case EDCOL_GREEDY: c = edcol::greedy_back_coloring(g->g, o->o, {access_of(a), radius}); break;
      case EDCOL_ODD_P: c = edcol::color_exact_distance_odd(g->g, o->o, p); break;
      case EDCOL_EVEN_P: c = edcol::color_exact_distance_even(g->g, o->o, p); break;
      case EDCOL_SIGNATURE: c = edcol::signature_coloring(g->g, o->o, p); break;
      default: throw edcol::Error(edcol::ErrorCode::InvalidArgument, "unknown colouring method");
    }
    *out = new edcol_coloring{std::move(c)};
  });
}

edcol_status edcol_coloring_parse(const char* text, edcol_coloring** out) {
  EDCOL_REQUIRE(text, out);
  return guard([&] { *out = new edcol_coloring{edcol::parse_coloring(text)}; });
}

edcol_status edcol_coloring_read(const char* path, edcol_coloring** out) {
  EDCOL_REQUIRE(path, out);
  return guard([&] { *out = new edcol_coloring{edcol::read_coloring_file(path)}; });
}

edcol_status edcol_coloring_write(const edcol_coloring* c, const char* path) {
  EDCOL_REQUIRE(c, path);
  return guard([&] { edcol::write_coloring_file(c->c, path); });
}

edcol_status edcol_coloring_format(const edcol_coloring* c, char** out) {
  EDCOL_REQUIRE(c, out);
  return guard([&] { *out = dup(edcol::format_coloring(c->c)); });
}

void edcol_coloring_free(edcol_coloring* c) { delete c; }
int edcol_coloring_palette_size(const edcol_coloring* c) { return c ? c->c.palette_size() : 0; }
int edcol_coloring_color(const edcol_coloring* c, int v) {
  return c && v >= 1 && v <= c->c.vertex_count() ? c->c.color(v) : 0;
}

edcol_status edcol_verify_proper(const edcol_graph* h, const edcol_coloring* c, int* proper, int* u, int* v) {
  EDCOL_REQUIRE(h, c, proper);
  return guard([&] {
    edcol::ProperCheck r = edcol::verify_proper(h->g, c->c);
    *proper = r.proper ? 1 : 0;
    if (u) *u = r.violation ? r.violation->u : 0;
    if (v) *v = r.violation ? r.violation->v : 0;
  });
}

edcol_status edcol_chromatic_number(const edcol_graph* h, int64_t budget_ms, int* exact, int* lower, int* upper,
                                    edcol_coloring** witness) {
  EDCOL_REQUIRE(h, exact, lower, upper);
  return guard([&] {
    edcol::Deadline deadline = edcol::Deadline::after_ms(budget_ms);
    int known = 0;
    if (auto cert = edcol::construction_certificate(h->g))
      known = edcol::certified_lower_bound(h->g, *cert, deadline).value_or(0);
    edcol::ChiResult r = edcol::chromatic_number(h->g, deadline, known);
    *exact = r.status == edcol::ChiStatus::Exact ? 1 : 0;
    *lower = r.lower;
    *upper = r.upper;
    if (witness) *witness = new edcol_coloring{r.witness};
  });
}

edcol_status edcol_clique_number(const edcol_graph* h, int64_t budget_ms, int* value, int* optimal, int** clique,
                                 size_t* clique_len) {
  EDCOL_REQUIRE(h, value, optimal);
  return guard([&] {
    edcol::CliqueResult r = edcol::clique_number(h->g, edcol::Deadline::after_ms(budget_ms));
    *value = r.value;
    *optimal = r.optimal ? 1 : 0;
    if (clique) *clique = dup(r.clique);
    if (clique_len) *clique_len = r.clique.size();
  });
}

edcol_status edcol_decomp_parse(const char* text, edcol_decomp** out) {
  EDCOL_REQUIRE(text, out);
  return guard([&] { *out = new edcol_decomp{edcol::parse_decomposition(text)}; });
}

edcol_status edcol_decomp_read(const char* path, edcol_decomp** out) {
  EDCOL_REQUIRE(path, out);
  return guard([&] { *out = new edcol_decomp{edcol::read_decomposition_file(path)}; });
}

edcol_status edcol_decomp_write(const edcol_decomp* d, const char* path) {
  EDCOL_REQUIRE(d, path);
  return guard([&] { edcol::write_decomposition_file(d->d, path); });
}

edcol_status edcol_decomp_format(const edcol_decomp* d, char** out) {
  EDCOL_REQUIRE(d, out);
  return guard([&] { *out = dup(edcol::format_decomposition(d->d)); });
}

void edcol_decomp_free(edcol_decomp* d) { delete d; }
int edcol_decomp_size(const edcol_decomp* d) { return d ? d->d.size() : 0; }

edcol_status edcol_decomp_peel(const edcol_graph* g, int root, edcol_decomp** out) {
  EDCOL_REQUIRE(g, out);
  return guard([&] { *out = new edcol_decomp{edcol::peel_shortest_paths(g->g, root)}; });
}

edcol_status edcol_decomp_check(const edcol_graph* g, const edcol_decomp* d, int strict, int* connected, int* width,
                                int** widths, size_t* n_widths) {
  EDCOL_REQUIRE(g, d, connected, width);
  return guard([&] {
    edcol::DecompositionCheck c = edcol::check_decomposition(g->g, d->d, strict != 0);
    *connected = c.connected ? 1 : 0;
    *width = c.width;
    if (widths) *widths = dup(c.widths);
    if (n_widths) *n_widths = c.widths.size();
  });
}

edcol_status edcol_decomp_flat(const edcol_graph* g, const edcol_decomp* d, const char* profile, int k_max, int* flat,
                               edcol_flat_violation* violation) {
  EDCOL_REQUIRE(g, d, profile, flat);
  return guard([&] {
    edcol::FlatCheck c = edcol::check_flat(g->g, d->d, edcol::FlatnessProfile::parse(profile), k_max);
    *flat = c.flat ? 1 : 0;
    if (violation) {
      *violation = {};
      if (c.violation)
        *violation = {c.violation->part, c.violation->vertex, c.violation->k, c.violation->count, c.violation->bound};
    }
  });
}

edcol_status edcol_decomp_contract(const edcol_graph* g, const edcol_decomp* d, edcol_graph** out) {
  EDCOL_REQUIRE(g, d, out);
  return guard([&] { *out = new edcol_graph{edcol::contract(g->g, d->d)}; });
}

edcol_status edcol_decomp_order(const edcol_graph* g, const edcol_decomp* d, edcol_order** out) {
  EDCOL_REQUIRE(g, d, out);
  return guard([&] { *out = new edcol_order{edcol::flatbound_order(g->g, d->d)}; });
}

edcol_status edcol_bound(const char* formula, const edcol_bound_params* params, uint64_t* out) {
  EDCOL_REQUIRE(formula, params, out);
  return guard([&] {
    auto f = edcol::bound_formula_from_name(formula);
    if (!f) throw edcol::Error(edcol::ErrorCode::InvalidArgument, std::string("unknown formula ") + formula);
    edcol::BoundParams p{params->k, params->t, params->g, params->f, params->p, params->q, params->col};
    *out = edcol::eval_bound_formula(*f, p);
  });
}

edcol_status edcol_run_suite(const char* suite, int64_t budget_ms, uint64_t seed, edcol_report** out) {
  EDCOL_REQUIRE(suite, out);
  return guard([&] {
    auto s = edcol::suite_from_name(suite);
    if (!s) throw edcol::Error(edcol::ErrorCode::InvalidArgument, std::string("unknown suite ") + suite);
    *out = new edcol_report{edcol::run_suite({*s, budget_ms, seed})};
  });
}

edcol_report* edcol_report_new(void) {
  try {
    return new edcol_report{};
  } catch (...) {
    fail(EDCOL_E_INTERNAL, "out of memory");
    return nullptr;
  }
}

edcol_status edcol_report_merge(edcol_report* into, const edcol_report* from) {
  EDCOL_REQUIRE(into, from);
  return guard([&] { into->r.merge(from->r); });
}

edcol_status edcol_report_format(const edcol_report* r, edcol_format f, char** out) {
  EDCOL_REQUIRE(r, out);
  return guard([&] {
    *out = dup(edcol::emit_report(r->r, f == EDCOL_JSONL ? edcol::ReportFormat::JsonLines : edcol::ReportFormat::Tsv));
  });
}

int edcol_report_any_fail(const edcol_report* r) { return r && r->r.any_fail() ? 1 : 0; }
size_t edcol_report_size(const edcol_report* r) { return r ? r->r.entries().size() : 0; }
void edcol_report_free(edcol_report* r) { delete r; }

}  // extern "C"
