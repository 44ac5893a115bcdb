#include "edcol/families.hpp"

#include <algorithm>
#include <array>

#include "edcol/chi.hpp"
#include "edcol/error.hpp"

#ifndef EDCOL_DATA_DIR
#define EDCOL_DATA_DIR "data"
#endif

namespace edcol {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

int param(const FamilySpec& spec, std::size_t i, const char* family) {
  if (spec.params.size() <= i)
    throw Error(ErrorCode::InvalidArgument, std::string(family) + " needs " + std::to_string(i + 1) + " parameter(s)");
  return spec.params[i];
}

constexpr std::array<std::pair<Family, const char*>, 12> kNames{{
    {Family::Path, "PATH"},
    {Family::Cycle, "CYCLE"},
    {Family::Complete, "COMPLETE"},
    {Family::RegTree, "REG_TREE"},
    {Family::Gkp, "GKP"},
    {Family::Lik, "LIK"},
    {Family::Snp, "SNP"},
    {Family::Akp, "AKP"},
    {Family::G4, "G4"},
    {Family::G5, "G5"},
    {Family::Gt, "GT"},
    {Family::Subdivision, "SUBDIVISION"},
}};

}  // namespace

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [f, n] : kNames)
    if (name == n) return f;
  return std::nullopt;
}

const char* family_name(Family f) {
  for (const auto& [g, n] : kNames)
    if (g == f) return n;
  return "?";
}

Graph path_graph(int n) {
  require(n >= 1, "PATH needs n >= 1");
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph cycle_graph(int n) {
  require(n >= 3, "CYCLE needs n >= 3");
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v, v + 1);
  b.add_edge(n, 1);
  return b.build();
}

Graph complete_graph(int n) {
  require(n >= 1, "COMPLETE needs n >= 1");
  GraphBuilder b(n);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) b.add_edge(u, v);
  return b.build();
}

namespace {

struct Tree {
  GraphBuilder builder;
  std::vector<int> level;  // by vertex id
  std::vector<Vertex> parent;
};

Tree build_tree(int k, int r) {
  Tree t;
  Vertex root = t.builder.add_vertex("root");
  t.level = {0, 0};
  t.parent = {0, 0};
  std::vector<Vertex> frontier{root};
  for (int depth = 1; depth <= r; ++depth) {
    std::vector<Vertex> next;
    for (Vertex u : frontier) {
      int children = depth == 1 ? k : k - 1;
      for (int c = 0; c < children; ++c) {
        Vertex v = t.builder.add_vertex();
        t.builder.add_edge(u, v);
        t.level.push_back(depth);
        t.parent.push_back(u);
        next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return t;
}

}  // namespace

Graph regular_tree(int k, int r) {
  require(k >= 2 && r >= 1, "REG_TREE needs k >= 2, r >= 1");
  return build_tree(k, r).builder.build();
}

Graph gkp_graph(int k, int p) {
  require(k >= 2 && p >= 4, "GKP needs k >= 2, p >= 4");
  Tree t = build_tree(k, p / 2);
  const int tree_size = t.builder.vertex_count();
  for (Vertex v = 2; v <= tree_size; ++v) {
    int l = t.level[static_cast<std::size_t>(v)] - 1;  // level of the parent
    if (l < 1) continue;
    Vertex u = t.parent[static_cast<std::size_t>(v)];
    t.builder.add_path(u, v, l + 1, "gadget");
    if (p % 2 == 1) t.builder.add_path(u, v, l + 2, "gadget");
  }
  return t.builder.build();
}

Graph lik_graph(int i, int k) {
  require(i >= 1 && k >= 1, "LIK needs i >= 1, k >= 1");
  GraphBuilder b;
  for (int v = 0; v < 4; ++v) b.add_vertex("branch");
  for (Vertex u = 1; u <= 4; ++u)
    for (Vertex v = u + 1; v <= 4; ++v) b.add_path(u, v, i, "subdivision");
  for (Vertex u = 1; u <= 4; ++u)
    for (int j = 0; j < k; ++j) b.add_edge(u, b.add_vertex("pendant"));
  return b.build();
}

FamilyOutput snp_graph(int n, int p) {
  require(n >= 2 && p >= 2, "SNP needs n >= 2, p >= 2");
  GraphBuilder b;
  for (int v = 0; v < n; ++v) b.add_vertex("branch");
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) b.add_path(u, v, p, "subdivision");
  Graph g = b.build();
  return {g, LinearOrder::identity(g.vertex_count())};
}

FamilyOutput akp_graph(int k, int p) {
  require(k >= 1 && p >= 2, "AKP needs k >= 1, p >= 2");
  GraphBuilder b;
  const int ends = p - 1;
  for (Vertex v = 1; v <= ends; ++v) b.add_vertex(v == 1 || v == ends ? "end" : "path");
  for (Vertex v = 1; v < ends; ++v) b.add_edge(v, v + 1);
  for (int j = 0; j < k; ++j) {
    Vertex a = b.add_vertex("apex");
    b.add_edge(a, 1);
    if (ends != 1) b.add_edge(a, ends);
  }
  Graph g = b.build();
  std::vector<Vertex> perm{1};
  if (ends != 1) perm.push_back(ends);
  for (Vertex v = 2; v <= g.vertex_count(); ++v)
    if (v != ends) perm.push_back(v);
  return {g, LinearOrder(perm)};
}

Graph subdivide(const Graph& g, int s) {
  require(s >= 0, "SUBDIVISION needs s >= 0");
  GraphBuilder b(g.vertex_count());
  for (const auto& [v, name] : g.labels()) b.set_label(v, name);
  for (const Edge& e : g.edges()) b.add_path(e.u, e.v, s + 1, s > 0 ? "subdivision" : "");
  return b.build();
}

std::string default_g4_path() { return std::string(EDCOL_DATA_DIR) + "/g4.gr"; }

Graph load_g4() { return load_g4(default_g4_path()); }

Graph load_g4(const std::string& path) {
  Graph g = read_graph_file(path);
  Report r = validate_g4(g);
  for (const auto& e : r.entries())
    if (e.status != Status::Pass)
      throw Error(ErrorCode::Validation, "G_4 data at " + path + " fails " + e.name);
  return g;
}

Report validate_g4(const Graph& g, Deadline deadline) {
  Report r;
  auto find = [&](const std::string& name) { return g.find_label(name); };
  std::vector<std::string> roles = {"y^1", "y^2", "w^1", "w^2", "z"};
  for (int j = 1; j <= 2; ++j)
    for (int i = 1; i <= 5; ++i) roles.push_back("x_" + std::to_string(i) + "^" + std::to_string(j));
  std::string missing;
  for (const auto& role : roles)
    if (!find(role)) missing += (missing.empty() ? "" : ",") + role;
  r.check_true("g4_labels", missing.empty(), missing.empty() ? "true" : "missing " + missing);
  if (!missing.empty()) return r;

  Graph h = exact_distance_graph(g, 3);
  auto x = [&](int i, int j) { return *find("x_" + std::to_string(i) + "^" + std::to_string(j)); };
  for (int j = 1; j <= 2; ++j) {
    bool cycle = true;
    for (int i = 1; i <= 5; ++i) cycle = cycle && h.adjacent(x(i, j), x(i % 5 + 1, j));
    r.check_true("g4_c" + std::to_string(j) + "_5cycle", cycle);
  }
  std::vector<Vertex> xs;
  for (int j = 1; j <= 2; ++j)
    for (int i = 1; i <= 5; ++i) xs.push_back(x(i, j));
  std::vector<Vertex> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  r.check_true("g4_cycles_disjoint", std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

  Vertex z = *find("z");
  bool in_z = true;
  for (Vertex v : xs) in_z = in_z && h.adjacent(v, z);
  r.check_true("g4_cycles_in_n_z", in_z);
  for (int j = 1; j <= 2; ++j) {
    Vertex y = *find("y^" + std::to_string(j));
    bool in_y = true;
    for (int i = 1; i <= 5; ++i) in_y = in_y && h.adjacent(x(i, j), y);
    r.check_true("g4_c" + std::to_string(j) + "_in_n_y" + std::to_string(j), in_y);
  }
  r.check_true("g4_y1y2_edge", h.adjacent(*find("y^1"), *find("y^2")));

  ChiResult chi = chromatic_number(h, deadline);
  if (chi.status == ChiStatus::Exact)
    r.check("g4_chi_d3", 5, chi.value, Relation::Equal);
  else
    r.skip("g4_chi_d3", "5", "budget");
  return r;
}

Graph build_g5(const Graph& f) {
  require(!f.empty(), "build_g5 needs a non-empty graph");
  const int n = f.vertex_count();
  GraphBuilder b(2 * n);
  for (int copy = 0; copy < 2; ++copy) {
    const std::string prefix = "F" + std::to_string(copy + 1) + ":";
    for (const auto& [v, name] : f.labels()) b.set_label(copy * n + v, prefix + name);
    for (const Edge& e : f.edges()) b.add_edge(copy * n + e.u, copy * n + e.v);
  }
  Vertex y1 = b.add_vertex("y'_1");
  Vertex w1 = b.add_vertex("w'_1");
  Vertex z = b.add_vertex("z'");
  Vertex w2 = b.add_vertex("w'_2");
  Vertex y2 = b.add_vertex("y'_2");
  b.add_edge(y1, w1);
  b.add_edge(w1, z);
  b.add_edge(z, w2);
  b.add_edge(w2, y2);
  b.add_edge(w1, w2);
  for (Vertex v = 1; v <= n; ++v) b.add_path(v, w1, 2, "attach");
  for (Vertex v = 1; v <= n; ++v) b.add_path(n + v, w2, 2, "attach");
  return b.build();
}

Graph build_gt(int t) {
  require(t >= 4, "GT needs t >= 4");
  Graph g = load_g4();
  for (int s = 4; s < t; ++s) g = build_g5(g);
  return g;
}

std::optional<ApexPairCertificate> construction_certificate(const Graph& g) {
  auto find = [&](const std::string& name) { return g.find_label(name); };
  ApexPairCertificate cert;
  if (auto z = find("z'")) {
    auto y1 = find("y'_1"), y2 = find("y'_2");
    if (!y1 || !y2) return std::nullopt;
    cert.apex = *z;
    cert.left = *y1;
    cert.right = *y2;
    for (int copy = 1; copy <= 2; ++copy) {
      const std::string prefix = "F" + std::to_string(copy) + ":";
      std::vector<Vertex> part;
      for (const auto& [v, name] : g.labels())
        if (name.starts_with(prefix)) part.push_back(v);
      if (part.empty()) return std::nullopt;
      Graph inner = induced_subgraph(g, part);
      Graph stripped(inner.vertex_count(), inner.edges());
      for (const auto& [v, name] : inner.labels()) stripped.set_label(v, name.substr(prefix.size()));
      auto nested = construction_certificate(stripped);
      if (!nested) return std::nullopt;
      (copy == 1 ? cert.first : cert.second) = std::move(part);
      (copy == 1 ? cert.first_part : cert.second_part) = std::make_shared<ApexPairCertificate>(std::move(*nested));
    }
    return cert;
  }
  auto z = find("z"), y1 = find("y^1"), y2 = find("y^2");
  if (!z || !y1 || !y2) return std::nullopt;
  cert.apex = *z;
  cert.left = *y1;
  cert.right = *y2;
  for (int j = 1; j <= 2; ++j)
    for (int i = 1; i <= 5; ++i) {
      auto x = find("x_" + std::to_string(i) + "^" + std::to_string(j));
      if (!x) return std::nullopt;
      (j == 1 ? cert.first : cert.second).push_back(*x);
    }
  return cert;
}

FamilyOutput generate(const FamilySpec& spec) {
  const char* name = family_name(spec.family);
  switch (spec.family) {
    case Family::Path: return {path_graph(param(spec, 0, name)), std::nullopt};
    case Family::Cycle: return {cycle_graph(param(spec, 0, name)), std::nullopt};
    case Family::Complete: return {complete_graph(param(spec, 0, name)), std::nullopt};
    case Family::RegTree: return {regular_tree(param(spec, 0, name), param(spec, 1, name)), std::nullopt};
    case Family::Gkp: return {gkp_graph(param(spec, 0, name), param(spec, 1, name)), std::nullopt};
    case Family::Lik: return {lik_graph(param(spec, 0, name), param(spec, 1, name)), std::nullopt};
    case Family::Snp: return snp_graph(param(spec, 0, name), param(spec, 1, name));
    case Family::Akp: return akp_graph(param(spec, 0, name), param(spec, 1, name));
    case Family::G4: return {load_g4(), std::nullopt};
    case Family::G5: return {build_g5(spec.base ? *spec.base : load_g4()), std::nullopt};
    case Family::Gt: return {build_gt(param(spec, 0, name)), std::nullopt};
    case Family::Subdivision:
      require(spec.base.has_value(), "SUBDIVISION needs a base graph");
      return {subdivide(*spec.base, param(spec, 0, name)), std::nullopt};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

}  // namespace edcol
