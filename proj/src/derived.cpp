#include <algorithm>
#include <set>

#include "edcol/error.hpp"
#include "edcol/graph.hpp"

namespace edcol {

namespace {

void require_positive(int p) {
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "p must be a positive integer");
}

Graph with_labels_of(const Graph& src, int n, const std::vector<Edge>& edges) {
  Graph g(n, edges);
  for (const auto& [v, name] : src.labels()) g.set_label(v, name);
  return g;
}

template <typename Keep>
Graph by_distance(const Graph& g, int radius, Keep keep) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    DistanceTable t = bounded_distances(g, u, radius);
    for (Vertex v = u + 1; v <= n; ++v)
      if (t.reached(v) && keep(t.at(v))) edges.push_back({u, v});
  }
  return with_labels_of(g, n, edges);
}

/// Depth-first enumeration of simple paths from `start` with at most
/// `max_len` edges; `hit(v, len)` is called for every path end.
class PathWalker {
 public:
  PathWalker(const Graph& g, int max_len)
      : g_(g), max_len_(max_len), on_path_(static_cast<std::size_t>(g.vertex_count()) + 1, 0) {}

  template <typename Hit>
  void run(Vertex start, Hit&& hit) {
    on_path_[static_cast<std::size_t>(start)] = 1;
    walk(start, 0, hit);
    on_path_[static_cast<std::size_t>(start)] = 0;
  }

 private:
  template <typename Hit>
  void walk(Vertex at, int len, Hit& hit) {
    if (len == max_len_) return;
    for (Vertex w : g_.neighbors(at)) {
      auto& mark = on_path_[static_cast<std::size_t>(w)];
      if (mark) continue;
      hit(w, len + 1);
      mark = 1;
      walk(w, len + 1, hit);
      mark = 0;
    }
  }

  const Graph& g_;
  int max_len_;
  std::vector<char> on_path_;
};

template <typename Accept>
Graph by_paths(const Graph& g, int max_len, Accept accept) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  PathWalker walker(g, max_len);
  std::vector<char> found(static_cast<std::size_t>(n) + 1);
  for (Vertex u = 1; u <= n; ++u) {
    std::fill(found.begin(), found.end(), 0);
    walker.run(u, [&](Vertex v, int len) {
      if (v > u && accept(len)) found[static_cast<std::size_t>(v)] = 1;
    });
    for (Vertex v = u + 1; v <= n; ++v)
      if (found[static_cast<std::size_t>(v)]) edges.push_back({u, v});
  }
  return with_labels_of(g, n, edges);
}

}  // namespace

Graph exact_distance_graph(const Graph& g, int p) {
  require_positive(p);
  return by_distance(g, p, [p](int d) { return d == p; });
}

Graph exact_power_graph(const Graph& g, int p) {
  require_positive(p);
  return by_paths(g, p, [p](int len) { return len == p; });
}

Graph power_graph(const Graph& g, int p) {
  require_positive(p);
  return by_distance(g, p, [](int d) { return d >= 1; });
}

Graph odd_union_graph(const Graph& g, int p, UnionMode mode) {
  if (p == kAllOdd) {
    if (mode == UnionMode::Path)
      throw Error(ErrorCode::InvalidArgument, "the all-odd sentinel is only supported in distance mode");
    return by_distance(g, std::max(g.vertex_count(), 1), [](int d) { return d % 2 == 1; });
  }
  require_positive(p);
  if (p % 2 == 0) throw Error(ErrorCode::InvalidArgument, "odd_union_graph needs odd p");
  if (mode == UnionMode::Distance) return by_distance(g, p, [](int d) { return d % 2 == 1; });
  return by_paths(g, p, [](int len) { return len % 2 == 1; });
}

Graph graph_union(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count())
    throw Error(ErrorCode::InvalidArgument, "graph_union needs equal vertex sets");
  std::set<Edge> all;
  for (const Edge& e : a.edges()) all.insert(e);
  for (const Edge& e : b.edges()) all.insert(e);
  return with_labels_of(a, a.vertex_count(), std::vector<Edge>(all.begin(), all.end()));
}

std::optional<int> odd_girth(const Graph& g) {
  const int n = g.vertex_count();
  std::optional<int> best;
  for (Vertex s = 1; s <= n; ++s) {
    DistanceTable t = bounded_distances(g, s, n);
    for (Vertex u = 1; u <= n; ++u) {
      if (!t.reached(u)) continue;
      for (Vertex w : g.neighbors(u)) {
        if (w < u || t.at(w) != t.at(u)) continue;
        int len = 2 * t.at(u) + 1;
        if (!best || len < *best) best = len;
      }
    }
  }
  return best;
}

}  // namespace edcol
