#pragma once

// Brute-force reference implementations. Deliberately naive: they follow the
// definitions literally and share no code with the library kernels.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "edcol/graph.hpp"
#include "edcol/orderings.hpp"

namespace oracle {

using edcol::Edge;
using edcol::Graph;
using edcol::Vertex;

inline constexpr int kInf = 1 << 28;

inline std::vector<std::vector<int>> floyd(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, kInf));
  for (int v = 1; v <= n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

/// Calls `visit(path)` for every simple path starting at `from` with 1..max_len edges.
inline void simple_paths(const Graph& g, Vertex from, int max_len,
                         const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> path{from};
  std::vector<char> on(g.vertex_count() + 1, 0);
  on[from] = 1;
  std::function<void()> rec = [&] {
    if (static_cast<int>(path.size()) - 1 == max_len) return;
    for (Vertex w = 1; w <= g.vertex_count(); ++w) {
      if (on[w] || !g.adjacent(path.back(), w)) continue;
      path.push_back(w);
      on[w] = 1;
      visit(path);
      rec();
      on[w] = 0;
      path.pop_back();
    }
  };
  rec();
}

inline std::set<Edge> exact_distance_edges(const Graph& g, int p) {
  auto d = floyd(g);
  std::set<Edge> out;
  for (int u = 1; u <= g.vertex_count(); ++u)
    for (int v = u + 1; v <= g.vertex_count(); ++v)
      if (d[u][v] == p) out.insert({u, v});
  return out;
}

inline std::set<Edge> exact_power_edges(const Graph& g, int p) {
  std::set<Edge> out;
  for (int u = 1; u <= g.vertex_count(); ++u)
    simple_paths(g, u, p, [&](const std::vector<Vertex>& path) {
      if (static_cast<int>(path.size()) - 1 == p) out.insert(Edge::of(path.front(), path.back()));
    });
  return out;
}

inline std::set<Edge> edge_set(const Graph& g) {
  auto e = g.edges();
  return {e.begin(), e.end()};
}

/// Back-set of y straight from the definitions, by path enumeration.
inline std::vector<Vertex> access_set(const Graph& g, const edcol::LinearOrder& L, edcol::Access kind, int radius,
                                      Vertex y) {
  std::set<Vertex> out;
  simple_paths(g, y, radius, [&](const std::vector<Vertex>& path) {
    // path runs y = z_s, ..., z_0 = x
    Vertex x = path.back();
    if (!L.less(x, y)) return;
    const int s = static_cast<int>(path.size()) - 1;
    bool ok = true;
    switch (kind) {
      case edcol::Access::Weak:
        for (int i = 1; i < s; ++i) ok = ok && L.less(x, path[i]);
        break;
      case edcol::Access::Strong:
        for (int i = 1; i < s; ++i) ok = ok && L.less(y, path[i]);
        break;
      case edcol::Access::Dist:
        for (int i = 0; i <= s; ++i) {
          Vertex z = path[s - i];  // z_i
          if (i > 0 && !L.less(x, z)) ok = false;
          if (i >= radius / 2 + 1 && L.less(z, y)) ok = false;
        }
        break;
    }
    if (ok) out.insert(x);
  });
  return {out.begin(), out.end()};
}

inline int colnum(const Graph& g, const edcol::LinearOrder& L, edcol::Access kind, int radius) {
  std::size_t best = 0;
  for (Vertex y = 1; y <= g.vertex_count(); ++y) best = std::max(best, access_set(g, L, kind, radius, y).size());
  return 1 + static_cast<int>(best);
}

/// min over all n! orders.
inline int exact_colnum(const Graph& g, edcol::Access kind, int radius) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 1);
  int best = kInf;
  do {
    best = std::min(best, colnum(g, edcol::LinearOrder(perm), kind, radius));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool k_colorable(const Graph& h, int k) {
  const int n = h.vertex_count();
  std::vector<int> col(n + 1, 0);
  std::function<bool(int)> rec = [&](int v) {
    if (v > n) return true;
    for (int c = 1; c <= k; ++c) {
      bool free = true;
      for (Vertex w : h.neighbors(v))
        if (w < v && col[w] == c) free = false;
      if (!free) continue;
      col[v] = c;
      if (rec(v + 1)) return true;
    }
    col[v] = 0;
    return false;
  };
  return rec(1);
}

inline int chromatic_number(const Graph& h) {
  for (int k = 0;; ++k)
    if (k_colorable(h, k)) return k;
}

inline bool bipartite(const Graph& g) { return k_colorable(g, 2); }

inline int clique_number(const Graph& h) {
  const int n = h.vertex_count();
  int best = 0;
  std::vector<Vertex> cur;
  std::function<void(int)> rec = [&](int from) {
    best = std::max(best, static_cast<int>(cur.size()));
    for (int v = from; v <= n; ++v) {
      bool ok = true;
      for (Vertex u : cur) ok = ok && h.adjacent(u, v);
      if (!ok) continue;
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return best;
}

inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(density);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

inline edcol::LinearOrder random_order(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return edcol::LinearOrder(perm);
}

inline Graph from_edges(int n, std::initializer_list<std::pair<int, int>> list) {
  std::vector<Edge> edges;
  for (auto [u, v] : list) edges.push_back(Edge::of(u, v));
  return Graph(n, edges);
}

inline Graph path(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

inline Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({1, n});
  return Graph(n, edges);
}

inline Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace oracle
