#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edcol {

/// Vertex ids are 1-based, matching the graph file format.
using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Canonical form with u < v.
  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on vertices 1..n. Immutable once built, apart from
/// the vertex labels which are descriptive metadata only.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws Error(InvalidArgument) on self-loops, duplicates or out-of-range ids.
  Graph(int n, std::span<const Edge> edges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }
  bool empty() const noexcept { return n_ == 0; }
  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  int max_degree() const noexcept;
  bool adjacent(Vertex u, Vertex v) const;

  /// All edges with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  const std::map<Vertex, std::string>& labels() const noexcept { return labels_; }
  void set_label(Vertex v, std::string label);
  std::optional<std::string> label(Vertex v) const;
  std::optional<Vertex> find_label(std::string_view label) const;

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_ = std::vector<std::vector<Vertex>>(1);
  std::map<Vertex, std::string> labels_;
};

/// Incremental construction helper used by the generators.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n = 0) : n_(n) {}

  Vertex add_vertex(std::string label = {});
  void add_edge(Vertex u, Vertex v);
  /// Adds a path of `length` edges between u and v through fresh vertices;
  /// returns the internal vertices in order from u to v.
  std::vector<Vertex> add_path(Vertex u, Vertex v, int length, const std::string& label = {});
  void set_label(Vertex v, std::string label);
  int vertex_count() const noexcept { return n_; }

  Graph build() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::map<Vertex, std::string> labels_;
};

// -- text I/O ---------------------------------------------------------------

/// Parses the "p edge n m" / "e u v" format. Label comments
/// ("c label <v> <name>") are attached to the result.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

// -- distances --------------------------------------------------------------

inline constexpr int kUnreachable = -1;

struct DistanceTable {
  Vertex source = 0;
  int radius = 0;
  /// Indexed by vertex id; kUnreachable beyond the radius or in other components.
  std::vector<int> dist;

  int at(Vertex v) const { return dist[static_cast<std::size_t>(v)]; }
  bool reached(Vertex v) const { return at(v) != kUnreachable; }
};

DistanceTable bounded_distances(const Graph& g, Vertex source, int radius);
/// dist[u][v] for all u, v (1-based rows/cols); kUnreachable across components.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);
/// Closed ball N^radius[v], ascending.
std::vector<Vertex> closed_ball(const Graph& g, Vertex v, int radius);

// -- derived graphs ---------------------------------------------------------

/// Edge iff d_g(u,v) == p.
Graph exact_distance_graph(const Graph& g, int p);
/// Edge iff some simple path with exactly p edges joins u and v. Enumerates
/// paths depth-first, so the cost is exponential in p on dense inputs.
Graph exact_power_graph(const Graph& g, int p);
/// Edge iff 1 <= d_g(u,v) <= p.
Graph power_graph(const Graph& g, int p);

enum class UnionMode { Distance, Path };
/// Sentinel for odd_union_graph: every odd length (Distance mode only).
inline constexpr int kAllOdd = -1;

/// Union over odd i <= p of the exact-distance (Distance) or exact-power
/// (Path) graphs. p == kAllOdd in Distance mode yields G^odd.
Graph odd_union_graph(const Graph& g, int p, UnionMode mode);

/// Edge set union of two graphs on the same vertex set.
Graph graph_union(const Graph& a, const Graph& b);

/// Length of a shortest odd cycle, or nullopt when g is bipartite.
std::optional<int> odd_girth(const Graph& g);

/// Component id per vertex, numbered 0.. in order of smallest member. Index 0 unused.
std::vector<int> component_ids(const Graph& g);

/// Induced subgraph on `vertices` (renumbered 1..k in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace edcol
