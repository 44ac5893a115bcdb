#pragma once

#include <vector>

#include "edcol/graph.hpp"

namespace edcol::detail {

/// Bounded BFS kernels behind the Q/R/D back-sets. They work on a raw rank
/// array so the exact search can run them on partial orders: every vertex
/// not yet placed carries the same rank, larger than all placed ones.
class AccessEngine {
 public:
  explicit AccessEngine(const Graph& g);

  /// Vertices y != x reachable from x within `radius` steps through vertices
  /// ranked above x, i.e. every y with x in Q(y). Ascending by distance.
  const std::vector<Vertex>& weak_forward(const std::vector<int>& rank, Vertex x, int radius);

  /// R(y): lower-ranked x joined to y by a path of length <= radius whose
  /// internal vertices are ranked above y.
  std::vector<Vertex> strong_back(const std::vector<int>& rank, Vertex y, int radius);

  /// D(y) for radius k. Uses the walk form of the definition (see
  /// dist_back_with), which coincides with the path form.
  std::vector<Vertex> dist_back(const std::vector<int>& rank, Vertex y, int k);

  /// Distances from y through vertices ranked >= y, then
  /// d'(u) = 0 for u = y and 1 + min over such neighbours otherwise.
  /// Entries beyond `k` are kUnreachable.
  const std::vector<int>& tail_costs(const std::vector<int>& rank, Vertex y, int k);

  /// (u, a) pairs with a = distance from x to u through vertices ranked >= x, a <= h.
  std::vector<std::pair<Vertex, int>> head_ball(const std::vector<int>& rank, Vertex x, int h);

 private:
  void bfs(Vertex src, int radius, const std::vector<int>& rank, int min_rank, bool strict);

  const Graph& g_;
  std::vector<int> dist_;
  std::vector<int> tail_;
  std::vector<Vertex> queue_;
  std::vector<Vertex> reached_;
};

}  // namespace edcol::detail
