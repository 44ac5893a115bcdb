#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edcol/deadline.hpp"
#include "edcol/graph.hpp"

namespace edcol {

/// A permutation of 1..n; perm()[0] is the L-smallest vertex.
class LinearOrder {
 public:
  LinearOrder() = default;
  /// Throws Error(InvalidArgument) unless `perm` is a permutation of 1..n.
  explicit LinearOrder(std::vector<Vertex> perm);
  static LinearOrder identity(int n);

  int size() const noexcept { return static_cast<int>(perm_.size()); }
  std::span<const Vertex> perm() const noexcept { return perm_; }
  Vertex at(int position) const { return perm_[static_cast<std::size_t>(position)]; }
  /// 0-based position of v.
  int rank(Vertex v) const { return rank_[static_cast<std::size_t>(v)]; }
  bool less(Vertex a, Vertex b) const { return rank(a) < rank(b); }
  const std::vector<int>& ranks() const noexcept { return rank_; }

  bool operator==(const LinearOrder& other) const { return perm_ == other.perm_; }

 private:
  std::vector<Vertex> perm_;
  std::vector<int> rank_ = std::vector<int>(1, 0);
};

LinearOrder parse_order(std::string_view text);
std::string format_order(const LinearOrder& order);
LinearOrder read_order_file(const std::string& path);
void write_order_file(const LinearOrder& order, const std::string& path);

enum class Access {
  Weak,    // Q: internal vertices above x
  Strong,  // R: internal vertices above y
  Dist,    // D: x is the path minimum, the y-side half stays above y
};

inline constexpr int kInfinity = -1;

struct AccessKind {
  Access access = Access::Weak;
  /// Positive, or kInfinity for Weak/Strong.
  int radius = 1;
};

/// Radius actually searched: kInfinity maps to n. Validates the kind.
int effective_radius(const Graph& g, AccessKind kind);

/// Back-set of y, ascending by vertex id.
std::vector<Vertex> access_set(const Graph& g, const LinearOrder& order, AccessKind kind, Vertex y);
/// All back-sets at once, indexed by vertex id (index 0 unused).
std::vector<std::vector<Vertex>> access_sets(const Graph& g, const LinearOrder& order, AccessKind kind);

/// 1 + max_y |access_set(y)|; 1 for the empty graph.
int eval_colnum(const Graph& g, const LinearOrder& order, AccessKind kind);

struct ColnumResult {
  int value = 0;
  LinearOrder witness;
  /// False when the deadline expired; value is then the best upper bound found.
  bool optimal = true;
};

/// min over all orders of eval_colnum, by branch and bound over order
/// prefixes (children in ascending vertex id). The witness is the
/// lexicographically least optimal order.
ColnumResult exact_colnum(const Graph& g, AccessKind kind, Deadline deadline = Deadline::unlimited());

enum class OrderStrategy { Degeneracy, BfsRoot, TdDfs };

LinearOrder heuristic_order(const Graph& g, OrderStrategy strategy, Vertex root = 1);

/// Least k such that x is weakly k-accessible from y; 0 for x == y.
std::optional<int> weak_access_distance(const Graph& g, const LinearOrder& order, Vertex y, Vertex x);

/// Exact tree-depth for graphs with at most 64 vertices. Throws
/// Error(Budget) when the deadline expires.
int treedepth_exact(const Graph& g, Deadline deadline = Deadline::unlimited());

}  // namespace edcol
