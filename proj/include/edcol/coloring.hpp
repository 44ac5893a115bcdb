#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edcol/graph.hpp"
#include "edcol/orderings.hpp"

namespace edcol {

/// Vertex -> positive colour id, with an optional legend describing what
/// each id stands for (a pair (a,c), a signature vector, ...).
class Coloring {
 public:
  Coloring() = default;
  /// All vertices uncoloured (colour 0).
  explicit Coloring(int n) : colour_(static_cast<std::size_t>(n) + 1, 0) {}

  int vertex_count() const noexcept { return static_cast<int>(colour_.size()) - 1; }
  int color(Vertex v) const { return colour_[static_cast<std::size_t>(v)]; }
  void set(Vertex v, int colour) { colour_[static_cast<std::size_t>(v)] = colour; }
  bool complete() const;
  int palette_size() const;
  int max_color() const;

  const std::map<int, std::string>& legend() const noexcept { return legend_; }
  void set_legend(int colour, std::string label) { legend_[colour] = std::move(label); }

  bool operator==(const Coloring& other) const = default;

 private:
  std::vector<int> colour_ = std::vector<int>(1, 0);
  std::map<int, std::string> legend_;
};

struct ProperCheck {
  bool proper = true;
  /// Lexicographically first monochromatic edge.
  std::optional<Edge> violation;
};

/// Throws Error(InvalidArgument) if some vertex is uncoloured.
ProperCheck verify_proper(const Graph& h, const Coloring& c);

Coloring parse_coloring(std::string_view text);
std::string format_coloring(const Coloring& c);
Coloring read_coloring_file(const std::string& path);
void write_coloring_file(const Coloring& c, const std::string& path);

/// Least colour not used on the back-set, in L-order.
Coloring greedy_back_coloring(const Graph& g, const LinearOrder& order, AccessKind kind);

/// Proper on g's exact distance-p graph for odd p (greedy along D_{2p-1},
/// then each vertex takes the colour of the L-least vertex within p/2).
Coloring color_exact_distance_odd(const Graph& g, const LinearOrder& order, int p);

/// Even p: colour pairs (a(mu(y)), c_mu(beta(y))) over a greedy colouring
/// along D_{2p}.
Coloring color_exact_distance_even(const Graph& g, const LinearOrder& order, int p);

/// Signature colouring for odd p: proper on the union of the exact distance
/// graphs of odd length <= p, and on the exact power union when the odd
/// girth is at least p+1.
Coloring signature_coloring(const Graph& g, const LinearOrder& order, int p);

}  // namespace edcol
