#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edcol/graph.hpp"
#include "edcol/orderings.hpp"

namespace edcol {

/// Ordered parts H_1..H_l partitioning 1..n. Parts are 0-indexed in code and
/// 1-indexed in files and reports.
struct Decomposition {
  int n = 0;
  std::vector<std::vector<Vertex>> parts;

  int size() const noexcept { return static_cast<int>(parts.size()); }
  /// Part index (0-based) per vertex; throws Error(InvalidArgument) unless
  /// the parts are non-empty, disjoint and cover 1..n.
  std::vector<int> part_of() const;
};

/// "p decomp <n> <l>" then "h <part> <vertex>" lines.
Decomposition parse_decomposition(std::string_view text);
std::string format_decomposition(const Decomposition& d);
Decomposition read_decomposition_file(const std::string& path);
void write_decomposition_file(const Decomposition& d, const std::string& path);

struct DecompositionCheck {
  bool connected = true;
  /// w_i per part.
  std::vector<int> widths;
  int width = 0;
};

/// Default: w_i ranges over the components of G minus the parts before i and
/// counts the parts j <= i with an edge leaving the component into them.
/// `strict` removes parts j <= i first.
DecompositionCheck check_decomposition(const Graph& g, const Decomposition& d, bool strict = false);

/// f(0..k_max), non-decreasing.
class FlatnessProfile {
 public:
  static FlatnessProfile linear(std::int64_t a, std::int64_t b);
  static FlatnessProfile table(std::vector<std::int64_t> values);
  /// "LINEAR(a,b)" or a comma-separated table "f0,f1,...".
  static FlatnessProfile parse(std::string_view text);

  std::int64_t at(int k) const;
  /// Largest k with a defined value, or -1 for unbounded (LINEAR).
  int defined_up_to() const noexcept;
  std::string describe() const;

 private:
  bool linear_ = true;
  std::int64_t a_ = 0, b_ = 1;
  std::vector<std::int64_t> table_;
};

struct FlatViolation {
  int part = 0;  // 1-based
  Vertex vertex = 0;
  int k = 0;
  std::int64_t count = 0;
  std::int64_t bound = 0;
};

struct FlatCheck {
  bool flat = true;
  /// First violation in (part, vertex, k) order.
  std::optional<FlatViolation> violation;
};

/// |N^k[v] in G_i intersected with H_i| <= f(k) for every part i, vertex v of
/// G_i = G minus the earlier parts, and k <= k_max.
FlatCheck check_flat(const Graph& g, const Decomposition& d, const FlatnessProfile& f, int k_max);

/// Graph on parts: i ~ j iff an edge joins H_i and H_j. Throws
/// Error(InvalidArgument) if some part does not induce a connected subgraph.
Graph contract(const Graph& g, const Decomposition& d);

/// H_1 first, then H_2, ...; ascending ids within a part.
LinearOrder flatbound_order(const Graph& g, const Decomposition& d);

/// Greedy connected decomposition into shortest paths of the remaining graph.
/// Each new part starts next to the earlier parts; when a component touches
/// two of them, the path joins two vertices adjacent to both. Every part is
/// then (2k+1)-flat; the width is whatever the peeling achieves.
Decomposition peel_shortest_paths(const Graph& g, Vertex root = 1);

enum class BoundFormula {
  PlanarDcol,     // (2 C(k/2+2, 2) + 1)(2k+1)
  GenusDcol,      // (2g + 2 C(k/2+2, 2) + 1)(2k+1)
  TreewidthDcol,  // t C(k/2+t, t) + 1
  FlatboundDcol,  // (t C(k/2+t, t) + 1) f
  MinorFreeFlat,  // (t-3)(2k+1)
  PlanarWcol,     // C(k+2, 2)(2k+1)
  SignatureCount, // (p/2+2)^q
  KiersteadYang,  // col^k
};

struct BoundParams {
  std::int64_t k = 0;
  std::int64_t t = 0;
  std::int64_t g = 0;
  std::int64_t f = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t col = 0;
};

std::optional<BoundFormula> bound_formula_from_name(std::string_view name);
const char* bound_formula_name(BoundFormula f);

/// Exact value; Error(InvalidArgument) on out-of-range parameters,
/// Error(OutOfRange) on 64-bit overflow.
std::uint64_t eval_bound_formula(BoundFormula which, const BoundParams& params);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace edcol
