#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "edcol/coloring.hpp"
#include "edcol/deadline.hpp"
#include "edcol/graph.hpp"

namespace edcol {

enum class ChiStatus { Exact, Bounds };

struct ChiResult {
  ChiStatus status = ChiStatus::Exact;
  /// Equal to `upper` when exact.
  int value = 0;
  int lower = 0;
  int upper = 0;
  /// Proper colouring with `upper` colours.
  Coloring witness;
  /// Clique certifying `lower` (when lower came from a clique).
  std::vector<Vertex> clique;
};

/// DSATUR branch and bound: the largest clique found seeds colours 1..w,
/// branching takes the highest saturation, then degree, then smallest id.
/// An expired deadline downgrades the answer to Bounds, never to a wrong
/// exact value.
/// `known_lower` is an externally certified lower bound (see
/// certified_lower_bound); the search stops as soon as it is met.
ChiResult chromatic_number(const Graph& h, Deadline deadline = Deadline::unlimited(), int known_lower = 0);

struct CliqueResult {
  int value = 0;
  std::vector<Vertex> clique;
  bool optimal = true;
};

/// Maximum clique by colour-bounded branch and bound.
CliqueResult clique_number(const Graph& h, Deadline deadline = Deadline::unlimited());

/// Certificate for chi(h) >= c + 2. `first` and `second` are disjoint and
/// each needs at least c colours; `apex` is adjacent to all of both, `left`
/// to all of `first`, `right` to all of `second`, and left ~ right. Either
/// A u B carries c+1 colours and the apex adds one, or both use the same c
/// colours and left, right need two more.
struct ApexPairCertificate {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
  Vertex apex = 0;
  Vertex left = 0;
  Vertex right = 0;
  /// Certificates for h[first] / h[second] in their own numbering (vertex i
  /// of the part is the i-th entry of `first` / `second`). Without one, the
  /// part is bounded by its exact chromatic number.
  std::shared_ptr<ApexPairCertificate> first_part;
  std::shared_ptr<ApexPairCertificate> second_part;
};

/// Checks every condition of the certificate against h and returns the
/// certified bound; nullopt if a condition fails or a part's chromatic
/// number cannot be settled before the deadline.
std::optional<int> certified_lower_bound(const Graph& h, const ApexPairCertificate& cert,
                                         Deadline deadline = Deadline::unlimited());

}  // namespace edcol
