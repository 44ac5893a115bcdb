#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edcol/chi.hpp"
#include "edcol/deadline.hpp"
#include "edcol/graph.hpp"
#include "edcol/orderings.hpp"
#include "edcol/report.hpp"

namespace edcol {

enum class Family { Path, Cycle, Complete, RegTree, Gkp, Lik, Snp, Akp, G4, G5, Gt, Subdivision };

/// Parameters per family (in order):
///   PATH n, CYCLE n, COMPLETE n, REG_TREE k r, GKP k p, LIK i k, SNP n p,
///   AKP k p, G4 -, G5 -, GT t, SUBDIVISION s (with `base`).
/// G5 uses `base` when set, G_4 otherwise.
struct FamilySpec {
  Family family = Family::Path;
  std::vector<int> params;
  std::optional<Graph> base;
};

struct FamilyOutput {
  Graph graph;
  std::optional<LinearOrder> prescribed_order;
};

std::optional<Family> family_from_name(std::string_view name);
const char* family_name(Family f);

/// Throws Error(InvalidArgument) on parameter-range violations.
FamilyOutput generate(const FamilySpec& spec);

/// Path on n vertices 1-2-...-n.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// k-regular tree of radius r; root 1, then breadth-first numbering.
Graph regular_tree(int k, int r);
/// T_{k,floor(p/2)} with the gadget paths: tree vertices first, then for each
/// tree edge (by child id) its path of length l+1, and for odd p the path of
/// length l+2.
Graph gkp_graph(int k, int p);
/// Branch vertices 1..4, subdivision vertices per K_4 edge in lexicographic
/// edge order, then the four pendant sets.
Graph lik_graph(int i, int k);
/// Branch vertices 1..n, then the p-1 inner vertices of each subdivided edge
/// (lexicographic edge order, walking from the smaller branch vertex).
/// Prescribed order: identity.
FamilyOutput snp_graph(int n, int p);
/// Path 1..p-1, then the k apex vertices. Prescribed order: 1, p-1, rest.
FamilyOutput akp_graph(int k, int p);
/// Every edge replaced by a path of length s+1: original ids kept, new
/// vertices appended per sorted edge.
Graph subdivide(const Graph& g, int s);

/// The bundled G_4 (EDCOL_DATA_DIR/g4.gr), or the file at `path`.
Graph load_g4();
Graph load_g4(const std::string& path);
std::string default_g4_path();

/// Structural assertions of the G_4 lower-bound argument on g's exact
/// distance-3 graph, plus chi = 5. Entries are prefixed "g4_".
Report validate_g4(const Graph& g, Deadline deadline = Deadline::unlimited());

/// Two copies of f, then y'1 w'1 z' w'2 y'2, then the length-2 attachment
/// paths (first copy, then second). 4|V(f)|+5 vertices.
Graph build_g5(const Graph& f);
/// G_4 for t = 4, iterating build_g5 above.
Graph build_gt(int t);

/// Lower-bound certificate for the exact distance-3 graph of G_4 or of a
/// graph produced by build_g5/build_gt, read off the vertex labels: the two
/// cycles C^1, C^2 with z, y^1, y^2 for G_4; the two copies with z', y'_1,
/// y'_2 (and nested certificates for the copies) otherwise. nullopt when
/// the labels do not match either construction.
std::optional<ApexPairCertificate> construction_certificate(const Graph& g);

}  // namespace edcol
