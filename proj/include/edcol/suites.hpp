#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "edcol/report.hpp"

namespace edcol {

enum class Suite { PaperTable, FamilyProperties, ColoringProperties, OrderSandwich, DecompChecks };

/// Named groups of report entries. Each suite runs a fixed list of groups.
enum class CheckGroup {
  ChiG4,               // chi_g4_d3
  ChiG5,               // chi_g5_d3*
  G4Structure,         // g4_*
  LikCounts,           // lik_*
  SnpBounds,           // snp_*
  AkpBounds,           // akp_*
  TreePowers,          // tree_*
  BoundTable,          // bound_*
  ExactDistanceSweep,  // sweep_dist_*
  SignatureSweep,      // sweep_sig_*
  OrderSandwich,       // sandwich_*
  InfinityIdentities,  // inf_*
  BipartiteParity,     // bipartite_*
  DecompPipeline,      // decomp_*
  GkpCliques,          // gkp_*
  GtGrowth,            // chi_g6_d3, g5_*
};

inline constexpr std::uint64_t kDefaultSeed = 20170131;
inline constexpr std::int64_t kDefaultBudgetMs = 600000;

struct SuiteSpec {
  Suite suite = Suite::PaperTable;
  /// Per check group; <= 0 means unlimited.
  std::int64_t budget_ms = kDefaultBudgetMs;
  std::uint64_t seed = kDefaultSeed;
};

std::optional<Suite> suite_from_name(std::string_view name);
const char* suite_name(Suite s);
std::vector<CheckGroup> suite_groups(Suite s);

/// Runs every group of the suite; the first entry, "seed", records the seed.
Report run_suite(const SuiteSpec& spec);
Report run_group(CheckGroup group, std::int64_t budget_ms = kDefaultBudgetMs, std::uint64_t seed = kDefaultSeed);

}  // namespace edcol
