// Prints one verdict line per acceptance criterion.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edcol/suites.hpp"

namespace {

using edcol::CheckGroup;

struct Criterion {
  int id;
  const char* title;
  std::vector<CheckGroup> groups;
  std::vector<std::string> prefixes;
  std::int64_t threshold_ms;
  bool list_values;  // print every entry rather than a tally
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "chi of G4 exact distance 3", {CheckGroup::ChiG4}, {"chi_g4_d3"}, 1000, true},
      {2, "chi of G5 exact distance 3", {CheckGroup::ChiG5}, {"chi_g5_d3"}, 300000, true},
      {3, "G4 structure", {CheckGroup::G4Structure}, {"g4_"}, 1000, false},
      {4, "L_ik counts", {CheckGroup::LikCounts}, {"lik_"}, 3000, true},
      {5, "S_np bounds", {CheckGroup::SnpBounds}, {"snp_"}, 10000, true},
      {6, "A_kp bounds", {CheckGroup::AkpBounds}, {"akp_"}, 10000, true},
      {7, "regular tree powers", {CheckGroup::TreePowers}, {"tree_"}, 30000, true},
      {8, "bound formulas", {CheckGroup::BoundTable}, {"bound_"}, 100, true},
      {9, "exact distance colouring sweep", {CheckGroup::ExactDistanceSweep}, {"sweep_dist_"}, 300000, false},
      {10, "signature colouring sweep", {CheckGroup::SignatureSweep}, {"sweep_sig_"}, 300000, false},
      {11, "order sandwich", {CheckGroup::OrderSandwich}, {"sandwich_"}, 600000, false},
      {12, "infinity identities", {CheckGroup::InfinityIdentities}, {"inf_"}, 60000, false},
      {13, "bipartite parity", {CheckGroup::BipartiteParity}, {"bipartite_"}, 60000, false},
      {14, "decomposition pipeline", {CheckGroup::DecompPipeline}, {"decomp_"}, 120000, false},
  };
  return all;
}

bool matches(const std::string& name, const std::vector<std::string>& prefixes) {
  for (const auto& p : prefixes)
    if (name.rfind(p, 0) == 0) return true;
  return false;
}

bool run(const Criterion& c, std::uint64_t seed) {
  auto start = std::chrono::steady_clock::now();
  edcol::Report report;
  for (CheckGroup g : c.groups) report.merge(edcol::run_group(g, c.threshold_ms, seed));
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  int pass = 0, fail = 0, skipped = 0;
  std::ostringstream values, failures;
  for (const auto& e : report.sorted()) {
    if (!matches(e.name, c.prefixes)) continue;
    switch (e.status) {
      case edcol::Status::Pass: ++pass; break;
      case edcol::Status::Fail:
        ++fail;
        failures << ' ' << e.name << "=" << e.computed << "(expected " << e.expected << ")";
        break;
      case edcol::Status::Skipped: ++skipped; break;
    }
    if (c.list_values) values << ' ' << e.name << "=" << e.computed;
  }
  bool ok = fail == 0 && skipped == 0 && pass > 0 && ms <= c.threshold_ms;
  std::cout << "criterion " << c.id << '\t' << (ok ? "PASS" : "FAIL") << '\t' << c.title << '\t' << "pass=" << pass
            << " fail=" << fail << " skipped=" << skipped;
  if (c.list_values) std::cout << " |" << values.str();
  if (fail > 0) std::cout << " | failing:" << failures.str();
  std::cout << '\t' << ms << " ms (limit " << c.threshold_ms << " ms)\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  std::uint64_t seed = edcol::kDefaultSeed;
  app.add_option("--criterion", only, "Run a single criterion (1-14)")->check(CLI::Range(1, 14));
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    all_ok = run(c, seed) && all_ok;
  }
  return all_ok ? 0 : 1;
}
