#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace edcol {

enum class Status { Pass, Fail, Skipped };

/// How `computed` must relate to `expected` for a check to pass.
enum class Relation { Equal, AtMost, AtLeast };

struct ReportEntry {
  std::string name;
  std::string expected;
  std::string computed;
  Status status = Status::Pass;
  std::string reason;  // for Skipped
};

class Report {
 public:
  void add(ReportEntry entry) { entries_.push_back(std::move(entry)); }
  /// Records computed vs expected; expected is rendered with a "<=" or ">="
  /// prefix for inequality checks.
  void check(const std::string& name, std::int64_t expected, std::int64_t computed, Relation rel);
  void check_true(const std::string& name, bool ok, const std::string& computed = "");
  void skip(const std::string& name, const std::string& expected, const std::string& reason);
  void merge(const Report& other);

  const std::vector<ReportEntry>& entries() const noexcept { return entries_; }
  /// Entries in name order (stable for equal names).
  std::vector<ReportEntry> sorted() const;
  bool any_fail() const;
  int count(Status s) const;
  const ReportEntry* find(const std::string& name) const;

 private:
  std::vector<ReportEntry> entries_;
};

/// "PASS", "FAIL" or "SKIPPED(<reason>)".
std::string status_text(const ReportEntry& e);

enum class ReportFormat { Tsv, JsonLines };

std::string emit_report(const Report& r, ReportFormat format);

}  // namespace edcol
