#include "edcol/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace edcol {

void Report::check(const std::string& name, std::int64_t expected, std::int64_t computed, Relation rel) {
  bool ok = false;
  std::string shown = std::to_string(expected);
  switch (rel) {
    case Relation::Equal: ok = computed == expected; break;
    case Relation::AtMost:
      ok = computed <= expected;
      shown = "<=" + shown;
      break;
    case Relation::AtLeast:
      ok = computed >= expected;
      shown = ">=" + shown;
      break;
  }
  add({name, shown, std::to_string(computed), ok ? Status::Pass : Status::Fail, {}});
}

void Report::check_true(const std::string& name, bool ok, const std::string& computed) {
  add({name, "true", computed.empty() ? (ok ? "true" : "false") : computed, ok ? Status::Pass : Status::Fail, {}});
}

void Report::skip(const std::string& name, const std::string& expected, const std::string& reason) {
  add({name, expected, "-", Status::Skipped, reason});
}

void Report::merge(const Report& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

std::vector<ReportEntry> Report::sorted() const {
  std::vector<ReportEntry> out = entries_;
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

bool Report::any_fail() const { return count(Status::Fail) > 0; }

int Report::count(Status s) const {
  return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [s](const auto& e) { return e.status == s; }));
}

const ReportEntry* Report::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

std::string status_text(const ReportEntry& e) {
  switch (e.status) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED(" + e.reason + ")";
  }
  return "FAIL";
}

std::string emit_report(const Report& r, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Tsv) {
    out << "name\texpected\tcomputed\tstatus\n";
    for (const auto& e : r.sorted())
      out << e.name << '\t' << e.expected << '\t' << e.computed << '\t' << status_text(e) << '\n';
  } else {
    for (const auto& e : r.sorted()) {
      nlohmann::ordered_json j;
      j["name"] = e.name;
      j["expected"] = e.expected;
      j["computed"] = e.computed;
      j["status"] = status_text(e);
      out << j.dump() << '\n';
    }
  }
  return out.str();
}

}  // namespace edcol
