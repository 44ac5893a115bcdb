#include "doctest.h"
#include "edcol/report.hpp"

using namespace edcol;

TEST_CASE("report emission") {
  Report r;
  CHECK(emit_report(r, ReportFormat::Tsv) == "name\texpected\tcomputed\tstatus\n");
  CHECK(emit_report(r, ReportFormat::JsonLines).empty());
  r.check("b", 5, 5, Relation::Equal);
  CHECK(emit_report(r, ReportFormat::Tsv) == "name\texpected\tcomputed\tstatus\nb\t5\t5\tPASS\n");
  r.check("a", 3, 4, Relation::AtMost);
  r.skip("c", "9", "budget");
  CHECK(emit_report(r, ReportFormat::Tsv) ==
        "name\texpected\tcomputed\tstatus\na\t<=3\t4\tFAIL\nb\t5\t5\tPASS\nc\t9\t-\tSKIPPED(budget)\n");
  std::string jsonl = emit_report(r, ReportFormat::JsonLines);
  CHECK(jsonl.substr(0, jsonl.find('\n')) ==
        "{\"name\":\"a\",\"expected\":\"<=3\",\"computed\":\"4\",\"status\":\"FAIL\"}");
  CHECK(r.any_fail());
  CHECK(r.count(Status::Skipped) == 1);
}

TEST_CASE("relations") {
  Report r;
  r.check("ge", 4, 4, Relation::AtLeast);
  r.check("le", 4, 5, Relation::AtMost);
  r.check_true("t", true);
  CHECK(r.find("ge")->status == Status::Pass);
  CHECK(r.find("ge")->expected == ">=4");
  CHECK(r.find("le")->status == Status::Fail);
  CHECK(r.find("t")->computed == "true");
  CHECK(r.find("missing") == nullptr);
}
