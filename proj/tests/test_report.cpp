#include <sstream>

#include "json.hpp"

#include "doctest.h"
#include "drg/report.hpp"

using namespace drg;

TEST_SUITE("report") {

TEST_CASE("all rows match their registered verdicts") {
  const auto rows = run_report(catalog(), ReportOptions{});
  REQUIRE(rows.size() == 61);
  for (const auto& r : rows) {
    CHECK_MESSAGE(r.match, r.entry.name);
    CHECK_MESSAGE(r.structure_match, r.entry.name);
    if (r.entry.desk_infeasible) {
      CHECK(r.verdict.rule == Rule::kAssumed);
      CHECK_FALSE(r.reason_match);
    } else {
      CHECK_MESSAGE(r.reason_match, r.entry.name);
    }
  }
}

TEST_CASE("renderers") {
  const auto rows = run_report(rows_for_table(1), ReportOptions{});
  const std::string md = render_markdown(rows);
  CHECK(md.find("| Coxeter |") != std::string::npos);
  std::istringstream csv(render_csv(rows));
  std::string line;
  std::size_t lines = 0;
  while (std::getline(csv, line)) ++lines;
  CHECK(lines == rows.size() + 1);
  const auto j = nlohmann::json::parse(render_json(rows));
  CHECK(j.size() == rows.size());
  CHECK(j[0].contains("verdict"));
  CHECK(j[0]["verdict"]["trace"].is_array());
}

TEST_CASE("reason matching") {
  const CatalogEntry* e = find_entry("Heawood");
  REQUIRE(e);
  Verdict v;
  v.status = Status::kNo;
  CHECK_FALSE(reason_matches(*e, v));
  v.trace.push_back({Rule::kDivisibility, Outcome::kNo, ""});
  CHECK(reason_matches(*e, v));
  const CatalogEntry* cox = find_entry("Coxeter");
  REQUIRE(cox);
  Verdict y;
  y.status = Status::kYes;
  y.trace.push_back({Rule::kSearch, Outcome::kYes, ""});
  CHECK_FALSE(reason_matches(*cox, y));
  y.witness_verified = true;
  CHECK(reason_matches(*cox, y));
}

}
