#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "drg/catalog.hpp"
#include "drg/code.hpp"
#include "drg/decide.hpp"
#include "drg/geometry.hpp"

namespace drg {

/// Computed n, diameter and girth of a built row graph.
struct BuiltStructure {
  std::size_t n = 0;
  int diameter = 0;
  int girth = 0;
};

struct ReportRow {
  CatalogEntry entry;
  Verdict verdict;
  bool match = false;         // computed status equals the registered one
  bool reason_match = false;  // the registered reason is reproduced
  std::optional<BuiltStructure> built;
  bool structure_match = true;  // n, d, g columns agree with the built graph
  double seconds = 0;
};

/// Tags decided by array arithmetic alone (as opposed to searches).
bool is_array_level(const CatalogEntry& e);

/// Whether the verdict reproduces the entry's reason: the cited rule fired
/// with the registered status, or for search-backed tags a search decided
/// (with a verified witness for Yes).
bool reason_matches(const CatalogEntry& e, const Verdict& v);

struct ReportOptions {
  DecideOptions decide;
  bool build_graphs = true;
};

ReportRow evaluate_row(const CatalogEntry& e, const ReportOptions& opts);
std::vector<ReportRow> run_report(const std::vector<CatalogEntry>& entries, const ReportOptions& opts);

std::string render_markdown(const std::vector<ReportRow>& rows);
std::string render_csv(const std::vector<ReportRow>& rows);
std::string render_json(const std::vector<ReportRow>& rows);

nlohmann::ordered_json verdict_json(const std::string& name, const Verdict& v,
                                    const std::optional<Reason>& registered_reason);
nlohmann::ordered_json graph_json(const Graph& g);
nlohmann::ordered_json geometry_json(const Geometry& geom);
nlohmann::ordered_json code_report_json(const CodeReport& r);

}  // namespace drg
