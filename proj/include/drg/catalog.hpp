#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drg/graph.hpp"
#include "drg/intersection_array.hpp"
#include "drg/verdict.hpp"

namespace drg {

/// One row of the reference tables.
struct CatalogEntry {
  int table = 0;  // 1..4
  std::string name;
  IntersectionArray array;
  long long n = 0;
  int d = 0;
  int g = 0;
  Status expected = Status::kUnknown;
  Reason reason = Reason::kEq1;
  std::vector<std::string> builders;  // empty for array-only rows
  /// Array of the base graph when the row is a line graph L(base).
  std::optional<IntersectionArray> line_graph_base;
  /// Search is out of reach by default; the registered verdict is reported
  /// with explicit provenance unless a full run is requested.
  bool desk_infeasible = false;

  long long valency() const { return array.valency(); }
  bool has_builder() const { return !builders.empty(); }
};

/// All 61 rows in table order.
const std::vector<CatalogEntry>& catalog();

/// Rows of one valency group: 3, 4, 5, 6, 7, or 67 for the combined
/// valency 6/7 table. Throws CatalogError otherwise.
std::vector<CatalogEntry> rows(int valency);
std::vector<CatalogEntry> rows_for_table(int table);

const CatalogEntry* find_entry(std::string_view name);

/// Builds a named graph and verifies it against its registered array.
/// Accepts row builder names and the families C_n, K_n, K_{a,b,...},
/// K*_{n,n}, Q_n, O_n, DO_n, T(m), P(q). Throws CatalogError for unknown
/// names and for a failed verification, naming the first mismatch.
Graph build(std::string_view name);

/// Names accepted by build() besides the family patterns.
std::vector<std::string> builder_names();

/// Intersection array registered for a buildable name, if any.
std::optional<IntersectionArray> expected_array(std::string_view name);

/// A buildable graph with the given array, preferring catalog rows.
std::optional<Graph> build_for_array(const IntersectionArray& a);

/// JSON document listing every entry.
std::string catalog_json();

}  // namespace drg
