#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "drg/catalog.hpp"
#include "drg/search.hpp"
#include "drg/verdict.hpp"

namespace drg {

enum class SearchMethod { kAuto, kExactCover, kClique };

struct DecideOptions {
  bool run_search = true;
  std::uint64_t budget = kDefaultBudget;
  SearchMethod method = SearchMethod::kAuto;
  bool canonical = false;
  /// Report the registered verdict for desk-infeasible rows instead of
  /// searching. Ignored when `full` is set.
  bool assume_registered = true;
  /// Run the extended search on desk-infeasible rows.
  bool full = false;
  /// Supplies a graph for an array (used when delegating DO_n to O_n).
  std::function<std::optional<Graph>(const IntersectionArray&)> resolve = build_for_array;
};

/// n such that a is the array of DO_n, if any.
std::optional<int> doubled_odd_parameter(const IntersectionArray& a);

/// Runs rules R0..R10 on the entry. Every cheap rule is evaluated and traced;
/// R8 and R10 run only while the status is still open. A Yes verdict with a
/// graph carries a witness that has been verified as a perfect 1-code.
Verdict decide(const CatalogEntry& entry, const Graph* graph, const DecideOptions& opts = {});

/// Pipeline for a user-supplied array, optionally with a graph.
Verdict decide_array(const IntersectionArray& a, const Graph* graph, const DecideOptions& opts = {});

}  // namespace drg
