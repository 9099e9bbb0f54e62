#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drg/exact_cover.hpp"
#include "drg/graph.hpp"

namespace drg {

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

enum class SearchStatus { kYes, kNo, kUnknown };

struct SearchResult {
  SearchStatus status = SearchStatus::kUnknown;
  std::vector<Vertex> witness;  // ascending; set when kYes
  std::uint64_t nodes = 0;
  std::string method;  // "divisibility", "exact-cover", "clique"
  std::string detail;
  std::optional<ExactCoverCheckpoint> checkpoint;  // budget exhausted, serial runs only
};

enum class SearchMode { kExistence, kCanonical };

struct SearchOptions {
  SearchMode mode = SearchMode::kExistence;
  std::uint64_t budget = kDefaultBudget;
  /// Parallel top-level fan-out (existence mode only).
  bool parallel = true;
  const ExactCoverCheckpoint* resume = nullptr;
};

/// Exact-cover instance whose solutions are the perfect 1-codes of g: items
/// are vertices, option v is the closed neighborhood N[v].
ExactCoverSolver perfect_code_instance(const Graph& g);

/// Perfect 1-code search on a connected regular graph. Canonical mode
/// returns the lexicographically smallest code and runs single-threaded.
SearchResult search_perfect_1(const Graph& g, const SearchOptions& opts = {});

/// Diameter-3 route: cliques of size n/(k+1) in the distance-3 graph, each
/// re-verified as a perfect 1-code.
SearchResult search_via_distance3_clique(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// Base-graph view of a code in a line graph.
struct EdgeCodeReport {
  std::vector<Edge> edges;
  bool is_matching = false;                     // pairwise vertex-disjoint
  bool is_induced = false;                      // no base edge joins two code edges
  bool disjoint_closed_neighborhoods = false;   // closed edge neighborhoods pairwise disjoint
  bool is_vertex_cover = false;
  bool valid() const { return is_matching && is_induced && disjoint_closed_neighborhoods && is_vertex_cover; }
};

/// Maps a code of L(G) to its edge set in G and checks it. Throws CodeError
/// for an empty code or vertices outside the line graph.
EdgeCodeReport code_to_edge_set(const LineGraph& lg, const std::vector<Vertex>& code);
/// Inverse of code_to_edge_set; throws CodeError for edges not in the base.
std::vector<Vertex> edge_set_to_code(const LineGraph& lg, const std::vector<Edge>& edges);

/// Observation on a code of the line graph of a bipartite graph: the
/// vertices of one side missed by the code edges, restricted to the matched
/// vertices of the other side, form an m x m grid (two classes of m disjoint
/// blocks of size m, blocks of different classes meeting once). Returns the
/// side for which this holds. Informational; codes need not have it.
std::optional<int> unmatched_side_forms_grid(const LineGraph& lg, const std::vector<Vertex>& code);

struct EdgePackingResult {
  std::vector<Edge> edges;  // witness packing
  std::size_t size = 0;
  std::size_t upper_bound = 0;
  bool optimal = false;     // search completed (size proven maximum)
  bool reached_hint = false;
  std::uint64_t nodes = 0;
};

/// Largest set of edges with pairwise disjoint closed edge neighborhoods
/// (an independent set in the square of the line graph), by branch and
/// bound. Stops once `upper_bound_hint` is reached (0 = run to optimality).
EdgePackingResult max_disjoint_closed_edge_neighborhoods(const Graph& g, std::size_t upper_bound_hint = 0,
                                                         std::uint64_t budget = kDefaultBudget);

/// Union of the fibers selected by a perfect 1-code of the folded graph.
/// Throws CodeError when the folded code is not perfect or the lift fails.
std::vector<Vertex> antipodal_code_lift(const Graph& g, const std::vector<std::vector<Vertex>>& fibers,
                                        const std::vector<Vertex>& folded_code);

/// Resumable refutation run on L(IG(H(3))): 1456 vertices, target 208.
SearchResult ghx33_nonexistence_search(const LineGraph& lg, std::uint64_t budget,
                                       const ExactCoverCheckpoint* resume = nullptr);

}  // namespace drg
