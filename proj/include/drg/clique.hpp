#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "drg/graph.hpp"

namespace drg {

struct CliqueSearchStats {
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;
};

/// Visits every clique of exactly `size` vertices (each once, as an ascending
/// vertex list) until `visit` returns false. Branch and bound with a greedy
/// coloring bound.
CliqueSearchStats for_each_clique(const Graph& g, std::size_t size, std::uint64_t budget,
                                  const std::function<bool(const std::vector<Vertex>&)>& visit);

struct MaxCliqueResult {
  std::vector<Vertex> clique;  // best found, ascending
  std::size_t upper_bound = 0;  // == clique.size() when proven optimal
  std::uint64_t nodes = 0;
  bool optimal() const { return upper_bound == clique.size(); }
};

/// Maximum clique by branch and bound with coloring bounds. Stops early once
/// `stop_at` is reached (0 = never).
MaxCliqueResult max_clique(const Graph& g, std::uint64_t budget, std::size_t stop_at = 0);

}  // namespace drg
