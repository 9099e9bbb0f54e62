#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drg/graph.hpp"

namespace drg {

/// A vertex subset of a host graph, kept sorted and duplicate-free.
class Code {
 public:
  /// Throws CodeError on duplicates or out-of-range vertices.
  Code(const Graph& host, std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Graph& host() const { return *host_; }

 private:
  const Graph* host_;
  std::vector<Vertex> vertices_;
};

/// Neighbor counts of one level C_l of a code's distance partition.
struct LevelCounts {
  long long c = 0;  // into C_{l-1}
  long long a = 0;  // inside C_l
  long long b = 0;  // into C_{l+1}
  friend bool operator==(const LevelCounts&, const LevelCounts&) = default;
};

struct RegularityViolation {
  int level = 0;
  Vertex vertex = 0;     // first vertex whose counts differ
  LevelCounts expected;  // counts of the level's first vertex
  LevelCounts found;
};

struct CodeReport {
  std::size_t size = 0;
  bool is_independent = false;
  bool is_perfect_1 = false;
  std::optional<int> min_distance;  // needs at least two code vertices
  int covering_radius = 0;
  bool completely_regular = false;
  std::vector<LevelCounts> levels;  // one per level when completely regular
  std::optional<RegularityViolation> violation;
  /// First vertex outside the code with zero or several code neighbors.
  std::optional<Vertex> cover_violation;
  std::size_t cover_violation_count = 0;
};

/// C independent and every vertex outside C has exactly one neighbor in C.
bool verify_perfect_1(const Graph& g, const std::vector<Vertex>& c);

/// Full classification. Requires a connected host and a nonempty code.
CodeReport classify_code(const Graph& g, const std::vector<Vertex>& c);

/// "3,4,5" style single-line format.
std::vector<Vertex> parse_code(const std::string& line);
std::string format_code(const std::vector<Vertex>& c);

}  // namespace drg
