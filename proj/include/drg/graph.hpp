#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "drg/vertex_set.hpp"

namespace drg {

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Adjacency is held twice: as bit rows (for
/// set algebra in the searches) and as sorted neighbor lists (for BFS).
class Graph {
 public:
  Graph() = default;
  /// Builds from an edge list. Duplicate edges are merged; loops and
  /// out-of-range endpoints throw GraphError.
  Graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {});

  std::size_t order() const { return n_; }
  std::size_t size() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const VertexSet& row(Vertex v) const { return rows_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {nbr_.data() + offset_[v], nbr_.data() + offset_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offset_[v + 1] - offset_[v]; }

  /// Common valency when the graph is regular.
  std::optional<std::size_t> regular_degree() const;

  /// Edges (u,v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of v, or its decimal index when unlabeled.
  std::string label(Vertex v) const;

  /// Closed neighborhood N[v].
  VertexSet closed_neighborhood(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<std::size_t> offset_{0};
  std::vector<Vertex> nbr_;
  std::vector<std::string> labels_;
};

inline constexpr std::uint8_t kUnreachable = std::numeric_limits<std::uint8_t>::max();
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

/// All-pairs distances of a connected graph.
struct DistanceTable {
  std::size_t n = 0;
  std::vector<std::uint8_t> dist;  // row-major n x n
  int diameter = 0;
  int girth = kInfiniteGirth;  // kInfiniteGirth for forests

  int at(Vertex u, Vertex v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
  std::span<const std::uint8_t> row(Vertex u) const {
    return {dist.data() + static_cast<std::size_t>(u) * n, n};
  }
  /// Γ_i(v): vertices at distance exactly i from v.
  std::vector<Vertex> sphere(Vertex v, int i) const;
};

/// Distances from v. Throws GraphError naming an unreachable vertex.
std::vector<int> bfs_distances(const Graph& g, Vertex v);

/// Full table with diameter and girth; OpenMP-parallel over BFS roots.
DistanceTable distance_table(const Graph& g);
/// Single-threaded reference for distance_table.
DistanceTable distance_table_serial(const Graph& g);

bool is_connected(const Graph& g);

/// Line graph with its edge map: vertex i of the result is edge_map[i] of
/// the base graph, in lexicographic endpoint order.
struct LineGraph {
  Graph graph;
  std::vector<Edge> edge_map;
};
LineGraph line_graph(const Graph& g);

/// u ~ v iff dist(u,v) = i. Requires 1 <= i <= diameter.
Graph distance_i_graph(const Graph& g, int i);
Graph distance_i_graph(const Graph& g, const DistanceTable& t, int i);

/// Classes of the "distance 0 or d" relation when it is an equivalence with
/// equal class sizes; std::nullopt otherwise. Classes are sorted and listed
/// by their smallest member.
std::optional<std::vector<std::vector<Vertex>>> antipodal_classes(const Graph& g);

/// Quotient on the given fibers; fiber j becomes vertex j. Throws GraphError
/// when `fibers` is not a partition of the vertex set.
Graph folded_graph(const Graph& g, const std::vector<std::vector<Vertex>>& fibers);

/// Proper 2-coloring with vertex 0 on side 0, or nullopt if not bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// Distance-2 graph on one part of a connected bipartite graph. Side 0 is
/// the part containing vertex 0; vertices keep their relative order.
Graph bipartite_half(const Graph& g, int side);

/// Induced subgraph; vertex j of the result is S[j] (S is used as given).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);
Graph complement(const Graph& g);

/// Edge-list text format: "n m" then m lines "u v".
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace drg
