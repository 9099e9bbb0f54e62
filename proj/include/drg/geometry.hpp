#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "drg/graph.hpp"

namespace drg {

/// GF(q) for q in {2, 3, 4} by lookup tables. Elements are 0..q-1; for
/// GF(4), 2 is a root w of x^2 + x + 1 and 3 = w + 1.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int order() const { return q_; }
  int add(int a, int b) const { return add_[a][b]; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  /// Multiplicative inverse; a must be nonzero.
  int inv(int a) const { return inv_[a]; }

 private:
  int q_;
  std::array<std::array<int, 4>, 4> add_{};
  std::array<std::array<int, 4>, 4> mul_{};
  std::array<int, 4> neg_{};
  std::array<int, 4> inv_{};
};

/// Point-line incidence structure. Lines are sorted point-index lists.
struct Geometry {
  std::string name;
  std::vector<std::string> point_labels;
  std::vector<std::string> line_labels;
  std::vector<std::vector<Vertex>> lines;
  int s = 0;  // points per line minus one
  int t = 0;  // lines per point minus one

  std::size_t num_points() const { return point_labels.size(); }
  std::size_t num_lines() const { return lines.size(); }

  /// lines_through()[p] = indices of lines containing p, ascending.
  std::vector<std::vector<Vertex>> lines_through() const;

  /// Throws GeometryError unless every line has s+1 points, every point is
  /// on t+1 lines and two points share at most one line.
  void validate() const;
};

Geometry projective_plane(int q);
/// W(q): totally isotropic lines of PG(3,q) for x0y1 - x1y0 + x2y3 - x3y2.
Geometry symplectic_gq(int q);
/// Split Cayley hexagon H(q) on the quadric X0X4 + X1X5 + X2X6 = X3^2.
Geometry split_cayley_hexagon(int q);
/// GQ(2,2) with points = 2-subsets of {1..6} and lines = perfect matchings of K_6.
Geometry duad_syntheme_gq();
/// AG(2,q) with one parallel class of lines (the verticals) removed.
Geometry affine_plane_minus_parallel_class(int q);
/// Points and lines of a projective plane become points; flags become lines.
Geometry double_geometry(const Geometry& plane);
Geometry dual(const Geometry& g);

/// Bipartite graph on points (0..P-1) followed by lines (P..P+L-1).
Graph incidence_graph(const Geometry& g);
/// Collinearity graph on the points.
Graph point_graph(const Geometry& g);

}  // namespace drg
