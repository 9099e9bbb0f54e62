#pragma once

// Independent reference implementations used only by the tests. They are
// deliberately naive: dense matrices, full enumeration, no shared code with
// the library beyond the Graph adjacency query.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "drg/graph.hpp"

namespace oracle {

constexpr int kInf = 1 << 20;

inline std::vector<std::vector<int>> floyd_warshall(const drg::Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (drg::Vertex u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (drg::Vertex v = 0; v < n; ++v)
      if (g.adjacent(u, v)) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Girth by removing each edge and measuring the distance between its ends.
inline int girth(const drg::Graph& g) {
  int best = kInf;
  for (auto [u, v] : g.edges()) {
    std::vector<int> dist(g.order(), -1);
    std::vector<drg::Vertex> q{u};
    dist[u] = 0;
    for (std::size_t h = 0; h < q.size(); ++h)
      for (drg::Vertex w = 0; w < g.order(); ++w)
        if (g.adjacent(q[h], w) && !(q[h] == u && w == v) && dist[w] < 0) {
          dist[w] = dist[q[h]] + 1;
          q.push_back(w);
        }
    if (dist[v] > 0) best = std::min(best, dist[v] + 1);
  }
  return best;
}

// Intersection numbers by definition over all ordered pairs; empty when the
// graph is not distance-regular.
struct Array {
  std::vector<long long> b, c;
  bool operator==(const Array&) const = default;
};

inline std::optional<Array> intersection_numbers(const drg::Graph& g) {
  const auto d = floyd_warshall(g);
  int diam = 0;
  for (const auto& row : d)
    for (int x : row) diam = std::max(diam, x);
  std::vector<long long> b(static_cast<std::size_t>(diam) + 1, -1), c(static_cast<std::size_t>(diam) + 1, -1);
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const int i = d[x][y];
      long long bi = 0, ci = 0;
      for (std::size_t z = 0; z < n; ++z)
        if (g.adjacent(static_cast<drg::Vertex>(y), static_cast<drg::Vertex>(z))) {
          if (d[x][z] == i + 1) ++bi;
          if (d[x][z] == i - 1) ++ci;
        }
      auto& bs = b[static_cast<std::size_t>(i)];
      auto& cs = c[static_cast<std::size_t>(i)];
      if (bs < 0) bs = bi;
      if (cs < 0) cs = ci;
      if (bs != bi || cs != ci) return std::nullopt;
    }
  Array a;
  for (int i = 0; i < diam; ++i) a.b.push_back(b[static_cast<std::size_t>(i)]);
  for (int i = 1; i <= diam; ++i) a.c.push_back(c[static_cast<std::size_t>(i)]);
  return a;
}

inline bool is_perfect_code(const drg::Graph& g, const std::vector<drg::Vertex>& code) {
  for (drg::Vertex v = 0; v < g.order(); ++v) {
    int dominated = 0;
    for (drg::Vertex c : code) dominated += (c == v || g.adjacent(c, v));
    if (dominated != 1) return false;
  }
  return true;
}

// Perfect 1-codes by naive enumeration: all vertex sets of size n/(k+1)
// in lexicographic order whose members are pairwise at distance >= 3. Such
// a set has disjoint closed neighborhoods covering exactly n vertices, so it
// is a perfect 1-code. `limit` caps the number of codes returned (0 = all).
inline std::vector<std::vector<drg::Vertex>> perfect_codes(const drg::Graph& g, std::size_t limit = 0) {
  std::vector<std::vector<drg::Vertex>> out;
  const std::size_t n = g.order();
  const auto k = g.degree(0);
  for (drg::Vertex v = 0; v < n; ++v)
    if (g.degree(v) != k) return out;
  if (n % (k + 1) != 0) return out;
  const std::size_t m = n / (k + 1);
  const auto d = floyd_warshall(g);
  std::vector<drg::Vertex> cur;
  std::function<bool(drg::Vertex)> rec = [&](drg::Vertex from) {
    if (cur.size() == m) {
      out.push_back(cur);
      return limit == 0 || out.size() < limit;
    }
    for (drg::Vertex v = from; v + (m - cur.size()) <= n; ++v) {
      if (std::any_of(cur.begin(), cur.end(), [&](drg::Vertex c) { return d[c][v] < 3; })) continue;
      cur.push_back(v);
      const bool more = rec(v + 1);
      cur.pop_back();
      if (!more) return false;
    }
    return true;
  };
  rec(0);
  return out;
}

// Sorted adjacency eigenvalues by dense symmetric diagonalization.
inline std::vector<double> adjacency_eigenvalues(const drg::Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return ev;
}

inline bool has_eigenvalue_near(const std::vector<double>& ev, double x, double tol = 1e-8) {
  return std::any_of(ev.begin(), ev.end(), [&](double e) { return std::abs(e - x) < tol; });
}

}  // namespace oracle
