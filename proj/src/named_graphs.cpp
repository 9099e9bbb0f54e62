#include "drg/named_graphs.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>

#include "drg/error.hpp"
#include "drg/geometry.hpp"

namespace drg::graphs {

namespace {

// k-subsets of {0..m-1} as bitmasks in colex order (increasing mask value).
std::vector<std::uint32_t> colex_subsets(int m, int k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
    if (std::popcount(mask) == k) out.push_back(mask);
  return out;
}

std::string subset_label(std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; mask >> i; ++i)
    if (mask >> i & 1u) {
      s += (first ? "" : ",") + std::to_string(i);
      first = false;
    }
  return s + "}";
}

// Cayley-style graph on Z_m x Z_m (or Z_m) from a connection set.
Graph circulant(std::size_t n, const std::vector<std::size_t>& connection) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t s : connection) {
      const std::size_t w = (v + s) % n;
      if (v != w) edges.emplace_back(static_cast<Vertex>(std::min(v, w)), static_cast<Vertex>(std::max(v, w)));
    }
  return Graph(n, edges);
}

bool gamma3_connected(const Graph& g) {
  const auto dist = bfs_distances(g, 0);
  std::vector<Vertex> s;
  for (Vertex v = 0; v < g.order(); ++v)
    if (dist[v] == 3) s.push_back(v);
  return is_connected(induced_subgraph(g, s));
}

}  // namespace

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph complete_multipartite(std::size_t parts, std::size_t m) {
  std::vector<Edge> edges;
  const std::size_t n = parts * m;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (u / m != v / m) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph crown(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j) edges.emplace_back(i, static_cast<Vertex>(n + j));
  return Graph(2 * n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  return circulant(n, {1});
}

Graph hypercube(int n) {
  std::vector<Edge> edges;
  const Vertex size = Vertex{1} << n;
  for (Vertex x = 0; x < size; ++x)
    for (int i = 0; i < n; ++i)
      if (const Vertex y = x ^ (Vertex{1} << i); x < y) edges.emplace_back(x, y);
  return Graph(size, edges);
}

Graph folded_cube(int n) {
  const Graph q = hypercube(n - 1);
  auto edges = q.edges();
  const Vertex mask = (Vertex{1} << (n - 1)) - 1;
  for (Vertex x = 0; x < q.order(); ++x)
    if (x < (x ^ mask)) edges.emplace_back(x, x ^ mask);
  return Graph(q.order(), edges);
}

Graph odd(int n) {
  const auto sets = colex_subsets(2 * n - 1, n - 1);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex i = 0; i < sets.size(); ++i) {
    labels.push_back(subset_label(sets[i]));
    for (Vertex j = i + 1; j < sets.size(); ++j)
      if ((sets[i] & sets[j]) == 0) edges.emplace_back(i, j);
  }
  return Graph(sets.size(), edges, labels);
}

Graph doubled_odd(int n) {
  const auto lo = colex_subsets(2 * n - 1, n - 1);
  const auto hi = colex_subsets(2 * n - 1, n);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (auto s : lo) labels.push_back(subset_label(s));
  for (auto s : hi) labels.push_back(subset_label(s));
  for (Vertex i = 0; i < lo.size(); ++i)
    for (Vertex j = 0; j < hi.size(); ++j)
      if ((lo[i] & hi[j]) == lo[i]) edges.emplace_back(i, static_cast<Vertex>(lo.size() + j));
  return Graph(lo.size() + hi.size(), edges, labels);
}

Graph triangular(int m) {
  const auto sets = colex_subsets(m, 2);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (Vertex i = 0; i < sets.size(); ++i) {
    labels.push_back(subset_label(sets[i]));
    for (Vertex j = i + 1; j < sets.size(); ++j)
      if (sets[i] & sets[j]) edges.emplace_back(i, j);
  }
  return Graph(sets.size(), edges, labels);
}

Graph hamming(int d, int q) {
  std::size_t n = 1;
  for (int i = 0; i < d; ++i) n *= static_cast<std::size_t>(q);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      int diff = 0;
      for (Vertex a = u, b = v; a || b; a /= q, b /= q) diff += (a % q) != (b % q);
      if (diff == 1) edges.emplace_back(u, v);
    }
  return Graph(n, edges);
}

Graph paley(int q) {
  if (q == 9) {
    // GF(9) = GF(3)[i]/(i^2+1); element a+bi has index 3a+b.
    auto mul = [](int x, int y) {
      const int a = x / 3, b = x % 3, c = y / 3, d = y % 3;
      return 3 * (((a * c - b * d) % 3 + 3) % 3) + (a * d + b * c) % 3;
    };
    std::vector<char> square(9, 0);
    for (int x = 1; x < 9; ++x) square[static_cast<std::size_t>(mul(x, x))] = 1;
    std::vector<Edge> edges;
    for (int u = 0; u < 9; ++u)
      for (int v = u + 1; v < 9; ++v) {
        const int diff = 3 * ((u / 3 - v / 3 + 3) % 3) + (u % 3 - v % 3 + 3) % 3;
        if (square[static_cast<std::size_t>(diff)]) edges.emplace_back(u, v);
      }
    return Graph(9, edges);
  }
  if (q != 5 && q != 13 && q != 17) throw GraphError("paley: unsupported q=" + std::to_string(q));
  std::vector<std::size_t> residues;
  for (int x = 1; x < q; ++x) residues.push_back(static_cast<std::size_t>(x * x % q));
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  return circulant(static_cast<std::size_t>(q), residues);
}

Graph rook(int m) {
  std::vector<Edge> edges;
  const auto n = static_cast<Vertex>(m * m);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (u / m == v / m || u % m == v % m) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph petersen() { return odd(3); }

Graph dodecahedron() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 10; ++i) {
    edges.emplace_back(i, (i + 1) % 10);
    edges.emplace_back(i, 10 + i);
    edges.emplace_back(10 + i, 10 + (i + 2) % 10);
  }
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  return Graph(20, edges);
}

Graph icosahedron() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    const Vertex up = 1 + i, up_next = 1 + (i + 1) % 5;
    const Vertex lo = 6 + i, lo_next = 6 + (i + 1) % 5;
    edges.emplace_back(0, up);
    edges.emplace_back(std::min(up, up_next), std::max(up, up_next));
    edges.emplace_back(up, lo);
    edges.emplace_back(up, lo_next);
    edges.emplace_back(std::min(lo, lo_next), std::max(lo, lo_next));
    edges.emplace_back(lo, 11);
  }
  return Graph(12, edges);
}

Graph coxeter() {
  const Graph o4 = odd(4);
  const auto sets = colex_subsets(7, 3);
  std::vector<std::uint32_t> fano;
  for (int i = 0; i < 7; ++i) fano.push_back(1u << i | 1u << (i + 1) % 7 | 1u << (i + 3) % 7);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < sets.size(); ++v)
    if (std::find(fano.begin(), fano.end(), sets[v]) == fano.end()) keep.push_back(v);
  return induced_subgraph(o4, keep);
}

Graph shrikhande() {
  std::vector<Edge> edges;
  const std::array<std::pair<int, int>, 6> conn{{{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (auto [x, y] : conn) {
        const auto u = static_cast<Vertex>(4 * a + b);
        const auto v = static_cast<Vertex>(4 * ((a + x) % 4) + (b + y) % 4);
        if (u < v) edges.emplace_back(u, v);
      }
  return Graph(16, edges);
}

Graph hoffman_singleton() {
  // Pentagons P_h (vertex 5h+j) and pentagrams Q_i (vertex 25+5i+j).
  std::vector<Edge> edges;
  auto add = [&](Vertex u, Vertex v) { edges.emplace_back(std::min(u, v), std::max(u, v)); };
  for (Vertex h = 0; h < 5; ++h)
    for (Vertex j = 0; j < 5; ++j) {
      add(5 * h + j, 5 * h + (j + 1) % 5);
      add(25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5);
      for (Vertex i = 0; i < 5; ++i) add(5 * h + j, 25 + 5 * i + (h * i + j) % 5);
    }
  return Graph(50, edges);
}

Graph sylvester() {
  const Graph hs = hoffman_singleton();
  VertexSet drop = hs.closed_neighborhood(0);
  drop |= hs.closed_neighborhood(1);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < hs.order(); ++v)
    if (!drop.test(v)) keep.push_back(v);
  return induced_subgraph(hs, keep);
}

Graph klein() {
  // PSL(2,7): matrices (a,b,c,d) mod 7 with det 1, each identified with its
  // negative; the lexicographically smaller of the two represents the class.
  using M = std::array<int, 4>;
  auto canon = [](M m) {
    M neg{(7 - m[0]) % 7, (7 - m[1]) % 7, (7 - m[2]) % 7, (7 - m[3]) % 7};
    return std::min(m, neg);
  };
  auto mul = [&](const M& x, const M& y) {
    return canon({(x[0] * y[0] + x[1] * y[2]) % 7, (x[0] * y[1] + x[1] * y[3]) % 7,
                  (x[2] * y[0] + x[3] * y[2]) % 7, (x[2] * y[1] + x[3] * y[3]) % 7});
  };
  std::vector<M> elems;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c)
        for (int d = 0; d < 7; ++d) {
          const M m{a, b, c, d};
          if ((a * d - b * c + 49) % 7 == 1 && canon(m) == m) elems.push_back(m);
        }
  const M ga{1, 1, 0, 1};
  const M gb = canon({0, 1, 6, 0});
  std::vector<M> powers{canon({1, 0, 0, 1})};
  for (int i = 1; i < 7; ++i) powers.push_back(mul(powers.back(), ga));
  std::map<M, Vertex> coset_of;  // element -> coset index
  std::vector<M> reps;
  for (const M& g : elems) {
    if (coset_of.count(g)) continue;
    const auto id = static_cast<Vertex>(reps.size());
    reps.push_back(g);
    for (const M& p : powers) coset_of[mul(g, p)] = id;
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < reps.size(); ++u)
    for (const M& p : powers) {
      const Vertex v = coset_of.at(mul(mul(reps[u], p), gb));
      if (u < v) edges.emplace_back(u, v);
    }
  return Graph(reps.size(), edges);
}

Graph design_incidence_graph(std::size_t v, const std::vector<std::vector<Vertex>>& blocks) {
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Vertex p : blocks[b]) {
      if (p >= v) throw GraphError("design block point out of range");
      edges.emplace_back(p, static_cast<Vertex>(v + b));
    }
  return Graph(v + blocks.size(), edges);
}

Graph ig_7_4_2() {
  std::vector<std::vector<Vertex>> blocks;
  for (Vertex i = 0; i < 7; ++i) {
    std::vector<Vertex> b;
    for (Vertex p = 0; p < 7; ++p)
      if (p != i && p != (i + 1) % 7 && p != (i + 3) % 7) b.push_back(p);
    blocks.push_back(b);
  }
  return design_incidence_graph(7, blocks);
}

Graph ig_11_5_2() {
  std::vector<std::vector<Vertex>> blocks;
  for (Vertex i = 0; i < 11; ++i) {
    std::vector<Vertex> b;
    for (Vertex r : {1u, 3u, 4u, 5u, 9u}) b.push_back((r + i) % 11);
    std::sort(b.begin(), b.end());
    blocks.push_back(b);
  }
  return design_incidence_graph(11, blocks);
}

Graph gh22_point_graph_connected_gamma3() {
  const Graph cage = incidence_graph(split_cayley_hexagon(2));
  for (int side : {0, 1})
    if (Graph h = bipartite_half(cage, side); gamma3_connected(h)) return h;
  throw GeometryError("no half of the 12-cage has a connected distance-3 neighborhood");
}

Graph gh22_point_graph_disconnected_gamma3() {
  const Graph cage = incidence_graph(split_cayley_hexagon(2));
  for (int side : {0, 1})
    if (Graph h = bipartite_half(cage, side); !gamma3_connected(h)) return h;
  throw GeometryError("no half of the 12-cage has a disconnected distance-3 neighborhood");
}

}  // namespace drg::graphs
