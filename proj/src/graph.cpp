#include "drg/graph.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <ostream>

#include "drg/error.hpp"

namespace drg {

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels)
    : n_(n), rows_(n, VertexSet(n)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n)
    throw GraphError("label count " + std::to_string(labels_.size()) + " != vertex count " +
                     std::to_string(n));
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for n=" + std::to_string(n));
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
  }
  offset_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + rows_[v].count();
  nbr_.reserve(offset_[n]);
  for (std::size_t v = 0; v < n; ++v) rows_[v].for_each([&](Vertex w) { nbr_.push_back(w); });
  m_ = offset_[n] / 2;
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  const std::size_t k = degree(0);
  for (Vertex v = 1; v < n_; ++v)
    if (degree(v) != k) return std::nullopt;
  return k;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet s = rows_[v];
  s.set(v);
  return s;
}

std::vector<Vertex> DistanceTable::sphere(Vertex v, int i) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (Vertex u = 0; u < n; ++u)
    if (r[u] == i) out.push_back(u);
  return out;
}

namespace {

// BFS from `root` into `out` (length n). Returns the shortest cycle length
// seen from this root (an upper bound whose minimum over all roots is the
// girth) and the first unreachable vertex, if any.
struct RootResult {
  int cycle = kInfiniteGirth;
  int ecc = 0;
  std::optional<Vertex> unreachable;
};

RootResult bfs_root(const Graph& g, Vertex root, std::uint8_t* out, std::vector<Vertex>& queue,
                    std::vector<Vertex>& parent) {
  const std::size_t n = g.order();
  std::fill(out, out + n, kUnreachable);
  queue.clear();
  RootResult res;
  out[root] = 0;
  parent[root] = root;
  queue.push_back(root);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (out[w] == kUnreachable) {
        if (out[u] + 1 >= kUnreachable) throw GraphError("diameter exceeds 254");
        out[w] = static_cast<std::uint8_t>(out[u] + 1);
        parent[w] = u;
        queue.push_back(w);
      } else if (w != parent[u] && out[w] >= out[u]) {
        res.cycle = std::min(res.cycle, out[u] + out[w] + 1);
      }
    }
  }
  if (queue.size() != n) {
    for (Vertex v = 0; v < n; ++v)
      if (out[v] == kUnreachable) {
        res.unreachable = v;
        break;
      }
  } else {
    res.ecc = out[queue.back()];
  }
  return res;
}

[[noreturn]] void throw_disconnected(Vertex root, Vertex v) {
  throw GraphError("graph is disconnected: vertex " + std::to_string(v) +
                   " is unreachable from vertex " + std::to_string(root));
}

}  // namespace

std::vector<int> bfs_distances(const Graph& g, Vertex v) {
  if (v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  std::vector<std::uint8_t> row(g.order());
  std::vector<Vertex> queue, parent(g.order());
  auto res = bfs_root(g, v, row.data(), queue, parent);
  if (res.unreachable) throw_disconnected(v, *res.unreachable);
  return {row.begin(), row.end()};
}

DistanceTable distance_table_serial(const Graph& g) {
  const std::size_t n = g.order();
  DistanceTable t;
  t.n = n;
  t.dist.resize(n * n);
  std::vector<Vertex> queue, parent(n);
  for (Vertex r = 0; r < n; ++r) {
    auto res = bfs_root(g, r, t.dist.data() + static_cast<std::size_t>(r) * n, queue, parent);
    if (res.unreachable) throw_disconnected(r, *res.unreachable);
    t.diameter = std::max(t.diameter, res.ecc);
    t.girth = std::min(t.girth, res.cycle);
  }
  return t;
}

DistanceTable distance_table(const Graph& g) {
  const std::size_t n = g.order();
  DistanceTable t;
  t.n = n;
  t.dist.resize(n * n);
  int diameter = 0;
  int girth = kInfiniteGirth;
  // Lowest root that failed, packed with the unreachable vertex.
  std::atomic<std::uint64_t> failure{~std::uint64_t{0}};
  std::atomic<bool> overflow{false};

#pragma omp parallel reduction(max : diameter) reduction(min : girth)
  {
    std::vector<Vertex> queue, parent(n);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(n); ++r) {
      try {
        auto res = bfs_root(g, static_cast<Vertex>(r),
                            t.dist.data() + static_cast<std::size_t>(r) * n, queue, parent);
        if (res.unreachable) {
          const std::uint64_t packed = (static_cast<std::uint64_t>(r) << 32) | *res.unreachable;
          std::uint64_t cur = failure.load();
          while (packed < cur && !failure.compare_exchange_weak(cur, packed)) {
          }
        }
        diameter = std::max(diameter, res.ecc);
        girth = std::min(girth, res.cycle);
      } catch (const GraphError&) {
        overflow = true;
      }
    }
  }
  if (overflow) throw GraphError("diameter exceeds 254");
  if (const auto f = failure.load(); f != ~std::uint64_t{0})
    throw_disconnected(static_cast<Vertex>(f >> 32), static_cast<Vertex>(f & 0xffffffffU));
  t.diameter = diameter;
  t.girth = girth;
  return t;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Vertex w : g.neighbors(queue[head]))
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  return queue.size() == g.order();
}

LineGraph line_graph(const Graph& g) {
  LineGraph lg;
  lg.edge_map = g.edges();
  if (lg.edge_map.empty()) throw GraphError("line graph of an edgeless graph");
  const std::size_t m = lg.edge_map.size();
  // incident[v] = indices of edges at v
  std::vector<std::vector<Vertex>> incident(g.order());
  for (Vertex i = 0; i < m; ++i) {
    incident[lg.edge_map[i].first].push_back(i);
    incident[lg.edge_map[i].second].push_back(i);
  }
  std::vector<Edge> edges;
  for (const auto& inc : incident)
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b) edges.emplace_back(inc[a], inc[b]);
  std::vector<std::string> labels;
  labels.reserve(m);
  for (auto [u, v] : lg.edge_map) labels.push_back(g.label(u) + "|" + g.label(v));
  lg.graph = Graph(m, edges, std::move(labels));
  return lg;
}

Graph distance_i_graph(const Graph& g, const DistanceTable& t, int i) {
  if (i < 1 || i > t.diameter)
    throw GraphError("distance " + std::to_string(i) + " outside 1.." + std::to_string(t.diameter));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    auto r = t.row(u);
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (r[v] == i) edges.emplace_back(u, v);
  }
  return Graph(g.order(), edges, g.labels());
}

Graph distance_i_graph(const Graph& g, int i) { return distance_i_graph(g, distance_table(g), i); }

std::optional<std::vector<std::vector<Vertex>>> antipodal_classes(const Graph& g) {
  const auto t = distance_table(g);
  if (t.diameter < 2) return std::nullopt;
  const std::size_t n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < n; ++v) {
    if (cls[v] >= 0) continue;
    std::vector<Vertex> c{v};
    for (Vertex u : t.sphere(v, t.diameter)) c.push_back(u);
    std::sort(c.begin(), c.end());
    // Transitivity: every member must see exactly the same class.
    for (Vertex u : c) {
      if (cls[u] >= 0) return std::nullopt;
      auto r = t.row(u);
      for (Vertex w = 0; w < n; ++w) {
        const bool in_rel = r[w] == 0 || r[w] == t.diameter;
        if (in_rel != std::binary_search(c.begin(), c.end(), w)) return std::nullopt;
      }
    }
    for (Vertex u : c) cls[u] = static_cast<int>(out.size());
    out.push_back(std::move(c));
  }
  for (const auto& c : out)
    if (c.size() != out.front().size()) return std::nullopt;
  return out;
}

Graph folded_graph(const Graph& g, const std::vector<std::vector<Vertex>>& fibers) {
  const std::size_t n = g.order();
  std::vector<int> cls(n, -1);
  for (std::size_t j = 0; j < fibers.size(); ++j) {
    if (fibers[j].empty()) throw GraphError("empty fiber " + std::to_string(j));
    for (Vertex v : fibers[j]) {
      if (v >= n) throw GraphError("fiber vertex " + std::to_string(v) + " out of range");
      if (cls[v] >= 0) throw GraphError("vertex " + std::to_string(v) + " in two fibers");
      cls[v] = static_cast<int>(j);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (cls[v] < 0) throw GraphError("vertex " + std::to_string(v) + " in no fiber");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (cls[u] == cls[v]) throw GraphError("fiber contains the edge (" + std::to_string(u) + "," +
                                           std::to_string(v) + ")");
    edges.emplace_back(static_cast<Vertex>(cls[u]), static_cast<Vertex>(cls[v]));
  }
  std::vector<std::string> labels;
  for (const auto& f : fibers) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + g.label(f[i]);
    labels.push_back(s + "]");
  }
  return Graph(fibers.size(), edges, std::move(labels));
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

Graph bipartite_half(const Graph& g, int side) {
  if (side != 0 && side != 1) throw GraphError("side must be 0 or 1");
  if (!is_connected(g)) throw GraphError("bipartite_half requires a connected graph");
  const auto parts = bipartition(g);
  if (!parts) throw GraphError("graph is not bipartite");
  std::vector<Vertex> keep;
  std::vector<int> index(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v)
    if ((*parts)[v] == side) {
      index[v] = static_cast<int>(keep.size());
      keep.push_back(v);
    }
  std::vector<Edge> edges;
  for (Vertex u : keep) {
    VertexSet two(g.order());
    for (Vertex w : g.neighbors(u)) two |= g.row(w);
    two.for_each([&](Vertex v) {
      if (u < v) edges.emplace_back(static_cast<Vertex>(index[u]), static_cast<Vertex>(index[v]));
    });
  }
  std::vector<std::string> labels;
  if (g.has_labels())
    for (Vertex v : keep) labels.push_back(g.labels()[v]);
  return Graph(keep.size(), edges, std::move(labels));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw GraphError("induced subgraph on an empty vertex set");
  std::vector<int> index(g.order(), -1);
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] >= g.order()) throw GraphError("vertex " + std::to_string(s[j]) + " out of range");
    if (index[s[j]] >= 0) throw GraphError("duplicate vertex " + std::to_string(s[j]));
    index[s[j]] = static_cast<int>(j);
  }
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < s.size(); ++j)
    for (Vertex w : g.neighbors(s[j]))
      if (index[w] > static_cast<int>(j)) edges.emplace_back(static_cast<Vertex>(j), index[w]);
  std::vector<std::string> labels;
  if (g.has_labels())
    for (Vertex v : s) labels.push_back(g.labels()[v]);
  return Graph(s.size(), edges, std::move(labels));
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.order(), edges, g.labels());
}

Graph read_edge_list(std::istream& in) {
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw GraphError("edge list: expected header 'n m'");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw GraphError("edge list: expected " + std::to_string(m) + " edges, got " +
                                          std::to_string(i));
    if (u < 0 || v < 0) throw GraphError("edge list: negative vertex index");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace drg
