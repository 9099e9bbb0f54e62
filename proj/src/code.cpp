#include "drg/code.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "drg/error.hpp"

namespace drg {

namespace {

VertexSet to_set(const Graph& g, const std::vector<Vertex>& c) {
  VertexSet s(g.order());
  for (Vertex v : c) {
    if (v >= g.order())
      throw CodeError("code vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.order()));
    s.set(v);
  }
  return s;
}

}  // namespace

Code::Code(const Graph& host, std::vector<Vertex> vertices) : host_(&host), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw CodeError("duplicate vertex in code");
  (void)to_set(host, vertices_);
}

bool verify_perfect_1(const Graph& g, const std::vector<Vertex>& c) {
  const VertexSet in = to_set(g, c);
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto hits = g.row(v).intersection_count(in);
    if (in.test(v) ? hits != 0 : hits != 1) return false;
  }
  return true;
}

CodeReport classify_code(const Graph& g, const std::vector<Vertex>& c) {
  if (c.empty()) throw CodeError("cannot classify an empty code");
  const VertexSet in = to_set(g, c);
  CodeReport rep;
  rep.size = in.count();

  rep.is_independent = true;
  for (Vertex v : c)
    if (g.row(v).intersects(in)) rep.is_independent = false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in.test(v)) continue;
    if (g.row(v).intersection_count(in) != 1) {
      if (!rep.cover_violation) rep.cover_violation = v;
      ++rep.cover_violation_count;
    }
  }
  rep.is_perfect_1 = rep.is_independent && !rep.cover_violation;

  // Distance partition by multi-source BFS from the code.
  std::vector<int> level(g.order(), -1);
  std::vector<Vertex> queue;
  for (Vertex v : c) {
    level[v] = 0;
    queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Vertex w : g.neighbors(queue[head]))
      if (level[w] < 0) {
        level[w] = level[queue[head]] + 1;
        queue.push_back(w);
      }
  if (queue.size() != g.order()) throw GraphError("classify_code requires a connected host");
  rep.covering_radius = level[queue.back()];

  if (c.size() >= 2) {
    int best = std::numeric_limits<int>::max();
    std::vector<int> d(g.order());
    for (Vertex s : c) {
      std::fill(d.begin(), d.end(), -1);
      std::vector<Vertex> q{s};
      d[s] = 0;
      for (std::size_t head = 0; head < q.size() && d[q[head]] < best; ++head)
        for (Vertex w : g.neighbors(q[head]))
          if (d[w] < 0) {
            d[w] = d[q[head]] + 1;
            if (in.test(w)) best = std::min(best, d[w]);
            q.push_back(w);
          }
    }
    rep.min_distance = best;
  }

  std::vector<std::optional<LevelCounts>> per_level(static_cast<std::size_t>(rep.covering_radius) + 1);
  rep.completely_regular = true;
  for (Vertex v : queue) {
    const int l = level[v];
    LevelCounts lc;
    for (Vertex w : g.neighbors(v)) {
      if (level[w] == l - 1) ++lc.c;
      else if (level[w] == l) ++lc.a;
      else ++lc.b;
    }
    auto& slot = per_level[static_cast<std::size_t>(l)];
    if (!slot) {
      slot = lc;
    } else if (!(*slot == lc) && rep.completely_regular) {
      rep.completely_regular = false;
      rep.violation = RegularityViolation{l, v, *slot, lc};
    }
  }
  if (rep.completely_regular)
    for (const auto& lc : per_level) rep.levels.push_back(*lc);
  return rep;
}

std::vector<Vertex> parse_code(const std::string& line) {
  std::vector<Vertex> out;
  std::size_t pos = 0;
  std::string s;
  for (char ch : line)
    if (ch != ' ' && ch != '\t' && ch != '\r' && ch != '\n' && ch != '{' && ch != '}' && ch != '[' && ch != ']') s += ch;
  if (s.empty()) return out;
  while (pos <= s.size()) {
    const auto comma = std::min(s.find(',', pos), s.size());
    const std::string tok = s.substr(pos, comma - pos);
    unsigned long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size())
      throw CodeError("bad vertex '" + tok + "' in code line");
    out.push_back(static_cast<Vertex>(v));
    pos = comma + 1;
  }
  return out;
}

std::string format_code(const std::vector<Vertex>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

}  // namespace drg
