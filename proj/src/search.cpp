#include "drg/search.hpp"

#include <algorithm>

#include "drg/clique.hpp"
#include "drg/code.hpp"
#include "drg/error.hpp"

namespace drg {

namespace {

SearchResult divisibility_check(const Graph& g, std::size_t& target) {
  SearchResult res;
  if (!is_connected(g)) throw GraphError("perfect code search needs a connected graph");
  const auto k = g.regular_degree();
  if (!k) throw GraphError("perfect code search needs a regular graph");
  if (g.order() % (*k + 1) != 0) {
    res.status = SearchStatus::kNo;
    res.method = "divisibility";
    res.detail = std::to_string(*k + 1) + " does not divide " + std::to_string(g.order());
    return res;
  }
  target = g.order() / (*k + 1);
  return res;
}

std::vector<Vertex> to_vertices(const std::vector<std::uint32_t>& options) {
  return {options.begin(), options.end()};
}

SearchResult from_exact_cover(ExactCoverResult r) {
  SearchResult res;
  res.method = "exact-cover";
  res.nodes = r.nodes;
  switch (r.status) {
    case ExactCoverResult::Status::kSolved:
      res.status = SearchStatus::kYes;
      res.witness = to_vertices(r.solution);
      break;
    case ExactCoverResult::Status::kNoSolution:
      res.status = SearchStatus::kNo;
      res.detail = "exact cover exhausted";
      break;
    case ExactCoverResult::Status::kBudgetExhausted:
      res.status = SearchStatus::kUnknown;
      res.detail = "budget exhausted after " + std::to_string(r.nodes) + " nodes";
      res.checkpoint = std::move(r.checkpoint);
      break;
  }
  return res;
}

SearchResult canonical_search(const Graph& g, std::size_t target, const SearchOptions& opts) {
  const ExactCoverSolver base = perfect_code_instance(g);
  std::uint64_t spent = 0;
  auto remaining = [&] { return opts.budget > spent ? opts.budget - spent : 0; };
  std::vector<std::uint32_t> prefix;
  std::uint32_t next = 0;
  while (prefix.size() < target) {
    bool extended = false;
    for (std::uint32_t v = next; v < g.order(); ++v) {
      ExactCoverSolver s = base;
      bool ok = true;
      for (auto p : prefix) ok = ok && s.force(p);
      if (!ok || !s.force(v)) continue;
      auto r = s.solve(remaining());
      spent += r.nodes;
      if (r.status == ExactCoverResult::Status::kBudgetExhausted) {
        SearchResult res;
        res.method = "exact-cover";
        res.nodes = spent;
        res.detail = "budget exhausted after " + std::to_string(spent) + " nodes (canonical mode)";
        return res;
      }
      if (r.status == ExactCoverResult::Status::kSolved) {
        prefix.push_back(v);
        next = v + 1;
        extended = true;
        break;
      }
    }
    if (!extended) {
      SearchResult res;
      res.method = "exact-cover";
      res.nodes = spent;
      res.status = SearchStatus::kNo;
      res.detail = "exact cover exhausted";
      return res;
    }
  }
  SearchResult res;
  res.method = "exact-cover";
  res.nodes = spent;
  res.status = SearchStatus::kYes;
  res.witness = to_vertices(prefix);
  res.detail = "lexicographically smallest code";
  return res;
}

}  // namespace

ExactCoverSolver perfect_code_instance(const Graph& g) {
  std::vector<std::vector<std::uint32_t>> options(g.order());
  for (Vertex v = 0; v < g.order(); ++v) options[v] = g.closed_neighborhood(v).members();
  return ExactCoverSolver(g.order(), options);
}

SearchResult search_perfect_1(const Graph& g, const SearchOptions& opts) {
  std::size_t target = 0;
  if (auto pre = divisibility_check(g, target); pre.status == SearchStatus::kNo) return pre;
  if (opts.mode == SearchMode::kCanonical) return canonical_search(g, target, opts);
  ExactCoverSolver solver = perfect_code_instance(g);
  if (opts.parallel && !opts.resume) return from_exact_cover(solve_parallel(solver, opts.budget));
  return from_exact_cover(solver.solve(opts.budget, opts.resume));
}

SearchResult search_via_distance3_clique(const Graph& g, std::uint64_t budget) {
  std::size_t target = 0;
  if (auto pre = divisibility_check(g, target); pre.status == SearchStatus::kNo) return pre;
  const auto table = distance_table(g);
  if (table.diameter != 3)
    throw GraphError("clique route needs diameter 3, got " + std::to_string(table.diameter));
  const Graph d3 = distance_i_graph(g, table, 3);
  SearchResult res;
  res.method = "clique";
  std::size_t cliques = 0;
  const auto stats = for_each_clique(d3, target, budget, [&](const std::vector<Vertex>& c) {
    ++cliques;
    if (verify_perfect_1(g, c)) {
      res.witness = c;
      return false;
    }
    return true;
  });
  res.nodes = stats.nodes;
  if (!res.witness.empty()) {
    res.status = SearchStatus::kYes;
    res.detail = std::to_string(target) + "-clique in the distance-3 graph";
  } else if (stats.budget_exhausted) {
    res.status = SearchStatus::kUnknown;
    res.detail = "budget exhausted after " + std::to_string(stats.nodes) + " nodes";
  } else {
    res.status = SearchStatus::kNo;
    res.detail = cliques == 0 ? "no " + std::to_string(target) + "-clique in the distance-3 graph"
                              : std::to_string(cliques) + " cliques, none a perfect code";
  }
  return res;
}

EdgeCodeReport code_to_edge_set(const LineGraph& lg, const std::vector<Vertex>& code) {
  if (code.empty()) throw CodeError("empty code");
  EdgeCodeReport rep;
  for (Vertex v : code) {
    if (v >= lg.edge_map.size())
      throw CodeError("vertex " + std::to_string(v) + " is not a vertex of this line graph");
    rep.edges.push_back(lg.edge_map[v]);
  }
  std::sort(rep.edges.begin(), rep.edges.end());
  // Base vertex count: one more than the largest endpoint in the edge map.
  Vertex nbase = 0;
  for (auto [u, v] : lg.edge_map) nbase = std::max({nbase, u + 1, v + 1});
  std::vector<int> owner(nbase, -1);
  rep.is_matching = true;
  for (std::size_t i = 0; i < rep.edges.size(); ++i)
    for (Vertex x : {rep.edges[i].first, rep.edges[i].second}) {
      if (owner[x] >= 0) rep.is_matching = false;
      owner[x] = static_cast<int>(i);
    }
  rep.is_induced = rep.is_matching;
  rep.is_vertex_cover = true;
  for (auto [u, v] : lg.edge_map) {
    if (owner[u] < 0 && owner[v] < 0) rep.is_vertex_cover = false;
    if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v]) rep.is_induced = false;
  }
  // Closed edge neighborhoods: edges of L(G) at distance <= 1 from each code edge.
  const Graph& l = lg.graph;
  std::vector<int> claimed(l.order(), -1);
  rep.disjoint_closed_neighborhoods = true;
  for (std::size_t i = 0; i < code.size(); ++i) {
    auto claim = [&](Vertex e) {
      if (claimed[e] >= 0 && claimed[e] != static_cast<int>(i)) rep.disjoint_closed_neighborhoods = false;
      claimed[e] = static_cast<int>(i);
    };
    claim(code[i]);
    for (Vertex f : l.neighbors(code[i])) claim(f);
  }
  return rep;
}

std::vector<Vertex> edge_set_to_code(const LineGraph& lg, const std::vector<Edge>& edges) {
  std::vector<Vertex> code;
  for (auto e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
    auto it = std::lower_bound(lg.edge_map.begin(), lg.edge_map.end(), e);
    if (it == lg.edge_map.end() || *it != e)
      throw CodeError("(" + std::to_string(e.first) + "," + std::to_string(e.second) + ") is not an edge of the base graph");
    code.push_back(static_cast<Vertex>(it - lg.edge_map.begin()));
  }
  std::sort(code.begin(), code.end());
  return code;
}

std::optional<int> unmatched_side_forms_grid(const LineGraph& lg, const std::vector<Vertex>& code) {
  std::size_t n = 0;
  for (auto [u, v] : lg.edge_map) n = std::max<std::size_t>(n, std::max(u, v) + 1);
  const Graph base(n, lg.edge_map);
  const auto sides = bipartition(base);
  if (!sides) return std::nullopt;
  std::vector<char> matched(n, 0);
  for (auto [u, v] : code_to_edge_set(lg, code).edges) matched[u] = matched[v] = 1;
  for (int side : {0, 1}) {
    std::vector<VertexSet> blocks;
    std::size_t points = 0;
    for (Vertex x = 0; x < n; ++x) {
      if ((*sides)[x] != side && matched[x]) ++points;
      if ((*sides)[x] != side || matched[x]) continue;
      VertexSet b(n);
      for (Vertex y : base.neighbors(x))
        if (matched[y]) b.set(y);
      blocks.push_back(std::move(b));
    }
    const std::size_t m = blocks.size() / 2;
    if (m == 0 || blocks.size() != 2 * m || points != m * m) continue;
    std::vector<int> cls(blocks.size(), 1);
    cls[0] = 0;
    for (std::size_t i = 1; i < blocks.size(); ++i)
      if (blocks[0].intersection_count(blocks[i]) == 0) cls[i] = 0;
    bool grid = std::count(cls.begin(), cls.end(), 0) == static_cast<long>(m);
    for (std::size_t i = 0; grid && i < blocks.size(); ++i) {
      grid = blocks[i].count() == m;
      for (std::size_t j = i + 1; grid && j < blocks.size(); ++j)
        grid = blocks[i].intersection_count(blocks[j]) == (cls[i] == cls[j] ? 0u : 1u);
    }
    if (grid) return side;
  }
  return std::nullopt;
}

EdgePackingResult max_disjoint_closed_edge_neighborhoods(const Graph& g, std::size_t upper_bound_hint,
                                                         std::uint64_t budget) {
  if (!is_connected(g)) throw GraphError("edge packing needs a connected graph");
  const LineGraph lg = line_graph(g);
  const auto t = distance_table(lg.graph);
  // Two edges may coexist iff their line-graph distance is at least 3.
  std::vector<Edge> compatible;
  for (Vertex e = 0; e < lg.graph.order(); ++e)
    for (Vertex f = e + 1; f < lg.graph.order(); ++f)
      if (t.at(e, f) >= 3) compatible.emplace_back(e, f);
  const Graph h(lg.graph.order(), compatible);
  const auto mc = max_clique(h, budget, upper_bound_hint);
  EdgePackingResult res;
  for (Vertex e : mc.clique) res.edges.push_back(lg.edge_map[e]);
  res.size = mc.clique.size();
  res.upper_bound = mc.upper_bound;
  res.optimal = mc.optimal();
  res.reached_hint = upper_bound_hint != 0 && res.size >= upper_bound_hint;
  res.nodes = mc.nodes;
  return res;
}

std::vector<Vertex> antipodal_code_lift(const Graph& g, const std::vector<std::vector<Vertex>>& fibers,
                                        const std::vector<Vertex>& folded_code) {
  const Graph folded = folded_graph(g, fibers);
  if (folded_code.empty() || !verify_perfect_1(folded, folded_code))
    throw CodeError("folded code is not a perfect 1-code of the folded graph");
  std::vector<Vertex> lifted;
  for (Vertex f : folded_code) lifted.insert(lifted.end(), fibers[f].begin(), fibers[f].end());
  std::sort(lifted.begin(), lifted.end());
  if (!verify_perfect_1(g, lifted)) throw CodeError("lifted code is not a perfect 1-code");
  return lifted;
}

SearchResult ghx33_nonexistence_search(const LineGraph& lg, std::uint64_t budget, const ExactCoverCheckpoint* resume) {
  const Graph& g = lg.graph;
  if (g.order() != 1456 || g.regular_degree() != 6)
    throw GraphError("expected the 6-regular line graph on 1456 vertices");
  SearchOptions opts;
  opts.budget = budget;
  opts.parallel = false;
  opts.resume = resume;
  auto res = search_perfect_1(g, opts);
  res.detail += (res.detail.empty() ? "" : "; ") + std::string("target code size ") + std::to_string(g.order() / 7);
  return res;
}

}  // namespace drg
