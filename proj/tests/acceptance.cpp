// Acceptance run: one PASS/FAIL line per criterion. Time limits are pinned
// below; exit status is nonzero when any gating criterion fails.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "drg/catalog.hpp"
#include "drg/clique.hpp"
#include "drg/code.hpp"
#include "drg/decide.hpp"
#include "drg/geometry.hpp"
#include "drg/named_graphs.hpp"
#include "drg/report.hpp"
#include "drg/search.hpp"
#include "drg/spectral.hpp"
#include "oracles.hpp"

using namespace drg;

namespace {

constexpr double kAc1Seconds = 10.0;
constexpr double kAc2SecondsEach = 5.0;
constexpr double kAc3Seconds = 60.0;
constexpr double kAc4Seconds = 30.0;
constexpr double kAc5Seconds = 300.0;
constexpr double kAc6Seconds = 600.0;
constexpr std::size_t kAc5BoundQ2 = 7;
constexpr std::size_t kAc5BoundQ3 = 13;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Check {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

int failures = 0;

void emit(const std::string& id, const std::string& title, const Check& c, double seconds, double limit) {
  const bool pass = c.ok && seconds < limit;
  if (!pass) ++failures;
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << id << ' ' << (pass ? "PASS" : "FAIL") << ' ' << title << " (" << seconds << " s, limit " << limit << " s)";
  if (seconds >= limit) os << " [over time limit]";
  for (const auto& n : c.notes) os << "; " << n;
  std::cout << os.str() << std::endl;
}

template <class F>
void criterion(const std::string& id, const std::string& title, double limit, F&& body) {
  Check c;
  const auto t = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  emit(id, title, c, since(t), limit);
}

bool neumaier(const Graph& g, const std::vector<Vertex>& code) {
  if (!verify_perfect_1(g, code)) return false;
  const auto r = classify_code(g, code);
  return r.is_perfect_1 && r.completely_regular && r.covering_radius == 1 &&
         (code.size() < 2 || r.min_distance == 3);
}

void ac1(Check& c) {
  const auto t = Clock::now();
  ReportOptions cheap;
  cheap.decide.run_search = false;
  std::size_t array_level = 0, array_level_ok = 0;
  for (const auto& row : run_report(catalog(), cheap)) {
    if (!is_array_level(row.entry)) continue;
    ++array_level;
    if (row.match && row.reason_match) ++array_level_ok;
    else c.require(false, "rule for " + row.entry.name);
  }
  const double cheap_seconds = since(t);
  c.require(cheap_seconds < kAc1Seconds, "array-level pass under time limit");

  const auto rows = run_report(catalog(), ReportOptions{});
  std::size_t matched = 0;
  for (const auto& row : rows) {
    if (row.match) ++matched;
    else c.require(false, "status of " + row.entry.name);
    c.require(row.structure_match, "n/d/g of " + row.entry.name);
  }
  c.require(rows.size() == 61, "61 rows");
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << matched << "/" << rows.size() << " statuses match; " << array_level_ok << "/" << array_level
     << " array-level rules match in " << cheap_seconds << " s";
  c.note(os.str());
}

std::string grid_note;

void timed_witness(Check& c, const std::string& what, const std::function<bool()>& f) {
  const auto t = Clock::now();
  const bool ok = f();
  const double s = since(t);
  c.require(ok, what);
  c.require(s < kAc2SecondsEach, what + " within " + std::to_string(static_cast<int>(kAc2SecondsEach)) + " s");
}

void ac2(Check& c) {
  timed_witness(c, "O_4 size 7", [] {
    const Graph g = build("O_4");
    const auto r = search_perfect_1(g);
    return r.status == SearchStatus::kYes && r.witness.size() == 7 && neumaier(g, r.witness);
  });
  timed_witness(c, "Sylvester size 6 via distance-3 clique", [] {
    const Graph g = build("Sylvester");
    const auto r = search_via_distance3_clique(g);
    return r.status == SearchStatus::kYes && r.method == "clique" && r.witness.size() == 6 && neumaier(g, r.witness);
  });
  timed_witness(c, "Coxeter independent 7-set", [] {
    const Graph g = build("Coxeter");
    const auto r = search_perfect_1(g);
    if (r.status != SearchStatus::kYes || r.witness.size() != 7) return false;
    for (Vertex u : r.witness)
      for (Vertex v : r.witness)
        if (g.adjacent(u, v)) return false;
    return neumaier(g, r.witness);
  });
  timed_witness(c, "L(Tutte's 8-cage) nine disjoint flags", [] {
    const Graph base = build("Tutte's 8-cage");
    const LineGraph lg = line_graph(base);
    const auto r = search_perfect_1(lg.graph);
    if (r.status != SearchStatus::kYes || r.witness.size() != 9 || !neumaier(lg.graph, r.witness)) return false;
    const auto rep = code_to_edge_set(lg, r.witness);
    std::set<Vertex> used;
    for (auto [p, l] : rep.edges)
      if (!used.insert(p).second || !used.insert(l).second) return false;
    const auto grid = unmatched_side_forms_grid(lg, r.witness);
    grid_note = std::string("unused lines form a 3x3 grid on the flag points: ") + (grid ? "yes" : "no") + " (logged)";
    return rep.valid();
  });
  for (const char* name : {"L(Petersen)", "Icosahedron", "Klein"}) {
    timed_witness(c, std::string(name) + " fiber code", [name] {
      const Graph g = build(name);
      const auto v = decide(*find_entry(name), &g);
      const auto fibers = antipodal_classes(g);
      if (!fibers || v.status != Status::kYes || !v.witness_verified) return false;
      bool is_fiber = false;
      for (const auto& f : *fibers) is_fiber = is_fiber || f == v.witness;
      return is_fiber && neumaier(g, v.witness);
    });
  }
  timed_witness(c, "DO_4 size 14 lifted from O_4", [] {
    const Graph g = build("DO_4");
    const auto v = decide(*find_entry("DO_4"), &g);
    return v.status == Status::kYes && v.rule == Rule::kDoubledOdd && v.witness.size() == 14 && neumaier(g, v.witness);
  });
  for (const char* row : {"K*_{3,3}", "K*_{5,5}", "K*_{6,6}"}) {
    timed_witness(c, std::string(row) + " two-element code", [row] {
      const CatalogEntry& e = *find_entry(row);
      const Graph g = build(e.builders.front());
      const auto v = decide(e, &g);
      if (v.status != Status::kYes || v.witness.size() != 2) return false;
      return distance_table(g).at(v.witness[0], v.witness[1]) == 3 && neumaier(g, v.witness);
    });
  }
  if (!grid_note.empty()) c.note(grid_note);
}

void ac3(Check& c) {
  const Graph cage = build("Tutte's 12-cage");
  int yes_count = 0;
  for (int side : {0, 1}) {
    const Graph h = bipartite_half(cage, side);
    const auto t = distance_table(h);
    const bool gamma3_connected = is_connected(induced_subgraph(h, t.sphere(0, 3)));
    const auto r = search_perfect_1(h);
    c.require(r.status != SearchStatus::kUnknown, "search settles side " + std::to_string(side));
    if (r.status == SearchStatus::kYes) {
      ++yes_count;
      c.require(r.witness.size() == 9 && neumaier(h, r.witness), "size-9 verified code");
      c.require(!gamma3_connected, "code found on the side with disconnected Gamma_3");
    } else {
      c.require(gamma3_connected, "no code on the side with connected Gamma_3");
      std::size_t nine_cliques = 0;
      const auto st = for_each_clique(distance_i_graph(h, t, 3), 9, kDefaultBudget,
                                      [&](const std::vector<Vertex>&) { return ++nine_cliques, false; });
      c.require(!st.budget_exhausted && nine_cliques == 0, "no 9-clique in the distance-3 graph");
    }
    c.note("side " + std::to_string(side) + ": Gamma_3 " + (gamma3_connected ? "connected" : "disconnected") +
           ", " + (r.status == SearchStatus::kYes ? "code of size " + std::to_string(r.witness.size()) : "no code"));
  }
  c.require(yes_count == 1, "exactly one half admits a code");
}

void ac4(Check& c) {
  struct Case {
    std::string name;
    Geometry geom;
    IntersectionArray array;
    std::size_t n;
    int girth;
  };
  auto pg = [](long long q) { return IntersectionArray({q + 1, q, q}, {1, 1, q + 1}); };
  auto gq = [](long long q) { return IntersectionArray({q + 1, q, q, q}, {1, 1, 1, q + 1}); };
  auto gh = [](long long q) { return IntersectionArray({q + 1, q, q, q, q, q}, {1, 1, 1, 1, 1, q + 1}); };
  std::vector<Case> cases;
  cases.push_back({"PG(2,2)", projective_plane(2), pg(2), 14, 6});
  cases.push_back({"PG(2,3)", projective_plane(3), pg(3), 26, 6});
  cases.push_back({"PG(2,4)", projective_plane(4), pg(4), 42, 6});
  cases.push_back({"W(2)", symplectic_gq(2), gq(2), 30, 8});
  cases.push_back({"W(3)", symplectic_gq(3), gq(3), 80, 8});
  cases.push_back({"W(4)", symplectic_gq(4), gq(4), 170, 8});
  cases.push_back({"H(2)", split_cayley_hexagon(2), gh(2), 126, 12});
  cases.push_back({"H(3)", split_cayley_hexagon(3), gh(3), 728, 12});
  for (const auto& k : cases) {
    const Graph g = incidence_graph(k.geom);
    const auto t = distance_table(g);
    const auto mismatch = check_intersection_array(g, t, k.array);
    c.require(!mismatch, k.name + " array " + (mismatch ? mismatch->message() : ""));
    c.require(g.order() == k.n, k.name + " order");
    c.require(t.diameter == k.array.diameter(), k.name + " diameter");
    c.require(t.girth == k.girth, k.name + " girth");
  }
  c.note(std::to_string(cases.size()) + " incidence graphs checked");
}

void ac5(Check& c) {
  for (auto [q, bound] : {std::pair{2, kAc5BoundQ2}, std::pair{3, kAc5BoundQ3}}) {
    const Graph g = incidence_graph(double_geometry(projective_plane(q)));
    const auto r = max_disjoint_closed_edge_neighborhoods(g);
    c.require(r.optimal, "q=" + std::to_string(q) + " search completed");
    c.note("q=" + std::to_string(q) + ": exact maximum " + std::to_string(r.size) + " (bound " +
           std::to_string(bound) + ", " + std::to_string(g.size()) + " edges)");
    c.require(r.size <= bound, "q=" + std::to_string(q) + " maximum " + std::to_string(r.size) + " <= " +
                                   std::to_string(bound));
  }
}

void ac6(Check& c) {
  std::size_t witnesses = 0, compared = 0;
  for (const auto& e : catalog()) {
    for (const auto& name : e.builders) {
      const Graph g = build(name);
      if (g.order() > 300) continue;
      const auto r = search_perfect_1(g);
      c.require(r.status != SearchStatus::kUnknown, "search settles " + name);
      if (r.status == SearchStatus::kYes) {
        ++witnesses;
        c.require(neumaier(g, r.witness), "(a) Neumaier for " + name);
      }
      if (g.order() <= 40) {
        ++compared;
        const bool brute = !oracle::perfect_codes(g, 1).empty();
        c.require(brute == (r.status == SearchStatus::kYes), "(b) brute force on " + name);
      }
    }
  }
  for (std::size_t n = 3; n <= 30; ++n) {
    const auto r = search_perfect_1(graphs::cycle(n));
    c.require((r.status == SearchStatus::kYes) == (n % 3 == 0), "(c) C_" + std::to_string(n));
  }
  for (const auto& e : catalog())
    c.require(charpoly_eval(e.array, Rational(e.valency())) == 0, "(d) charpoly at k for " + e.name);
  for (auto [name, theta_sq] : {std::pair{"Q_4", 4}, std::pair{"IG(GQ(3,3))", 6}}) {
    const auto a = *expected_array(name);
    const Rational t2 = second_largest_eigenvalue_sq_bipartite_d4(a);
    c.require(t2 == theta_sq, std::string("(e) theta^2 of ") + name);
    c.require(has_eigenvalue_pair_sqrt(a, t2), std::string("(e) +-theta roots of ") + name);
    const auto ev = oracle::adjacency_eigenvalues(build(name));
    c.require(std::abs(ev[ev.size() - 2] - std::sqrt(static_cast<double>(t2))) < 1e-9,
              std::string("(e) dense second eigenvalue of ") + name);
  }
  c.note(std::to_string(witnesses) + " witnesses classified, " + std::to_string(compared) +
         " graphs compared with brute force");
}

void ac7(Check& c, std::uint64_t budget, const std::string& checkpoint_path) {
  const LineGraph lg = line_graph(build("IG(GH(3,3))"));
  std::optional<ExactCoverCheckpoint> resume;
  if (!checkpoint_path.empty()) {
    std::ifstream in(checkpoint_path);
    if (in) {
      std::stringstream ss;
      ss << in.rdbuf();
      resume = ExactCoverCheckpoint::from_json(ss.str());
    }
  }
  const auto r = ghx33_nonexistence_search(lg, budget, resume ? &*resume : nullptr);
  if (r.checkpoint && !checkpoint_path.empty()) std::ofstream(checkpoint_path) << r.checkpoint->to_json();
  c.note(r.detail);
  c.note("nodes " + std::to_string(r.nodes));
  c.require(r.status == SearchStatus::kNo, "exhaustive refutation completed with No");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  bool full = false;
  std::uint64_t budget = 0;
  std::string checkpoint;
  app.add_flag("--full", full, "also run the extended hexagon refutation");
  app.add_option("--budget", budget, "node budget for the extended run");
  app.add_option("--checkpoint", checkpoint, "checkpoint file for the extended run (read and written)");
  CLI11_PARSE(app, argc, argv);

  criterion("AC1", "table regression over 61 rows", kAc1Seconds, ac1);
  criterion("AC2", "positive witnesses found and verified", 14 * kAc2SecondsEach, ac2);
  criterion("AC3", "GH(2,2) dichotomy", kAc3Seconds, ac3);
  criterion("AC4", "construction oracles", kAc4Seconds, ac4);
  criterion("AC5", "edge-packing bounds in doubled planes", kAc5Seconds, ac5);
  criterion("AC6", "property suites", kAc6Seconds, ac6);
  if (full) {
    Check c;
    const auto t = Clock::now();
    try {
      ac7(c, budget ? budget : std::uint64_t{1} << 40, checkpoint);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double s = since(t);
    std::cout << "AC7 " << (c.ok ? "PASS" : "FAIL") << " extended hexagon refutation (" << s << " s, not gating)";
    for (const auto& n : c.notes) std::cout << "; " << n;
    std::cout << std::endl;
  } else {
    std::cout << "AC7 SKIP extended hexagon refutation (pass --full to run; not gating)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
