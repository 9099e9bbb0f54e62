#include "drg/decide.hpp"

#include "drg/code.hpp"
#include "drg/spectral.hpp"

namespace drg {

namespace {

std::string num(long long x) { return std::to_string(x); }

class Pipeline {
 public:
  Pipeline(const CatalogEntry& entry, const Graph* graph, const DecideOptions& opts)
      : e_(entry), a_(entry.array), g_(graph), opts_(opts) {}

  Verdict run() {
    const int d = a_.diameter();
    const long long k = a_.valency();
    const KSequence ks = k_sequence(a_);
    const ArrayClass cls = classify(a_);

    if (d == 1) {
      step(Rule::kCompleteGraph, Outcome::kYes, "complete graph K_" + num(k + 1) + ": any single vertex is a perfect 1-code");
      if (g_) witness_ = {0};
    } else {
      step(Rule::kCompleteGraph, Outcome::kNotApplicable, "diameter " + num(d));
    }

    if (ks.n % (k + 1) != 0)
      step(Rule::kDivisibility, Outcome::kNo, num(k + 1) + " does not divide n=" + num(ks.n));
    else
      step(Rule::kDivisibility, Outcome::kPass, "|C| would be " + num(ks.n / (k + 1)));

    if (d == 2)
      step(Rule::kDiameterTwo, Outcome::kNo, "diameter 2 leaves no code vertices at distance 3");
    else
      step(Rule::kDiameterTwo, Outcome::kNotApplicable, "diameter " + num(d));

    if (d >= 2) {
      if (has_eigenvalue(a_, Rational(-1)))
        step(Rule::kEigenvalueMinus1, Outcome::kPass, "-1 is an eigenvalue");
      else
        step(Rule::kEigenvalueMinus1, Outcome::kNo, "-1 is not an eigenvalue");
    } else {
      step(Rule::kEigenvalueMinus1, Outcome::kNotApplicable, "complete graph");
    }

    if (cls.antipodal && d == 3) {
      step(Rule::kAntipodalD3, Outcome::kYes, "antipodal diameter 3: each fiber (size " + num(cls.fiber_size) + ") is a perfect 1-code");
      if (g_ && witness_.empty() && status_ == Status::kYes && rule_ == Rule::kAntipodalD3) witness_ = first_fiber();
    } else {
      step(Rule::kAntipodalD3, Outcome::kNotApplicable, cls.antipodal ? "diameter " + num(d) : "not antipodal");
    }

    if (cls.antipodal && (d == 4 || d == 5))
      step(Rule::kAntipodalD45, Outcome::kNo, "antipodal with diameter " + num(d));
    else
      step(Rule::kAntipodalD45, Outcome::kNotApplicable, cls.antipodal ? "diameter " + num(d) : "not antipodal");

    if (cls.bipartite && d == 3) {
      const IntersectionArray crown({k, k - 1, 1}, {1, k - 1, k});
      if (a_ == crown) {
        step(Rule::kBipartiteD3, Outcome::kYes, "K_{k+1,k+1} minus a perfect matching: two antipodal vertices");
        if (g_ && witness_.empty() && rule_ == Rule::kBipartiteD3) witness_ = first_fiber();
      } else {
        step(Rule::kBipartiteD3, Outcome::kNo, "bipartite diameter 3 but not K*_{k+1,k+1}");
      }
    } else {
      step(Rule::kBipartiteD3, Outcome::kNotApplicable, cls.bipartite ? "diameter " + num(d) : "not bipartite");
    }

    if (cls.bipartite && d == 4)
      step(Rule::kBipartiteD4, Outcome::kNo, "bipartite diameter 4");
    else
      step(Rule::kBipartiteD4, Outcome::kNotApplicable, cls.bipartite ? "diameter " + num(d) : "not bipartite");

    if (open()) {
      doubled_odd();
    } else {
      step(Rule::kDoubledOdd, Outcome::kNotApplicable, "already decided");
    }

    line_graph_rule();

    if (open()) {
      search(cls);
    } else {
      step(Rule::kSearch, Outcome::kNotApplicable, "already decided");
    }

    return finish();
  }

 private:
  bool open() const { return !decided_; }

  void step(Rule r, Outcome o, std::string detail) {
    if (!decided_ && (o == Outcome::kYes || o == Outcome::kNo)) {
      decided_ = true;
      status_ = o == Outcome::kYes ? Status::kYes : Status::kNo;
      rule_ = r;
      reason_ = detail;
    }
    trace_.push_back({r, o, std::move(detail)});
  }

  std::vector<Vertex> first_fiber() const {
    const auto fibers = antipodal_classes(*g_);
    return fibers ? fibers->front() : std::vector<Vertex>{};
  }

  void doubled_odd() {
    const auto m = doubled_odd_parameter(a_);
    if (!m) {
      step(Rule::kDoubledOdd, Outcome::kNotApplicable, "not a doubled odd array");
      return;
    }
    const IntersectionArray odd = odd_family_array(*m, *m - 1);
    CatalogEntry sub;
    for (const auto& c : catalog())
      if (c.array == odd) {
        sub = c;
        break;
      }
    if (sub.name.empty()) {
      sub.name = "O_" + num(*m);
      sub.array = odd;
    }
    std::optional<Graph> folded;
    std::optional<std::vector<std::vector<Vertex>>> fibers;
    if (g_) {
      fibers = antipodal_classes(*g_);
      if (fibers) folded = folded_graph(*g_, *fibers);
    } else if (opts_.resolve) {
      folded = opts_.resolve(odd);
    }
    const Verdict inner = decide(sub, folded ? &*folded : nullptr, opts_);
    const std::string via = sub.name + ": " + std::string(to_string(inner.status)) + " by " + std::string(to_string(inner.rule));
    if (inner.status == Status::kYes) {
      step(Rule::kDoubledOdd, Outcome::kYes, "folds to " + via);
      if (g_ && fibers && !inner.witness.empty()) witness_ = antipodal_code_lift(*g_, *fibers, inner.witness);
    } else if (inner.status == Status::kNo) {
      step(Rule::kDoubledOdd, Outcome::kNo, "folds to " + via);
    } else {
      step(Rule::kDoubledOdd, Outcome::kUnknown, "folds to " + via);
    }
  }

  void line_graph_rule() {
    if (!e_.line_graph_base) {
      step(Rule::kLineGraph, Outcome::kNotApplicable, "not registered as a line graph");
      return;
    }
    const IntersectionArray& base = *e_.line_graph_base;
    const long long k0 = base.valency();
    std::vector<long long> required{-(k0 - 1)};
    if (classify(base).bipartite) required = {-(k0 - 1), k0 - 1, k0, -k0};
    for (long long x : required)
      if (!has_eigenvalue(base, Rational(x))) {
        step(Rule::kLineGraph, Outcome::kNo, "base " + base.str() + " lacks eigenvalue " + num(x));
        return;
      }
    step(Rule::kLineGraph, Outcome::kPass, "base " + base.str() + " has the required eigenvalues");
  }

  void search(const ArrayClass& cls) {
    if (e_.desk_infeasible && !opts_.full && opts_.assume_registered) {
      step(Rule::kSearch, Outcome::kNotApplicable, "extended search not run");
      decided_ = true;
      status_ = e_.expected;
      rule_ = Rule::kAssumed;
      reason_ = std::string(to_string(e_.expected)) + " (registered result, " + std::string(to_string(e_.reason)) +
                "; not independently verified)";
      return;
    }
    if (!g_) {
      step(Rule::kSearch, Outcome::kUnknown, "no graph available");
      return;
    }
    if (!opts_.run_search) {
      step(Rule::kSearch, Outcome::kUnknown, "search disabled");
      return;
    }
    std::string note;
    if (cls.primitive() && a_.diameter() == 3) {
      const auto srg = srg_params_of(distance_i_graph(*g_, 3));
      const long long size = k_sequence(a_).n / (a_.valency() + 1);
      if (srg)
        note = "; distance-3 graph srg(" + num(srg->n) + "," + num(srg->k) + "," + num(srg->lambda) + "," +
               num(srg->mu) + "), lambda >= |C|-2: " + (srg->lambda >= size - 2 ? "yes" : "no");
      else
        note = "; distance-3 graph not strongly regular";
    }
    SearchResult r;
    const bool clique = !opts_.canonical && (opts_.method == SearchMethod::kClique ||
                                             (opts_.method == SearchMethod::kAuto && a_.diameter() == 3));
    if (clique) {
      r = search_via_distance3_clique(*g_, opts_.budget);
    } else {
      SearchOptions so;
      so.budget = opts_.budget;
      so.mode = opts_.canonical ? SearchMode::kCanonical : SearchMode::kExistence;
      r = search_perfect_1(*g_, so);
    }
    const std::string detail = r.method + ", " + num(static_cast<long long>(r.nodes)) + " nodes: " + r.detail + note;
    switch (r.status) {
      case SearchStatus::kYes:
        witness_ = r.witness;
        step(Rule::kSearch, Outcome::kYes, "found a code of size " + num(static_cast<long long>(r.witness.size())) + " (" + detail + ")");
        break;
      case SearchStatus::kNo:
        step(Rule::kSearch, Outcome::kNo, "no perfect 1-code (" + detail + ")");
        break;
      case SearchStatus::kUnknown:
        step(Rule::kSearch, Outcome::kUnknown, detail);
        break;
    }
  }

  Verdict finish() {
    Verdict v;
    v.status = status_;
    v.rule = rule_;
    v.reason = decided_ ? reason_ : "no rule decided";
    v.trace = std::move(trace_);
    if (status_ == Status::kYes && g_) {
      bool ok = !witness_.empty() && verify_perfect_1(*g_, witness_);
      if (ok && witness_.size() >= 2) {
        const CodeReport rep = classify_code(*g_, witness_);
        ok = rep.completely_regular && rep.min_distance == 3 && rep.covering_radius == 1;
      }
      if (!ok) {
        v.status = Status::kUnknown;
        v.reason = "witness failed verification";
      } else {
        v.witness = witness_;
        v.witness_verified = true;
      }
    }
    return v;
  }

  const CatalogEntry& e_;
  const IntersectionArray& a_;
  const Graph* g_;
  const DecideOptions& opts_;
  bool decided_ = false;
  Status status_ = Status::kUnknown;
  Rule rule_ = Rule::kNone;
  std::string reason_;
  std::vector<Vertex> witness_;
  std::vector<TraceStep> trace_;
};

}  // namespace

std::optional<int> doubled_odd_parameter(const IntersectionArray& a) {
  const long long k = a.valency();
  if (k < 2 || a.diameter() != 2 * k - 1) return std::nullopt;
  if (a == odd_family_array(static_cast<int>(k), static_cast<int>(2 * k - 1))) return static_cast<int>(k);
  return std::nullopt;
}

Verdict decide(const CatalogEntry& entry, const Graph* graph, const DecideOptions& opts) {
  return Pipeline(entry, graph, opts).run();
}

Verdict decide_array(const IntersectionArray& a, const Graph* graph, const DecideOptions& opts) {
  CatalogEntry e;
  e.name = a.str();
  e.array = a;
  return decide(e, graph, opts);
}

}  // namespace drg
