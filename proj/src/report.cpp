#include "drg/report.hpp"

#include <chrono>
#include <sstream>

namespace drg {

namespace {

std::string status_word(Status s) {
  switch (s) {
    case Status::kYes: return "Yes";
    case Status::kNo: return "No";
    case Status::kUnknown: return "Unknown";
  }
  return "Unknown";
}

std::string computed_cell(const ReportRow& r) {
  std::string s = status_word(r.verdict.status);
  if (r.verdict.rule == Rule::kAssumed) s += " (registered, not independently verified)";
  return s;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

}  // namespace

bool is_array_level(const CatalogEntry& e) {
  switch (e.reason) {
    case Reason::kEq1:
    case Reason::kObs2:
    case Reason::kObs1Srg:
    case Reason::kAntipodalD3:
    case Reason::kAntipodalD45:
    case Reason::kBipartiteD3:
    case Reason::kCompleteGraph:
      return true;
    case Reason::kLGQ:
      return e.expected == Status::kNo;
    default:
      return false;
  }
}

bool reason_matches(const CatalogEntry& e, const Verdict& v) {
  if (v.status != e.expected) return false;
  if (is_array_level(e)) return v.decided_by(rule_for(e.reason), e.expected);
  if (e.reason == Reason::kDoubleOdd) return v.decided_by(Rule::kDoubledOdd, e.expected);
  // Search-backed tags: a search settled the row.
  if (!v.decided_by(Rule::kSearch, e.expected)) return false;
  return e.expected == Status::kNo || v.witness_verified;
}

ReportRow evaluate_row(const CatalogEntry& e, const ReportOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  ReportRow row;
  row.entry = e;
  std::optional<Graph> g;
  if (opts.build_graphs && e.has_builder()) {
    g = build(e.builders.front());
    const DistanceTable t = distance_table(*g);
    row.built = BuiltStructure{g->order(), t.diameter, t.girth};
    row.structure_match = static_cast<long long>(g->order()) == e.n && t.diameter == e.d && t.girth == e.g;
    for (std::size_t i = 1; i < e.builders.size(); ++i) {
      const Graph alt = build(e.builders[i]);
      const DistanceTable ta = distance_table(alt);
      row.structure_match = row.structure_match && static_cast<long long>(alt.order()) == e.n &&
                            ta.diameter == e.d && ta.girth == e.g;
    }
  }
  row.verdict = decide(e, g ? &*g : nullptr, opts.decide);
  row.match = row.verdict.status == e.expected;
  row.reason_match = reason_matches(e, row.verdict);
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::vector<ReportRow> run_report(const std::vector<CatalogEntry>& entries, const ReportOptions& opts) {
  std::vector<ReportRow> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(evaluate_row(e, opts));
  return out;
}

std::string render_markdown(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  os << "| Table | Intersection array | n | d | g | Name | Expected | Computed | Rule | Reason tag | Match | Reason match | Witness |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << r.entry.table << " | " << r.entry.array.str() << " | " << r.entry.n << " | " << r.entry.d << " | "
       << r.entry.g << " | " << r.entry.name << " | " << status_word(r.entry.expected) << " | " << computed_cell(r)
       << " | " << to_string(r.verdict.rule) << " | " << to_string(r.entry.reason) << " | "
       << (r.match ? "ok" : "MISMATCH") << " | " << (r.reason_match ? "ok" : "-") << " | "
       << (r.verdict.witness.empty() ? "" : "{" + format_code(r.verdict.witness) + "}") << " |\n";
  }
  return os.str();
}

std::string render_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  os << "table,array,n,d,g,name,expected,computed,rule,reason_tag,match,reason_match,structure_match,witness\n";
  for (const auto& r : rows) {
    os << r.entry.table << ',' << csv_quote(r.entry.array.str()) << ',' << r.entry.n << ',' << r.entry.d << ','
       << r.entry.g << ',' << csv_quote(r.entry.name) << ',' << to_string(r.entry.expected) << ','
       << to_string(r.verdict.status) << ',' << to_string(r.verdict.rule) << ',' << to_string(r.entry.reason) << ','
       << (r.match ? "true" : "false") << ',' << (r.reason_match ? "true" : "false") << ','
       << (r.structure_match ? "true" : "false") << ',' << csv_quote(format_code(r.verdict.witness)) << '\n';
  }
  return os.str();
}

std::string render_json(const std::vector<ReportRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["table"] = r.entry.table;
    j["array"] = r.entry.array.str();
    j["n"] = r.entry.n;
    j["d"] = r.entry.d;
    j["g"] = r.entry.g;
    j["expected"] = to_string(r.entry.expected);
    j["verdict"] = verdict_json(r.entry.name, r.verdict, r.entry.reason);
    j["match"] = r.match;
    j["reason_match"] = r.reason_match;
    j["structure_match"] = r.structure_match;
    if (r.built) j["built"] = {{"n", r.built->n}, {"diameter", r.built->diameter}, {"girth", r.built->girth}};
    j["seconds"] = r.seconds;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

nlohmann::ordered_json verdict_json(const std::string& name, const Verdict& v,
                                    const std::optional<Reason>& registered_reason) {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["status"] = to_string(v.status);
  j["rule"] = to_string(v.rule);
  j["paper_reason"] = registered_reason ? nlohmann::ordered_json(std::string(to_string(*registered_reason))) : nullptr;
  j["reason"] = v.reason;
  j["witness"] = v.witness;
  j["witness_verified"] = v.witness_verified;
  nlohmann::ordered_json trace = nlohmann::ordered_json::array();
  for (const auto& s : v.trace)
    trace.push_back({{"rule", to_string(s.rule)}, {"outcome", to_string(s.outcome)}, {"detail", s.detail}});
  j["trace"] = std::move(trace);
  return j;
}

nlohmann::ordered_json graph_json(const Graph& g) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (Vertex v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
  return {{"n", g.order()}, {"edges", std::move(edges)}, {"labels", std::move(labels)}};
}

nlohmann::ordered_json geometry_json(const Geometry& geom) {
  return {{"name", geom.name},
          {"points", geom.point_labels},
          {"lines", geom.lines},
          {"order", {geom.s, geom.t}}};
}

nlohmann::ordered_json code_report_json(const CodeReport& r) {
  nlohmann::ordered_json j;
  j["size"] = r.size;
  j["is_independent"] = r.is_independent;
  j["is_perfect_1"] = r.is_perfect_1;
  j["min_distance"] = r.min_distance ? nlohmann::ordered_json(*r.min_distance) : nullptr;
  j["covering_radius"] = r.covering_radius;
  j["completely_regular"] = r.completely_regular;
  nlohmann::ordered_json levels = nlohmann::ordered_json::array();
  for (const auto& l : r.levels) levels.push_back({{"c", l.c}, {"a", l.a}, {"b", l.b}});
  j["outer_distribution"] = std::move(levels);
  if (r.violation)
    j["regularity_violation"] = {{"level", r.violation->level},
                                 {"vertex", r.violation->vertex},
                                 {"expected", {r.violation->expected.c, r.violation->expected.a, r.violation->expected.b}},
                                 {"found", {r.violation->found.c, r.violation->found.a, r.violation->found.b}}};
  if (r.cover_violation)
    j["cover_violation"] = {{"first_vertex", *r.cover_violation}, {"count", r.cover_violation_count}};
  return j;
}

}  // namespace drg
