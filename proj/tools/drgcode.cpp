// drgcode: perfect 1-codes in distance-regular graphs.
//
// Exit codes: 0 ok, 1 mismatch or negative check, 2 budget exhausted,
// 3 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "drg/catalog.hpp"
#include "drg/code.hpp"
#include "drg/decide.hpp"
#include "drg/error.hpp"
#include "drg/geometry.hpp"
#include "drg/report.hpp"
#include "drg/search.hpp"
#include "drg/spectral.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kBudget = 2;
constexpr int kUsage = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("DRG_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("DRG_BUDGET is not a number: ") + env);
    }
  }
  return drg::kDefaultBudget;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

drg::Graph graph_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<drg::Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<drg::Vertex>(), e.at(1).get<drg::Vertex>());
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return drg::Graph(j.at("n").get<std::size_t>(), edges, labels);
}

// A catalog name, or a file in edge-list or JSON format.
drg::Graph resolve_graph(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    const std::string text = read_file(spec);
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") return graph_from_json(text);
    std::istringstream in(text);
    return drg::read_edge_list(in);
  }
  return drg::build(spec);
}

std::vector<drg::Vertex> resolve_code(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    std::string text = read_file(spec);
    return drg::parse_code(text);
  }
  return drg::parse_code(spec);
}

int status_exit(drg::Status s) { return s == drg::Status::kUnknown ? kBudget : kOk; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect 1-codes in distance-regular graphs"};
  app.require_subcommand(1);

  // report
  auto* report = app.add_subcommand("report", "Recompute the reference tables and compare verdicts");
  std::string valency = "all";
  std::string format = "md";
  std::uint64_t report_budget = 0;
  bool full = false;
  bool assume = true;
  report->add_option("--valency", valency, "3, 4, 5, 6, 7, 67 or all")->check(CLI::IsMember({"3", "4", "5", "6", "7", "67", "all"}));
  report->add_option("--format", format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
  report->add_option("--budget", report_budget, "search node budget (default: DRG_BUDGET or built-in)");
  report->add_flag("--full", full, "run the extended search on rows that are out of reach by default");
  report->add_flag("--assume-paper,!--no-assume-paper", assume,
                   "report registered verdicts for out-of-reach rows (default on)");

  // search
  auto* search = app.add_subcommand("search", "Search a graph for a perfect 1-code");
  std::string graph_spec;
  std::string method = "auto";
  std::uint64_t search_budget = 0;
  bool canonical = false;
  bool serial = false;
  std::string witness_out, checkpoint_out, resume_in;
  search->add_option("--graph", graph_spec, "catalog name or graph file")->required();
  search->add_option("--method", method, "auto, exact-cover or clique")->check(CLI::IsMember({"auto", "exact-cover", "clique"}));
  search->add_option("--budget", search_budget, "node budget");
  search->add_flag("--canonical", canonical, "return the lexicographically smallest code");
  search->add_flag("--serial", serial, "disable the parallel branch fan-out");
  search->add_option("--out", witness_out, "write the witness code to this file");
  search->add_option("--checkpoint", checkpoint_out, "write a resumable checkpoint if the budget runs out");
  search->add_option("--resume", resume_in, "resume from a checkpoint file");

  // verify
  auto* verify = app.add_subcommand("verify", "Classify a vertex set as a code");
  std::string verify_graph, code_spec;
  verify->add_option("--graph", verify_graph, "catalog name or graph file")->required();
  verify->add_option("--code", code_spec, "code file or comma-separated list")->required();

  // decide
  auto* decide_cmd = app.add_subcommand("decide", "Run the rule pipeline on an array or catalog row");
  std::string decide_array_text, decide_name, decide_graph;
  std::uint64_t decide_budget = 0;
  decide_cmd->add_option("--array", decide_array_text, "intersection array b0,..;c1,..");
  decide_cmd->add_option("--name", decide_name, "catalog row name");
  decide_cmd->add_option("--graph", decide_graph, "graph for the search stage");
  decide_cmd->add_option("--budget", decide_budget, "node budget");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Exact characteristic polynomial of the intersection matrix");
  std::string spec_array, at = "-1";
  spectrum->add_option("--array", spec_array, "intersection array b0,..;c1,..")->required();
  spectrum->add_option("--at", at, "rational point p or p/q");

  // geometry
  auto* geometry = app.add_subcommand("geometry", "Construct a finite geometry");
  std::string geom_type;
  int q = 2;
  bool geom_dual = false;
  std::string geom_export, graph_export;
  geometry->add_option("--type", geom_type, "pp, gq, gh, double, agpc or duad")
      ->required()
      ->check(CLI::IsMember({"pp", "gq", "gh", "double", "agpc", "duad"}));
  geometry->add_option("--q", q, "order");
  geometry->add_flag("--dual", geom_dual, "take the dual geometry");
  geometry->add_option("--export", geom_export, "write geometry JSON");
  geometry->add_option("--incidence-graph", graph_export, "write the incidence graph as JSON");

  // export
  auto* export_cmd = app.add_subcommand("export", "Export a graph");
  std::string export_graph, export_format = "json", export_out;
  export_cmd->add_option("--graph", export_graph, "catalog name or graph file")->required();
  export_cmd->add_option("--format", export_format, "json or edges")->check(CLI::IsMember({"json", "edges"}));
  export_cmd->add_option("--out", export_out, "output file (default stdout)");

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "Export every registered row as JSON");
  std::string catalog_out;
  catalog_cmd->add_option("--out", catalog_out, "output file (default stdout)");

  // packing
  auto* packing = app.add_subcommand("packing", "Largest edge set with disjoint closed edge neighborhoods");
  std::string packing_graph;
  int packing_double = 0;
  std::uint64_t packing_budget = 0;
  packing->add_option("--graph", packing_graph, "catalog name or graph file");
  packing->add_option("--double", packing_double, "use the incidence graph of the double of PG(2,q)");
  packing->add_option("--budget", packing_budget, "node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    const std::uint64_t budget_default = default_budget();
    auto pick = [&](std::uint64_t b) { return b ? b : budget_default; };

    if (*report) {
      std::vector<drg::CatalogEntry> entries =
          valency == "all" ? drg::catalog() : drg::rows(std::stoi(valency));
      drg::ReportOptions ro;
      ro.decide.budget = pick(report_budget);
      ro.decide.full = full;
      ro.decide.assume_registered = assume;
      const auto rows = drg::run_report(entries, ro);
      if (format == "md") std::cout << drg::render_markdown(rows);
      if (format == "csv") std::cout << drg::render_csv(rows);
      if (format == "json") std::cout << drg::render_json(rows);
      int rc = kOk;
      for (const auto& r : rows) {
        if (r.verdict.status == drg::Status::kUnknown) {
          std::cerr << "budget exhausted: " << r.entry.name << ": " << r.verdict.reason << "\n";
          if (rc == kOk) rc = kBudget;
        } else if (!r.match) {
          std::cerr << "mismatch: " << r.entry.name << ": expected " << drg::to_string(r.entry.expected) << ", got "
                    << drg::to_string(r.verdict.status) << "\n";
          rc = kMismatch;
        }
        if (!r.structure_match) {
          std::cerr << "structure mismatch: " << r.entry.name << "\n";
          rc = kMismatch;
        }
      }
      return rc;
    }

    if (*search) {
      const drg::Graph g = resolve_graph(graph_spec);
      drg::SearchResult r;
      std::optional<drg::ExactCoverCheckpoint> resume;
      if (!resume_in.empty()) resume = drg::ExactCoverCheckpoint::from_json(read_file(resume_in));
      const drg::DistanceTable t = drg::distance_table(g);
      const bool clique = !canonical && !resume &&
                          (method == "clique" || (method == "auto" && t.diameter == 3));
      if (clique) {
        r = drg::search_via_distance3_clique(g, pick(search_budget));
      } else {
        drg::SearchOptions so;
        so.mode = canonical ? drg::SearchMode::kCanonical : drg::SearchMode::kExistence;
        so.budget = pick(search_budget);
        so.parallel = !serial && checkpoint_out.empty();
        so.resume = resume ? &*resume : nullptr;
        r = drg::search_perfect_1(g, so);
      }
      drg::Verdict v;
      v.status = r.status == drg::SearchStatus::kYes ? drg::Status::kYes
                 : r.status == drg::SearchStatus::kNo ? drg::Status::kNo
                                                      : drg::Status::kUnknown;
      v.rule = r.method == "divisibility" ? drg::Rule::kDivisibility : drg::Rule::kSearch;
      v.reason = r.method + ": " + r.detail;
      v.trace.push_back({v.rule,
                         v.status == drg::Status::kYes ? drg::Outcome::kYes
                         : v.status == drg::Status::kNo ? drg::Outcome::kNo
                                                        : drg::Outcome::kUnknown,
                         r.detail + " (" + std::to_string(r.nodes) + " nodes)"});
      if (v.status == drg::Status::kYes) {
        v.witness = r.witness;
        v.witness_verified = drg::verify_perfect_1(g, r.witness);
        if (!v.witness_verified) throw drg::CodeError("search returned an invalid witness");
        if (!witness_out.empty()) write_file(witness_out, drg::format_code(r.witness) + "\n");
      }
      if (r.checkpoint && !checkpoint_out.empty()) write_file(checkpoint_out, r.checkpoint->to_json());
      std::optional<drg::Reason> reason;
      if (const auto* e = drg::find_entry(graph_spec)) reason = e->reason;
      std::cout << drg::verdict_json(graph_spec, v, reason).dump(2) << "\n";
      return status_exit(v.status);
    }

    if (*verify) {
      const drg::Graph g = resolve_graph(verify_graph);
      const auto code = resolve_code(code_spec);
      const drg::Code c(g, code);
      const drg::CodeReport rep = drg::classify_code(g, c.vertices());
      std::cout << drg::code_report_json(rep).dump(2) << "\n";
      return rep.is_perfect_1 ? kOk : kMismatch;
    }

    if (*decide_cmd) {
      drg::DecideOptions dopt;
      dopt.budget = pick(decide_budget);
      std::optional<drg::Graph> g;
      if (!decide_graph.empty()) g = resolve_graph(decide_graph);
      drg::Verdict v;
      std::string name;
      std::optional<drg::Reason> reason;
      if (!decide_name.empty()) {
        const auto* e = drg::find_entry(decide_name);
        if (!e) throw UsageError("unknown catalog row '" + decide_name + "'");
        if (!g && e->has_builder() && !e->desk_infeasible) g = drg::build(e->builders.front());
        v = drg::decide(*e, g ? &*g : nullptr, dopt);
        name = e->name;
        reason = e->reason;
      } else if (!decide_array_text.empty()) {
        const auto a = drg::IntersectionArray::parse(decide_array_text);
        v = drg::decide_array(a, g ? &*g : nullptr, dopt);
        name = a.str();
      } else {
        throw UsageError("decide needs --array or --name");
      }
      std::cout << drg::verdict_json(name, v, reason).dump(2) << "\n";
      return status_exit(v.status);
    }

    if (*spectrum) {
      const auto a = drg::IntersectionArray::parse(spec_array);
      const drg::Rational x = drg::parse_rational(at);
      const drg::Rational value = drg::charpoly_eval(a, x);
      std::cout << drg::to_string(value) << "\n";
      return kOk;
    }

    if (*geometry) {
      drg::Geometry geom;
      if (geom_type == "pp") geom = drg::projective_plane(q);
      if (geom_type == "gq") geom = drg::symplectic_gq(q);
      if (geom_type == "gh") geom = drg::split_cayley_hexagon(q);
      if (geom_type == "double") geom = drg::double_geometry(drg::projective_plane(q));
      if (geom_type == "agpc") geom = drg::affine_plane_minus_parallel_class(q);
      if (geom_type == "duad") geom = drg::duad_syntheme_gq();
      if (geom_dual) geom = drg::dual(geom);
      std::cout << geom.name << ": " << geom.num_points() << " points, " << geom.num_lines() << " lines, order ("
                << geom.s << "," << geom.t << ")\n";
      if (!geom_export.empty()) write_file(geom_export, drg::geometry_json(geom).dump(2) + "\n");
      if (!graph_export.empty()) write_file(graph_export, drg::graph_json(drg::incidence_graph(geom)).dump() + "\n");
      return kOk;
    }

    if (*export_cmd) {
      const drg::Graph g = resolve_graph(export_graph);
      std::string text;
      if (export_format == "json") {
        text = drg::graph_json(g).dump() + "\n";
      } else {
        std::ostringstream os;
        drg::write_edge_list(os, g);
        text = os.str();
      }
      if (export_out.empty()) std::cout << text;
      else write_file(export_out, text);
      return kOk;
    }

    if (*catalog_cmd) {
      if (catalog_out.empty()) std::cout << drg::catalog_json();
      else write_file(catalog_out, drg::catalog_json());
      return kOk;
    }

    if (*packing) {
      drg::Graph g;
      if (packing_double) g = drg::incidence_graph(drg::double_geometry(drg::projective_plane(packing_double)));
      else if (!packing_graph.empty()) g = resolve_graph(packing_graph);
      else throw UsageError("packing needs --graph or --double");
      const auto r = drg::max_disjoint_closed_edge_neighborhoods(g, 0, pick(packing_budget));
      nlohmann::ordered_json j;
      j["size"] = r.size;
      j["upper_bound"] = r.upper_bound;
      j["optimal"] = r.optimal;
      j["nodes"] = r.nodes;
      j["edges"] = r.edges;
      std::cout << j.dump(2) << "\n";
      return r.optimal ? kOk : kBudget;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const drg::CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const drg::ArrayError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kOk;
}
