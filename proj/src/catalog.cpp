#include "drg/catalog.hpp"

#include <functional>
#include <map>
#include <regex>

#include "json.hpp"

#include "drg/error.hpp"
#include "drg/geometry.hpp"
#include "drg/named_graphs.hpp"

namespace drg {

namespace {

using Builder = std::function<Graph()>;

IntersectionArray arr(std::string_view s) { return IntersectionArray::parse(s); }

CatalogEntry row(int table, std::string name, std::string_view array, long long n, int d, int g,
                 Status expected, Reason reason, std::vector<std::string> builders = {},
                 std::optional<std::string_view> base = std::nullopt) {
  CatalogEntry e;
  e.table = table;
  e.name = std::move(name);
  e.array = arr(array);
  e.n = n;
  e.d = d;
  e.g = g;
  e.expected = expected;
  e.reason = reason;
  e.builders = std::move(builders);
  if (base) e.line_graph_base = arr(*base);
  return e;
}

std::vector<CatalogEntry> make_catalog() {
  constexpr auto Y = Status::kYes;
  constexpr auto N = Status::kNo;
  using R = Reason;
  auto self = [](const char* s) { return std::vector<std::string>{s}; };
  std::vector<CatalogEntry> c{
      row(1, "K_4", "3;1", 4, 1, 3, Y, R::kCompleteGraph, self("K_4")),
      row(1, "K_{3,3}", "3,2;1,3", 6, 2, 4, N, R::kEq1, self("K_{3,3}")),
      row(1, "K*_{3,3}", "3,2,1;1,2,3", 8, 3, 4, Y, R::kBipartiteD3, self("K*_{4,4}")),
      row(1, "Petersen", "3,2;1,1", 10, 2, 5, N, R::kEq1, self("Petersen")),
      row(1, "Heawood", "3,2,2;1,1,3", 14, 3, 6, N, R::kEq1, self("Heawood")),
      row(1, "Pappus", "3,2,2,1;1,1,2,3", 18, 4, 6, N, R::kEq1, self("Pappus")),
      row(1, "Desargues", "3,2,2,1,1;1,1,2,2,3", 20, 5, 6, N, R::kAntipodalD45, self("Desargues")),
      row(1, "Dodecahedron", "3,2,1,1,1;1,1,1,2,3", 20, 5, 5, N, R::kAntipodalD45, self("Dodecahedron")),
      row(1, "Coxeter", "3,2,2,1;1,1,1,2", 28, 4, 7, Y, R::kCoxeterProp, self("Coxeter")),
      row(1, "Tutte's 8-cage", "3,2,2,2;1,1,1,3", 30, 4, 8, N, R::kEq1, self("Tutte's 8-cage")),
      row(1, "Foster", "3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3", 90, 8, 10, N, R::kEq1),
      row(1, "Biggs-Smith", "3,2,2,2,1,1,1;1,1,1,1,1,1,3", 102, 7, 9, N, R::kEq1),
      row(1, "Tutte's 12-cage", "3,2,2,2,2,2;1,1,1,1,1,3", 126, 6, 12, N, R::kEq1, self("Tutte's 12-cage")),

      row(2, "K_5", "4;1", 5, 1, 3, Y, R::kCompleteGraph, self("K_5")),
      row(2, "K_{2,2,2}", "4,1;1,4", 6, 2, 3, N, R::kEq1, self("K_{2,2,2}")),
      row(2, "K_{4,4}", "4,3;1,4", 8, 2, 4, N, R::kEq1, self("K_{4,4}")),
      row(2, "P(9)", "4,2;1,2", 9, 2, 3, N, R::kEq1, self("P(9)")),
      row(2, "K*_{5,5}", "4,3,1;1,3,4", 10, 3, 4, Y, R::kBipartiteD3, self("K*_{5,5}")),
      row(2, "IG(7,4,2)", "4,3,2;1,2,4", 14, 3, 4, N, R::kEq1, self("IG(7,4,2)")),
      row(2, "L(Petersen)", "4,2,1;1,1,4", 15, 3, 3, Y, R::kAntipodalD3, self("L(Petersen)"), "3,2;1,1"),
      row(2, "Q_4", "4,3,2,1;1,2,3,4", 16, 4, 4, N, R::kEq1, self("Q_4")),
      row(2, "L(Heawood)", "4,2,2;1,1,2", 21, 3, 3, N, R::kEq1, self("L(Heawood)"), "3,2,2;1,1,3"),
      row(2, "IG(13,4,1)", "4,3,3;1,1,4", 26, 3, 6, N, R::kEq1, self("IG(13,4,1)")),
      row(2, "IG(A(2,4)\\pc)", "4,3,3,1;1,1,3,4", 32, 4, 6, N, R::kEq1, self("IG(A(2,4)\\pc)")),
      row(2, "O_4", "4,3,3;1,1,2", 35, 3, 6, Y, R::kFig1, self("O_4")),
      row(2, "L(Tutte's 8-cage)", "4,2,2,2;1,1,1,2", 45, 4, 3, Y, R::kLGQ, self("L(Tutte's 8-cage)"),
          "3,2,2,2;1,1,1,3"),
      row(2, "DO_4", "4,3,3,2,2,1,1;1,1,2,2,3,3,4", 70, 7, 6, Y, R::kDoubleOdd, self("DO_4")),
      row(2, "IG(GQ(3,3))", "4,3,3,3;1,1,1,4", 80, 4, 8, N, R::kObs2, self("IG(GQ(3,3))")),
      row(2, "L(Tutte's 12-cage)", "4,2,2,2,2,2;1,1,1,1,1,2", 189, 6, 3, N, R::kEq1, self("L(Tutte's 12-cage)"),
          "3,2,2,2,2,2;1,1,1,1,1,3"),
      row(2, "IG(GH(3,3))", "4,3,3,3,3,3;1,1,1,1,1,4", 728, 6, 12, N, R::kEq1, self("IG(GH(3,3))")),

      row(3, "K_6", "5;1", 6, 1, 3, Y, R::kCompleteGraph, self("K_6")),
      row(3, "K_{5,5}", "5,4;1,5", 10, 2, 4, N, R::kEq1, self("K_{5,5}")),
      row(3, "Icosahedron", "5,2,1;1,2,5", 12, 3, 3, Y, R::kAntipodalD3, self("Icosahedron")),
      row(3, "K*_{6,6}", "5,4,1;1,4,5", 12, 3, 4, Y, R::kBipartiteD3, self("K*_{6,6}")),
      row(3, "Folded 5-cube", "5,4;1,2", 16, 2, 4, N, R::kEq1, self("Folded 5-cube")),
      row(3, "IG(11,5,2)", "5,4,3;1,2,5", 22, 3, 4, N, R::kEq1, self("IG(11,5,2)")),
      row(3, "Q_5", "5,4,3,2,1;1,2,3,4,5", 32, 5, 4, N, R::kEq1, self("Q_5")),
      row(3, "Armanios-Wells", "5,4,1,1;1,1,4,5", 32, 4, 5, N, R::kEq1),
      row(3, "Sylvester", "5,4,2;1,1,4", 36, 3, 5, Y, R::kSylvesterProp, self("Sylvester")),
      row(3, "IG(21,5,1)", "5,4,4;1,1,5", 42, 3, 6, N, R::kObs2, self("IG(21,5,1)")),
      row(3, "IG(A(2,5)\\pc)", "5,4,4,1;1,1,4,5", 50, 4, 6, N, R::kEq1),
      row(3, "O_5", "5,4,4,3;1,1,2,2", 126, 4, 6, N, R::kObs2, self("O_5")),
      row(3, "IG(GQ(4,4))", "5,4,4,4;1,1,1,5", 170, 4, 8, N, R::kEq1, self("IG(GQ(4,4))")),
      row(3, "DO_5", "5,4,4,3,3,2,2,1,1;1,1,2,2,3,3,4,4,5", 252, 9, 6, N, R::kDoubleOdd, self("DO_5")),
      row(3, "IG(GH(4,4))", "5,4,4,4,4,4;1,1,1,1,1,5", 2730, 6, 12, N, R::kObs2),

      row(4, "K_7", "6;1", 7, 1, 3, Y, R::kCompleteGraph, self("K_7")),
      row(4, "K_{2,2,2,2}", "6,1;1,6", 8, 2, 3, N, R::kEq1, self("K_{2,2,2,2}")),
      row(4, "K_{3,3,3}", "6,2;1,6", 9, 2, 3, N, R::kEq1, self("K_{3,3,3}")),
      row(4, "T(5)", "6,2;1,4", 10, 2, 3, N, R::kEq1, self("T(5)")),
      row(4, "P(13)", "6,3;1,3", 13, 2, 3, N, R::kEq1, self("P(13)")),
      row(4, "complement(T(6)) ~ GQ(2,2)", "6,4;1,3", 15, 2, 3, N, R::kEq1, {"complement(T(6))", "GQ(2,2)"}),
      row(4, "L_2(4), Shrikhande", "6,3;1,2", 16, 2, 3, N, R::kEq1, {"L_2(4)", "Shrikhande"}),
      row(4, "H(3,3)", "6,4,2;1,2,3", 27, 3, 3, N, R::kEq1, self("H(3,3)")),
      row(4, "halved Foster", "6,4,2,1;1,1,4,6", 45, 4, 3, N, R::kEq1),
      row(4, "L(IG(13,4,1))", "6,3,3;1,1,2", 52, 3, 3, N, R::kEq1, self("L(IG(13,4,1))"), "4,3,3;1,1,4"),
      row(4, "GH(2,2) (Graph 1)", "6,4,4;1,1,3", 63, 3, 3, Y, R::kSearch, self("GH(2,2) (Graph 1)")),
      row(4, "GH(2,2) (Graph 2)", "6,4,4;1,1,3", 63, 3, 3, N, R::kSearch, self("GH(2,2) (Graph 2)")),
      row(4, "L(IG(GQ(3,3)))", "6,3,3,3;1,1,1,2", 160, 4, 3, N, R::kLGQ, self("L(IG(GQ(3,3)))"), "4,3,3,3;1,1,1,4"),
      row(4, "L(IG(GH(3,3)))", "6,3,3,3,3,3;1,1,1,1,1,2", 1456, 6, 3, N, R::kLGH, self("L(IG(GH(3,3)))"),
          "4,3,3,3,3,3;1,1,1,1,1,4"),
      row(4, "K_8", "7;1", 8, 1, 3, Y, R::kCompleteGraph, self("K_8")),
      row(4, "Klein", "7,4,1;1,2,7", 24, 3, 3, Y, R::kAntipodalD3, self("Klein")),
  };
  for (auto& e : c)
    if (e.reason == Reason::kLGH) e.desk_infeasible = true;
  return c;
}

Graph line_of(const Graph& g) { return line_graph(g).graph; }

const std::map<std::string, Builder, std::less<>>& named_builders() {
  using namespace graphs;
  static const std::map<std::string, Builder, std::less<>> m{
      {"Petersen", petersen},
      {"Heawood", [] { return incidence_graph(projective_plane(2)); }},
      {"Pappus", [] { return incidence_graph(affine_plane_minus_parallel_class(3)); }},
      {"Desargues", [] { return doubled_odd(3); }},
      {"Dodecahedron", dodecahedron},
      {"Coxeter", coxeter},
      {"Tutte's 8-cage", [] { return incidence_graph(symplectic_gq(2)); }},
      {"Tutte's 12-cage", [] { return incidence_graph(split_cayley_hexagon(2)); }},
      {"P(9)", [] { return paley(9); }},
      {"P(13)", [] { return paley(13); }},
      {"IG(7,4,2)", ig_7_4_2},
      {"IG(11,5,2)", ig_11_5_2},
      {"L(Petersen)", [] { return line_of(petersen()); }},
      {"L(Heawood)", [] { return line_of(incidence_graph(projective_plane(2))); }},
      {"IG(13,4,1)", [] { return incidence_graph(projective_plane(3)); }},
      {"IG(21,5,1)", [] { return incidence_graph(projective_plane(4)); }},
      {"IG(A(2,4)\\pc)", [] { return incidence_graph(affine_plane_minus_parallel_class(4)); }},
      {"L(Tutte's 8-cage)", [] { return line_of(incidence_graph(symplectic_gq(2))); }},
      {"IG(GQ(3,3))", [] { return incidence_graph(symplectic_gq(3)); }},
      {"IG(GQ(4,4))", [] { return incidence_graph(symplectic_gq(4)); }},
      {"L(Tutte's 12-cage)", [] { return line_of(incidence_graph(split_cayley_hexagon(2))); }},
      {"IG(GH(3,3))", [] { return incidence_graph(split_cayley_hexagon(3)); }},
      {"Icosahedron", icosahedron},
      {"Folded 5-cube", [] { return folded_cube(5); }},
      {"Sylvester", sylvester},
      {"complement(T(6))", [] { return complement(triangular(6)); }},
      {"GQ(2,2)", [] { return point_graph(symplectic_gq(2)); }},
      {"L_2(4)", [] { return rook(4); }},
      {"Shrikhande", shrikhande},
      {"H(3,3)", [] { return hamming(3, 3); }},
      {"L(IG(13,4,1))", [] { return line_of(incidence_graph(projective_plane(3))); }},
      {"GH(2,2) (Graph 1)", gh22_point_graph_disconnected_gamma3},
      {"GH(2,2) (Graph 2)", gh22_point_graph_connected_gamma3},
      {"L(IG(GQ(3,3)))", [] { return line_of(incidence_graph(symplectic_gq(3))); }},
      {"L(IG(GH(3,3)))", [] { return line_of(incidence_graph(split_cayley_hexagon(3))); }},
      {"Klein", klein},
  };
  return m;
}

// Family names: graph builder plus its array when it has a closed form.
struct FamilyMatch {
  Builder builder;
  std::optional<IntersectionArray> array;
};

std::optional<FamilyMatch> match_family(std::string_view name) {
  const std::string s(name);
  std::smatch m;
  auto num = [&](int i) { return std::stoi(m[i].str()); };
  static const std::regex cycle_re(R"(C_(\d+))"), complete_re(R"(K_(\d+))"),
      multi_re(R"(K_\{(\d+(?:,\d+)+)\})"), crown_re(R"(K\*_\{(\d+),(\d+)\})"), cube_re(R"(Q_(\d+))"),
      odd_re(R"(O_(\d+))"), dodd_re(R"(DO_(\d+))"), tri_re(R"(T\((\d+)\))"), paley_re(R"(P\((\d+)\))");
  if (std::regex_match(s, m, cycle_re)) {
    const int n = num(1);
    if (n < 3) return std::nullopt;
    const int d = n / 2;
    std::vector<long long> b{2}, c;
    for (int i = 1; i < d; ++i) b.push_back(1);
    for (int i = 1; i < d; ++i) c.push_back(1);
    c.push_back(n % 2 == 0 ? 2 : 1);
    return FamilyMatch{[n] { return graphs::cycle(static_cast<std::size_t>(n)); }, IntersectionArray(b, c)};
  }
  if (std::regex_match(s, m, complete_re)) {
    const int n = num(1);
    if (n < 2) return std::nullopt;
    return FamilyMatch{[n] { return graphs::complete(static_cast<std::size_t>(n)); },
                       IntersectionArray({n - 1}, {1})};
  }
  if (std::regex_match(s, m, multi_re)) {
    std::vector<int> parts;
    const std::string list = m[1].str();
    for (std::size_t pos = 0; pos < list.size();) {
      const auto comma = std::min(list.find(',', pos), list.size());
      parts.push_back(std::stoi(list.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    const int size = parts.front();
    for (int p : parts)
      if (p != size) throw CatalogError("complete multipartite graphs need equal parts: " + s);
    if (size < 1) return std::nullopt;
    const long long t = static_cast<long long>(parts.size());
    const long long k = (t - 1) * size;
    std::optional<IntersectionArray> a;
    if (size >= 2) a = IntersectionArray({k, size - 1}, {1, k});
    return FamilyMatch{[t, size] { return graphs::complete_multipartite(static_cast<std::size_t>(t), static_cast<std::size_t>(size)); }, a};
  }
  if (std::regex_match(s, m, crown_re)) {
    const int n = num(1);
    if (num(2) != n) throw CatalogError("K*_{n,n} needs equal parts: " + s);
    if (n < 3) return std::nullopt;
    return FamilyMatch{[n] { return graphs::crown(static_cast<std::size_t>(n)); },
                       IntersectionArray({n - 1, n - 2, 1}, {1, n - 2, n - 1})};
  }
  if (std::regex_match(s, m, cube_re)) {
    const int n = num(1);
    if (n < 1 || n > 16) return std::nullopt;
    std::vector<long long> b, c;
    for (int i = 0; i < n; ++i) b.push_back(n - i);
    for (int i = 1; i <= n; ++i) c.push_back(i);
    return FamilyMatch{[n] { return graphs::hypercube(n); }, IntersectionArray(b, c)};
  }
  if (std::regex_match(s, m, dodd_re)) {
    const int n = num(1);
    if (n < 2 || n > 8) return std::nullopt;
    return FamilyMatch{[n] { return graphs::doubled_odd(n); }, odd_family_array(n, 2 * n - 1)};
  }
  if (std::regex_match(s, m, odd_re)) {
    const int n = num(1);
    if (n < 2 || n > 8) return std::nullopt;
    return FamilyMatch{[n] { return graphs::odd(n); }, odd_family_array(n, n - 1)};
  }
  if (std::regex_match(s, m, tri_re)) {
    const int n = num(1);
    if (n < 4 || n > 30) return std::nullopt;
    return FamilyMatch{[n] { return graphs::triangular(n); }, IntersectionArray({2 * (n - 2), n - 3}, {1, 4})};
  }
  if (std::regex_match(s, m, paley_re)) {
    const int q = num(1);
    return FamilyMatch{[q] { return graphs::paley(q); }, std::nullopt};
  }
  return std::nullopt;
}

const CatalogEntry* entry_for_builder(std::string_view name) {
  for (const auto& e : catalog())
    for (const auto& b : e.builders)
      if (b == name) return &e;
  return nullptr;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = make_catalog();
  return c;
}

std::vector<CatalogEntry> rows(int valency) {
  if (valency == 3 || valency == 4 || valency == 5) return rows_for_table(valency - 2);
  if (valency == 67) return rows_for_table(4);
  if (valency == 6 || valency == 7) {
    std::vector<CatalogEntry> out;
    for (const auto& e : catalog())
      if (e.table == 4 && e.valency() == valency) out.push_back(e);
    return out;
  }
  throw CatalogError("unsupported valency " + std::to_string(valency) + " (expected 3, 4, 5, 6, 7 or 67)");
}

std::vector<CatalogEntry> rows_for_table(int table) {
  if (table == 67) table = 4;
  if (table < 1 || table > 4) throw CatalogError("unknown table " + std::to_string(table));
  std::vector<CatalogEntry> out;
  for (const auto& e : catalog())
    if (e.table == table) out.push_back(e);
  return out;
}

const CatalogEntry* find_entry(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return entry_for_builder(name);
}

std::optional<IntersectionArray> expected_array(std::string_view name) {
  if (const CatalogEntry* e = entry_for_builder(name)) return e->array;
  if (named_builders().count(name)) return std::nullopt;
  if (auto f = match_family(name)) return f->array;
  return std::nullopt;
}

Graph build(std::string_view name) {
  Graph g;
  std::optional<IntersectionArray> want;
  if (auto it = named_builders().find(name); it != named_builders().end()) {
    g = it->second();
    if (const CatalogEntry* e = entry_for_builder(name)) want = e->array;
  } else if (auto f = match_family(name)) {
    g = f->builder();
    want = f->array;
    if (const CatalogEntry* e = entry_for_builder(name)) want = e->array;
  } else {
    throw CatalogError("unknown graph name '" + std::string(name) + "'");
  }
  if (!is_connected(g)) throw CatalogError(std::string(name) + ": constructed graph is disconnected");
  const DistanceTable t = distance_table(g);
  if (want) {
    if (auto mismatch = check_intersection_array(g, t, *want))
      throw CatalogError(std::string(name) + ": constructed graph fails " + want->str() + ": " + mismatch->message());
  } else if (!verify_intersection_array(g, t)) {
    throw CatalogError(std::string(name) + ": constructed graph is not distance-regular");
  }
  return g;
}

std::vector<std::string> builder_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog())
    for (const auto& b : e.builders) out.push_back(b);
  return out;
}

std::optional<Graph> build_for_array(const IntersectionArray& a) {
  for (const auto& e : catalog())
    if (e.array == a && e.has_builder()) return build(e.builders.front());
  return std::nullopt;
}

std::string catalog_json() {
  nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
  for (const auto& e : catalog()) {
    nlohmann::ordered_json j;
    j["table"] = e.table;
    j["name"] = e.name;
    j["array"] = e.array.str();
    j["b"] = e.array.bs();
    j["c"] = e.array.cs();
    j["n"] = e.n;
    j["d"] = e.d;
    j["g"] = e.g;
    j["expected_verdict"] = to_string(e.expected);
    j["expected_reason"] = to_string(e.reason);
    j["builders"] = e.builders;
    j["line_graph_base"] = e.line_graph_base ? nlohmann::ordered_json(e.line_graph_base->str()) : nullptr;
    j["desk_infeasible"] = e.desk_infeasible;
    rows_json.push_back(std::move(j));
  }
  return nlohmann::ordered_json{{"entries", rows_json}}.dump(2) + "\n";
}

}  // namespace drg
