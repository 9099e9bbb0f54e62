#include <algorithm>

#include "json.hpp"

#include "doctest.h"
#include "drg/catalog.hpp"
#include "drg/error.hpp"
#include "oracles.hpp"

using namespace drg;

namespace {

std::vector<std::string> yes_rows(const std::vector<CatalogEntry>& rs) {
  std::vector<std::string> out;
  for (const auto& e : rs)
    if (e.expected == Status::kYes) out.push_back(e.name);
  return out;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("table sizes") {
  CHECK(catalog().size() == 61);
  const auto t1 = rows(3);
  CHECK(t1.size() == 13);
  CHECK(t1.back().name == "Tutte's 12-cage");
  CHECK(rows(4).size() == 17);
  CHECK(rows(5).size() == 15);
  CHECK(rows(67).size() == 16);
  CHECK(rows(6).size() + rows(7).size() == 16);
  CHECK_THROWS_AS(rows(8), CatalogError);
}

TEST_CASE("registered Yes rows") {
  CHECK(yes_rows(rows(3)) == std::vector<std::string>{"K_4", "K*_{3,3}", "Coxeter"});
  CHECK(yes_rows(rows(4)) ==
        std::vector<std::string>{"K_5", "K*_{5,5}", "L(Petersen)", "O_4", "L(Tutte's 8-cage)", "DO_4"});
  CHECK(yes_rows(rows(67)) == std::vector<std::string>{"K_7", "GH(2,2) (Graph 1)", "K_8", "Klein"});
  const auto* o4 = find_entry("O_4");
  REQUIRE(o4);
  CHECK(o4->expected == Status::kYes);
  const auto* syl = find_entry("Sylvester");
  REQUIRE(syl);
  CHECK(syl->expected == Status::kYes);
}

TEST_CASE("row arrays are consistent with their n column") {
  for (const auto& e : catalog()) {
    const auto ks = k_sequence(e.array);
    CHECK_MESSAGE(ks.n == e.n, e.name);
    CHECK_MESSAGE(e.array.diameter() == e.d, e.name);
  }
}

TEST_CASE("builders") {
  const Graph o4 = build("O_4");
  CHECK(o4.order() == 35);
  CHECK(verify_intersection_array(o4) == IntersectionArray::parse("4,3,3;1,1,2"));
  const Graph s = build("Sylvester");
  CHECK(s.order() == 36);
  CHECK(verify_intersection_array(s) == IntersectionArray::parse("5,4,2;1,1,4"));
  const Graph k66 = build("K*_{6,6}");
  CHECK(k66.order() == 12);
  CHECK(verify_intersection_array(k66) == IntersectionArray::parse("5,4,1;1,4,5"));
  CHECK(build("C_7").order() == 7);
  CHECK(build("K_{3,3,3}").order() == 9);
  CHECK_THROWS_AS(build("Nonexistent graph"), CatalogError);
  CHECK(build_for_array(IntersectionArray::parse("3,2;1,1")).has_value());
  CHECK_FALSE(build_for_array(IntersectionArray::parse("3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3")));
}

TEST_CASE("every builder verifies against its row by the definition") {
  for (const auto& e : catalog()) {
    for (const auto& name : e.builders) {
      const Graph g = build(name);
      CHECK_MESSAGE(static_cast<long long>(g.order()) == e.n, name);
      if (g.order() > 200) continue;
      const auto o = oracle::intersection_numbers(g);
      REQUIRE_MESSAGE(o, name);
      CHECK_MESSAGE(o->b == e.array.bs(), name);
      CHECK_MESSAGE(o->c == e.array.cs(), name);
      CHECK_MESSAGE(oracle::girth(g) == e.g, name);
    }
  }
}

TEST_CASE("catalog json lists every row") {
  const auto j = nlohmann::json::parse(catalog_json());
  const auto& arr = j.is_array() ? j : j.at("entries");
  CHECK(arr.size() == 61);
}

}
