#include "doctest.h"
#include "drg/catalog.hpp"
#include "drg/code.hpp"
#include "drg/named_graphs.hpp"
#include "drg/search.hpp"
#include "drg/spectral.hpp"
#include "oracles.hpp"

using namespace drg;

TEST_SUITE("properties") {

TEST_CASE("cycles admit a code exactly when 3 divides n") {
  for (std::size_t n = 3; n <= 30; ++n) {
    const Graph c = graphs::cycle(n);
    const auto r = search_perfect_1(c);
    CHECK_MESSAGE((r.status == SearchStatus::kYes) == (n % 3 == 0), "C_" << n);
    CHECK(r.status != SearchStatus::kUnknown);
  }
}

TEST_CASE("valency is a root of every catalog array") {
  for (const auto& e : catalog()) {
    CHECK_MESSAGE(charpoly_eval(e.array, Rational(e.valency())) == 0, e.name);
  }
}

TEST_CASE("search agrees with brute force on small catalog graphs") {
  std::size_t compared = 0;
  for (const auto& e : catalog()) {
    for (const auto& name : e.builders) {
      const Graph g = build(name);
      if (g.order() > 40) continue;
      const auto brute = oracle::perfect_codes(g, 1);
      const auto r = search_perfect_1(g);
      REQUIRE(r.status != SearchStatus::kUnknown);
      CHECK_MESSAGE((r.status == SearchStatus::kYes) == !brute.empty(), name);
      if (r.status == SearchStatus::kYes) CHECK(oracle::is_perfect_code(g, r.witness));
      ++compared;
    }
  }
  CHECK(compared >= 40);
}

TEST_CASE("clique route agrees with exact cover on diameter-3 graphs up to 70 vertices") {
  std::size_t compared = 0;
  for (const auto& e : catalog()) {
    if (e.d != 3 || e.n > 70) continue;
    for (const auto& name : e.builders) {
      const Graph g = build(name);
      const auto a = search_perfect_1(g, {SearchMode::kCanonical});
      const auto b = search_via_distance3_clique(g);
      REQUIRE(a.status != SearchStatus::kUnknown);
      CHECK_MESSAGE(a.status == b.status, name);
      CHECK(a.witness.size() == b.witness.size());
      ++compared;
    }
  }
  CHECK(compared >= 10);
}

TEST_CASE("every witness from a catalog graph is completely regular with d = 3 and t = 1") {
  for (const auto& e : catalog()) {
    if (e.n > 300) continue;
    for (const auto& name : e.builders) {
      const Graph g = build(name);
      const auto r = search_perfect_1(g);
      if (r.status != SearchStatus::kYes) continue;
      const auto rep = classify_code(g, r.witness);
      CHECK_MESSAGE(rep.is_perfect_1, name);
      CHECK_MESSAGE(rep.completely_regular, name);
      CHECK_MESSAGE(rep.covering_radius == 1, name);
      if (r.witness.size() > 1) CHECK_MESSAGE(rep.min_distance == 3, name);
    }
  }
}

}
