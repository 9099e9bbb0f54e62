#include <set>

#include "doctest.h"
#include "drg/catalog.hpp"
#include "drg/error.hpp"
#include "drg/exact_cover.hpp"
#include "drg/named_graphs.hpp"
#include "drg/search.hpp"

using namespace drg;

namespace {

// Knuth's example: the unique cover is options {0, 3, 4}.
ExactCoverSolver knuth() {
  return ExactCoverSolver(7, {{2, 4, 5}, {0, 3, 6}, {1, 2, 5}, {0, 3}, {1, 6}, {3, 4, 6}});
}

}  // namespace

TEST_SUITE("exact_cover") {

TEST_CASE("solves the textbook instance") {
  auto s = knuth();
  const auto r = s.solve(1000);
  CHECK(r.status == ExactCoverResult::Status::kSolved);
  CHECK(r.solution == std::vector<std::uint32_t>{0, 3, 4});
  std::size_t count = 0;
  s.enumerate(1000, [&](const std::vector<std::uint32_t>&) { return ++count, true; });
  CHECK(count == 1);
}

TEST_CASE("reports no solution") {
  ExactCoverSolver s(3, {{0, 1}, {1, 2}});
  CHECK(s.solve(1000).status == ExactCoverResult::Status::kNoSolution);
  ExactCoverSolver empty_item(2, {{0}});
  CHECK(empty_item.solve(1000).status == ExactCoverResult::Status::kNoSolution);
  CHECK_FALSE(empty_item.top_level_options());
}

TEST_CASE("forcing") {
  auto s = knuth();
  CHECK(s.force(3));
  CHECK_FALSE(s.force(1));
  const auto r = s.solve(1000);
  CHECK(r.status == ExactCoverResult::Status::kSolved);
  CHECK(r.solution == std::vector<std::uint32_t>{0, 3, 4});
  auto t = knuth();
  CHECK(t.force(2));
  CHECK(t.solve(1000).status == ExactCoverResult::Status::kNoSolution);
}

TEST_CASE("budget exhaustion yields a resumable checkpoint") {
  const Graph g = build("Coxeter");
  auto full = perfect_code_instance(g);
  const auto ref = full.solve(kDefaultBudget);
  REQUIRE(ref.status == ExactCoverResult::Status::kSolved);
  REQUIRE(ref.nodes > 3);

  auto first = perfect_code_instance(g);
  auto r = first.solve(2);
  REQUIRE(r.status == ExactCoverResult::Status::kBudgetExhausted);
  REQUIRE(r.checkpoint);
  int rounds = 0;
  while (r.status == ExactCoverResult::Status::kBudgetExhausted && rounds < 10000) {
    const auto cp = ExactCoverCheckpoint::from_json(r.checkpoint->to_json());
    auto again = perfect_code_instance(g);
    r = again.solve(3, &cp);
    ++rounds;
  }
  CHECK(r.status == ExactCoverResult::Status::kSolved);
  CHECK(r.solution == ref.solution);
  CHECK(r.nodes == ref.nodes);
}

TEST_CASE("checkpoint json is versioned and validated") {
  ExactCoverCheckpoint cp;
  cp.path = {1, 2};
  cp.nodes = 5;
  cp.num_items = 7;
  cp.num_options = 6;
  const auto text = cp.to_json();
  CHECK(text.find("drg-exact-cover-checkpoint") != std::string::npos);
  const auto back = ExactCoverCheckpoint::from_json(text);
  CHECK(back.path == cp.path);
  CHECK(back.nodes == 5);
  CHECK_THROWS(ExactCoverCheckpoint::from_json("{\"format\":\"other\",\"version\":1}"));
  auto s = ExactCoverSolver(3, {{0, 1, 2}});
  CHECK_THROWS(s.solve(10, &cp));
}

TEST_CASE("parallel and serial existence agree") {
  for (const char* name : {"Coxeter", "O_4", "Sylvester", "Petersen", "Heawood", "Klein", "DO_4",
                           "GH(2,2) (Graph 1)", "GH(2,2) (Graph 2)"}) {
    const Graph g = build(name);
    auto serial = perfect_code_instance(g);
    const auto a = serial.solve(kDefaultBudget);
    const auto base = perfect_code_instance(g);
    const auto b = solve_parallel(base, kDefaultBudget);
    CHECK_MESSAGE(a.status == b.status, name);
    CHECK_MESSAGE(a.solution == b.solution, name);
  }
}

TEST_CASE("enumeration finds every perfect code of a cycle") {
  auto s = perfect_code_instance(graphs::cycle(12));
  std::set<std::vector<std::uint32_t>> found;
  s.enumerate(100000, [&](const std::vector<std::uint32_t>& sol) { return found.insert(sol), true; });
  CHECK(found.size() == 3);
}

}
