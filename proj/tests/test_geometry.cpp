#include "doctest.h"
#include "drg/catalog.hpp"
#include "drg/error.hpp"
#include "drg/geometry.hpp"
#include "drg/intersection_array.hpp"
#include "drg/named_graphs.hpp"
#include "oracles.hpp"

using namespace drg;

namespace {

IntersectionArray array_of(const Graph& g) {
  const auto a = verify_intersection_array(g);
  REQUIRE(a);
  return *a;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("finite fields satisfy the field axioms") {
  for (int q : {2, 3, 4}) {
    const FiniteField f(q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    }
  }
  CHECK_THROWS_AS(FiniteField(5), GeometryError);
}

TEST_CASE("projective planes") {
  const Geometry p2 = projective_plane(2);
  CHECK(p2.num_points() == 7);
  CHECK(p2.num_lines() == 7);
  CHECK(array_of(incidence_graph(p2)) == IntersectionArray::parse("3,2,2;1,1,3"));
  CHECK(projective_plane(3).num_points() == 13);
  CHECK(array_of(incidence_graph(projective_plane(3))) == IntersectionArray::parse("4,3,3;1,1,4"));
  CHECK(projective_plane(4).num_points() == 21);
  CHECK(array_of(incidence_graph(projective_plane(4))) == IntersectionArray::parse("5,4,4;1,1,5"));
}

TEST_CASE("symplectic quadrangles") {
  const Geometry w2 = symplectic_gq(2);
  CHECK(w2.num_points() == 15);
  CHECK(w2.num_lines() == 15);
  CHECK(incidence_graph(w2).order() == 30);
  CHECK(array_of(incidence_graph(w2)) == IntersectionArray::parse("3,2,2,2;1,1,1,3"));
  CHECK(array_of(point_graph(w2)) == IntersectionArray::parse("6,4;1,3"));
  const Geometry w3 = symplectic_gq(3);
  CHECK(w3.num_points() == 40);
  CHECK(w3.num_lines() == 40);
  CHECK(incidence_graph(symplectic_gq(4)).order() == 170);
}

TEST_CASE("split Cayley hexagons") {
  const Geometry h2 = split_cayley_hexagon(2);
  CHECK(h2.num_points() == 63);
  CHECK(h2.num_lines() == 63);
  const Graph ig = incidence_graph(h2);
  CHECK(array_of(ig) == IntersectionArray::parse("3,2,2,2,2,2;1,1,1,1,1,3"));
  CHECK(distance_table(ig).girth == 12);
  const auto gh = IntersectionArray::parse("6,4,4;1,1,3");
  CHECK(array_of(point_graph(h2)) == gh);
  CHECK(array_of(point_graph(dual(h2))) == gh);

  const Geometry h3 = split_cayley_hexagon(3);
  CHECK(h3.num_points() == 364);
  CHECK(h3.num_lines() == 364);
  CHECK(h3.s == 3);
  CHECK(h3.t == 3);
  CHECK(incidence_graph(h3).order() == 728);
}

TEST_CASE("the two hexagon point graphs are not isomorphic") {
  // Connectivity of the graph induced on Gamma_3 of a vertex is an
  // invariant; vertex-transitivity makes vertex 0 representative.
  auto gamma3_connected = [](const Graph& g) {
    return is_connected(induced_subgraph(g, distance_table(g).sphere(0, 3)));
  };
  const Geometry h2 = split_cayley_hexagon(2);
  CHECK(gamma3_connected(point_graph(h2)) != gamma3_connected(point_graph(dual(h2))));
}

TEST_CASE("doubled planes") {
  const Geometry d2 = double_geometry(projective_plane(2));
  CHECK(d2.num_points() == 14);
  CHECK(d2.num_lines() == 21);
  CHECK(d2.s == 1);
  CHECK(incidence_graph(d2).order() == 35);
  const Geometry d3 = double_geometry(projective_plane(3));
  CHECK(d3.num_points() == 26);
  CHECK(d3.num_lines() == 52);
  const Geometry d4 = double_geometry(projective_plane(4));
  CHECK(d4.num_points() == 42);
  CHECK(d4.num_lines() == 105);
}

TEST_CASE("duad-syntheme quadrangle and affine planes") {
  const Geometry ds = duad_syntheme_gq();
  CHECK(ds.num_points() == 15);
  CHECK(array_of(incidence_graph(ds)) == IntersectionArray::parse("3,2,2,2;1,1,1,3"));
  CHECK(array_of(incidence_graph(affine_plane_minus_parallel_class(4))) ==
        IntersectionArray::parse("4,3,3,1;1,1,3,4"));
  CHECK(array_of(point_graph(ds)) == array_of(complement(graphs::triangular(6))));
}

TEST_CASE("dual swaps points and lines") {
  const Geometry w2 = symplectic_gq(2);
  const Geometry d = dual(w2);
  CHECK(d.num_points() == w2.num_lines());
  CHECK(d.s == w2.t);
  CHECK(dual(d).lines == w2.lines);
}

TEST_CASE("validate rejects malformed geometries") {
  Geometry g;
  g.name = "broken";
  g.point_labels = {"a", "b", "c"};
  g.lines = {{0, 1}, {0, 1}};
  g.line_labels = {"x", "y"};
  g.s = 1;
  g.t = 1;
  CHECK_THROWS_AS(g.validate(), GeometryError);
}

}
