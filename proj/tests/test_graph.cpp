#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "drg/catalog.hpp"
#include "drg/error.hpp"
#include "drg/graph.hpp"
#include "drg/intersection_array.hpp"
#include "drg/named_graphs.hpp"
#include "oracles.hpp"

using namespace drg;

TEST_SUITE("graph") {

TEST_CASE("bfs rows of small graphs") {
  const Graph p = graphs::petersen();
  const auto fw = oracle::floyd_warshall(p);
  for (Vertex v = 0; v < p.order(); ++v) {
    const auto row = bfs_distances(p, v);
    CHECK(std::count(row.begin(), row.end(), 1) == 3);
    CHECK(std::count(row.begin(), row.end(), 2) == 6);
    for (Vertex w = 0; w < p.order(); ++w) CHECK(row[w] == fw[v][w]);
  }
  CHECK(bfs_distances(graphs::complete(4), 0) == std::vector<int>{0, 1, 1, 1});
  CHECK(bfs_distances(graphs::cycle(6), 0) == std::vector<int>{0, 1, 2, 3, 2, 1});
}

TEST_CASE("bfs on a disconnected graph names the unreachable vertex") {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  const Graph g(6, e);
  CHECK_FALSE(is_connected(g));
  CHECK_THROWS_AS(bfs_distances(g, 0), GraphError);
  CHECK_THROWS_AS(distance_table(g), GraphError);
}

TEST_CASE("construction rejects loops and out-of-range endpoints") {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> far{{0, 7}};
  CHECK_THROWS_AS(Graph(3, loop), GraphError);
  CHECK_THROWS_AS(Graph(3, far), GraphError);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK(Graph(2, dup).size() == 1);
}

TEST_CASE("diameter and girth") {
  const auto heawood = distance_table(build("Heawood"));
  CHECK(heawood.diameter == 3);
  CHECK(heawood.girth == 6);
  const Graph cox = graphs::coxeter();
  const auto t = distance_table(cox);
  CHECK(t.diameter == 4);
  CHECK(t.girth == 7);
  CHECK(t.girth == oracle::girth(cox));
  const auto k5 = distance_table(graphs::complete(5));
  CHECK(k5.diameter == 1);
  CHECK(k5.girth == 3);
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  CHECK(distance_table(Graph(3, path)).girth == kInfiniteGirth);
}

TEST_CASE("distance table agrees with Floyd-Warshall and the serial kernel") {
  for (const char* name : {"Petersen", "Coxeter", "O_4", "Sylvester", "Tutte's 8-cage", "Q_5"}) {
    const Graph g = build(name);
    const auto t = distance_table(g);
    const auto s = distance_table_serial(g);
    CHECK(t.dist == s.dist);
    CHECK(t.girth == s.girth);
    CHECK(t.girth == oracle::girth(g));
    const auto fw = oracle::floyd_warshall(g);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v) REQUIRE(t.at(u, v) == fw[u][v]);
  }
}

TEST_CASE("line graphs") {
  const LineGraph lp = line_graph(graphs::petersen());
  CHECK(lp.graph.order() == 15);
  CHECK(lp.graph.regular_degree() == 4u);
  CHECK(std::is_sorted(lp.edge_map.begin(), lp.edge_map.end()));
  const LineGraph l8 = line_graph(build("Tutte's 8-cage"));
  CHECK(l8.graph.order() == 45);
  CHECK(l8.graph.regular_degree() == 4u);
  const LineGraph lh = line_graph(build("IG(GH(3,3))"));
  CHECK(lh.graph.order() == 1456);
  CHECK(lh.graph.regular_degree() == 6u);
}

TEST_CASE("distance-3 graphs") {
  const Graph s3 = distance_i_graph(graphs::sylvester(), 3);
  CHECK(s3.order() == 36);
  const auto ks = k_sequence(IntersectionArray::parse("5,4,2;1,1,4"));
  CHECK(ks.k[3] == 10);
  CHECK(s3.regular_degree() == 10u);
  const Graph o3 = distance_i_graph(graphs::odd(4), 3);
  CHECK(o3.order() == 35);
  CHECK(o3.regular_degree() == 18u);
  CHECK_THROWS_AS(distance_i_graph(graphs::petersen(), 3), GraphError);
}

TEST_CASE("antipodal classes and folding") {
  const Graph lp = line_graph(graphs::petersen()).graph;
  const auto f = antipodal_classes(lp);
  REQUIRE(f);
  CHECK(f->size() == 5);
  for (const auto& c : *f) CHECK(c.size() == 3);
  CHECK(folded_graph(lp, *f) == graphs::complete(5));

  const Graph ico = graphs::icosahedron();
  const auto fi = antipodal_classes(ico);
  REQUIRE(fi);
  CHECK(fi->size() == 6);
  CHECK(folded_graph(ico, *fi) == graphs::complete(6));

  CHECK_FALSE(antipodal_classes(graphs::petersen()));

  const Graph do4 = graphs::doubled_odd(4);
  const auto fd = antipodal_classes(do4);
  REQUIRE(fd);
  const Graph folded = folded_graph(do4, *fd);
  CHECK(verify_intersection_array(folded) == IntersectionArray::parse("4,3,3;1,1,2"));

  CHECK_THROWS_AS(folded_graph(lp, {{0, 1}, {1, 2}}), GraphError);
}

TEST_CASE("bipartite halves") {
  CHECK(bipartite_half(graphs::cycle(6), 0) == graphs::complete(3));
  const Graph cage = build("Tutte's 12-cage");
  const Graph h0 = bipartite_half(cage, 0);
  const Graph h1 = bipartite_half(cage, 1);
  const auto gh = IntersectionArray::parse("6,4,4;1,1,3");
  CHECK(h0.order() == 63);
  CHECK(verify_intersection_array(h0) == gh);
  CHECK(verify_intersection_array(h1) == gh);
  CHECK_THROWS_AS(bipartite_half(graphs::petersen(), 0), GraphError);
}

TEST_CASE("the two halves of the 12-cage differ in the connectivity of Gamma_3") {
  const Graph cage = build("Tutte's 12-cage");
  std::vector<bool> connected;
  for (int side : {0, 1}) {
    const Graph h = bipartite_half(cage, side);
    const auto t = distance_table(h);
    const auto s = t.sphere(0, 3);
    connected.push_back(is_connected(induced_subgraph(h, s)));
  }
  CHECK(connected[0] != connected[1]);
  const Graph g2 = graphs::gh22_point_graph_connected_gamma3();
  CHECK(is_connected(induced_subgraph(g2, distance_table(g2).sphere(0, 3))));
}

TEST_CASE("complement and induced subgraphs") {
  const Graph ct6 = complement(graphs::triangular(6));
  CHECK(ct6.order() == 15);
  CHECK(ct6.regular_degree() == 6u);
  const std::vector<Edge> two_triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  CHECK_FALSE(is_connected(Graph(6, two_triangles)));
  const std::vector<Vertex> s{4, 0, 1};
  const Graph sub = induced_subgraph(graphs::cycle(5), s);
  CHECK(sub.adjacent(0, 1));
  CHECK(sub.adjacent(1, 2));
  CHECK_FALSE(sub.adjacent(0, 2));
}

TEST_CASE("edge-list round trip") {
  const Graph g = graphs::petersen();
  std::stringstream ss;
  write_edge_list(ss, g);
  CHECK(read_edge_list(ss) == g);
  std::stringstream bad("3 1\n0 5\n");
  CHECK_THROWS_AS(read_edge_list(bad), GraphError);
}

}
