#pragma once

#include <vector>

#include "drg/graph.hpp"

namespace drg::graphs {

Graph complete(std::size_t n);
/// K_{m,m,...} with `parts` parts of size `m`.
Graph complete_multipartite(std::size_t parts, std::size_t m);
/// K_{n,n} minus a perfect matching (i ~ n+j for i != j).
Graph crown(std::size_t n);
Graph cycle(std::size_t n);
Graph hypercube(int n);
/// Q_{n-1} plus the edges x ~ complement(x).
Graph folded_cube(int n);
/// Kneser graph on (n-1)-subsets of {0..2n-2}, subsets in colex order.
Graph odd(int n);
/// Middle levels of {0..2n-2}: (n-1)-subsets then n-subsets, each in colex order.
Graph doubled_odd(int n);
/// J(m,2): 2-subsets of {0..m-1} in colex order, adjacent when they meet.
Graph triangular(int m);
Graph hamming(int d, int q);
/// Paley graph for q in {5, 9, 13, 17}.
Graph paley(int q);
/// K_m box K_m.
Graph rook(int m);

Graph petersen();
Graph dodecahedron();
Graph icosahedron();
Graph coxeter();
Graph shrikhande();
Graph hoffman_singleton();
/// Hoffman-Singleton minus the closed neighborhoods of the edge (0,1).
Graph sylvester();
/// Cosets of the order-7 subgroup in PSL(2,7); degree 7 on 24 vertices.
Graph klein();

/// Incidence graph of a block design given by its blocks on points 0..v-1.
Graph design_incidence_graph(std::size_t v, const std::vector<std::vector<Vertex>>& blocks);
/// 2-(7,4,2): complements of the Fano lines {i, i+1, i+3} mod 7.
Graph ig_7_4_2();
/// 2-(11,5,2): translates of the quadratic residues {1,3,4,5,9} mod 11.
Graph ig_11_5_2();

/// Point graphs of the two generalized hexagons of order (2,2): H(2) and its
/// dual. They are told apart by whether Γ_3(x) induces a connected graph.
Graph gh22_point_graph_connected_gamma3();
Graph gh22_point_graph_disconnected_gamma3();

}  // namespace drg::graphs
