#pragma once

#include "cyclekit/graph.hpp"

namespace cyclekit {

Graph complete_graph(int n);
/// K̄_n.
Graph empty_graph(int n);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);
/// P_n: n vertices in a row.
Graph path_graph(int n);
/// C_n for n >= 3.
Graph cycle_graph(int n);
/// K_{1,m} with centre 0.
Graph star_graph(int m);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen_graph();
/// N_{i,j,k}: triangle 0,1,2 with pendant paths of i, j, k edges hung on
/// 0, 1 and 2 respectively. N_{0,0,0} is K_3.
Graph net_graph(int i, int j, int k);

}  // namespace cyclekit
