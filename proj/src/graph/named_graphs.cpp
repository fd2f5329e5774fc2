#include "cyclekit/named_graphs.hpp"

namespace cyclekit {

Graph complete_graph(int n) {
  GraphBuilder b(n);
  b.add_clique(VertexSet::range(n));
  return std::move(b).build();
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw GraphError("complete_bipartite: negative part size");
  GraphBuilder g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return std::move(g).build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle_graph: need n >= 3");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph star_graph(int m) { return complete_bipartite(1, m); }

Graph petersen_graph() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
    b.add_edge(i, i + 5);
  }
  return std::move(b).build();
}

Graph net_graph(int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0) throw GraphError("net_graph: negative path length");
  GraphBuilder b(3 + i + j + k);
  b.add_edge(0, 1).add_edge(1, 2).add_edge(0, 2);
  int next = 3;
  const int lengths[] = {i, j, k};
  for (int corner = 0; corner < 3; ++corner) {
    int prev = corner;
    for (int step = 0; step < lengths[corner]; ++step) {
      b.add_edge(prev, next);
      prev = next++;
    }
  }
  return std::move(b).build();
}

}  // namespace cyclekit
