#include "cyclekit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace cyclekit {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : *this) {
    if (!first) os << ' ';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

namespace {

void check_order(int n) {
  if (n < 0) throw GraphError("graph order must be nonnegative");
  if (n > kMaxOrder) {
    throw GraphError("graph order " + std::to_string(n) + " exceeds the ceiling of " +
                     std::to_string(kMaxOrder) + " vertices");
  }
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  n_ = n;
  rows_.assign(n, VertexSet{});
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

VertexSet Graph::neighborhood(VertexSet x) const {
  VertexSet out;
  for (int v : x) out |= rows_[v];
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(q_);
  for (int u = 0; u < n_; ++u) {
    for (int v : rows_[u]) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::vector<int> label(n_, -1);
  int next = 0;
  for (int v : keep) label[v] = next++;
  GraphBuilder b(next);
  for (int u : keep) {
    for (int v : rows_[u] & keep) {
      if (v > u) b.add_edge(label[u], label[v]);
    }
  }
  return std::move(b).build();
}

GraphBuilder::GraphBuilder(int n) : graph_(n) {}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  const int n = graph_.n_;
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") has an endpoint outside 0.." + std::to_string(n - 1));
  }
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (!graph_.rows_[u].contains(v)) {
    graph_.rows_[u].insert(v);
    graph_.rows_[v].insert(u);
    ++graph_.q_;
  }
  return *this;
}

GraphBuilder& GraphBuilder::add_complete_bipartite(VertexSet a, VertexSet b) {
  for (int u : a) {
    for (int v : b) add_edge(u, v);
  }
  return *this;
}

GraphBuilder& GraphBuilder::add_clique(VertexSet s) {
  for (int u : s) {
    for (int v : s) {
      if (u < v) add_edge(u, v);
    }
  }
  return *this;
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  GraphBuilder b(n1 + g2.order());
  for (auto [u, v] : g1.edges()) b.add_edge(u, v);
  for (auto [u, v] : g2.edges()) b.add_edge(u + n1, v + n1);
  for (int u = 0; u < n1; ++u) {
    for (int v = 0; v < g2.order(); ++v) b.add_edge(u, v + n1);
  }
  return std::move(b).build();
}

Graph disjoint_union(std::span<const Graph> parts) {
  int n = 0;
  for (const auto& g : parts) n += g.order();
  GraphBuilder b(n);
  int offset = 0;
  for (const auto& g : parts) {
    for (auto [u, v] : g.edges()) b.add_edge(u + offset, v + offset);
    offset += g.order();
  }
  return std::move(b).build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const Graph parts[] = {a, b};
  return disjoint_union(parts);
}

Graph copies(int t, const Graph& g) {
  std::vector<Graph> parts(static_cast<std::size_t>(std::max(t, 0)), g);
  return disjoint_union(parts);
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph power(const Graph& g, int k) {
  if (k < 1) throw GraphError("graph power requires k >= 1");
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u) {
    // Ball of radius k around u by frontier expansion.
    VertexSet seen = VertexSet::single(u);
    VertexSet frontier = seen;
    for (int step = 0; step < k && !frontier.empty(); ++step) {
      VertexSet next = g.neighborhood(frontier) - seen;
      seen |= next;
      frontier = next;
    }
    for (int v : seen) {
      if (v > u) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

std::vector<int> distances_from(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  dist[source] = 0;
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  for (int d = 1; !frontier.empty(); ++d) {
    VertexSet next = g.neighborhood(frontier) - seen;
    for (int v : next) dist[v] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

std::optional<int> distance(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw GraphError("distance: vertex out of range");
  int d = distances_from(g, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

VertexSet reachable(const Graph& g, int source, VertexSet within) {
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next = (g.neighborhood(frontier) & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  within &= g.vertices();
  while (!within.empty()) {
    VertexSet comp = reachable(g, within.first(), within);
    out.push_back(comp);
    within -= comp;
  }
  return out;
}

int component_count(const Graph& g, VertexSet within) {
  int count = 0;
  within &= g.vertices();
  while (!within.empty()) {
    within -= reachable(g, within.first(), within);
    ++count;
  }
  return count;
}

bool is_connected(const Graph& g) { return g.order() == 0 || component_count(g) == 1; }

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  std::vector<int> order;  // vertices of a in matching order
  std::vector<int> map;    // a-vertex -> b-vertex
  VertexSet used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int x = order[depth];
    for (int y = 0; y < b.order(); ++y) {
      if (used.contains(y) || a.degree(x) != b.degree(y)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const int px = order[i];
        ok = a.adjacent(x, px) == b.adjacent(y, map[px]);
      }
      if (!ok) continue;
      map[x] = y;
      used.insert(y);
      if (extend(depth + 1)) return true;
      used.erase(y);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;

  IsoSearch s{a, b, {}, std::vector<int>(a.order(), -1), {}};
  // BFS order from high-degree vertices keeps constraints tight early.
  VertexSet placed;
  std::vector<int> by_degree(a.order());
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int x, int y) { return a.degree(x) > a.degree(y); });
  for (int root : by_degree) {
    if (placed.contains(root)) continue;
    std::vector<int> queue{root};
    placed.insert(root);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int w : a.neighbors(queue[i]) - placed) {
        placed.insert(w);
        queue.push_back(w);
      }
    }
    s.order.insert(s.order.end(), queue.begin(), queue.end());
  }
  if (!s.extend(0)) return std::nullopt;
  return s.map;
}

std::ostream& operator<<(std::ostream& os, const Graph& g) {
  os << "Graph(n=" << g.order() << ", q=" << g.size() << ", edges=[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) os << ' ';
    os << u << '-' << v;
    first = false;
  }
  return os << "])";
}

}  // namespace cyclekit
