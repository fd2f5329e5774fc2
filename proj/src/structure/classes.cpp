#include <algorithm>
#include <functional>

#include "cyclekit/structure.hpp"

namespace cyclekit {

std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition parts;
  for (VertexSet comp : components(g)) {
    VertexSet side[2];
    side[0] = VertexSet::single(comp.first());
    VertexSet frontier = side[0];
    int colour = 0;
    VertexSet seen = frontier;
    while (!frontier.empty()) {
      colour ^= 1;
      VertexSet next = g.neighborhood(frontier) - seen;
      side[colour] |= next;
      seen |= next;
      frontier = next;
    }
    for (int c = 0; c < 2; ++c) {
      for (int v : side[c]) {
        if (g.neighbors(v).intersects(side[c])) return std::nullopt;
      }
    }
    parts.left |= side[0];
    parts.right |= side[1];
  }
  return parts;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool is_balanced_bipartite(const Graph& g) {
  if (g.order() % 2 != 0) return false;
  auto parts = bipartition(g);
  if (!parts) return false;
  // Each component may be flipped; subset-sum over the per-component imbalance.
  std::vector<bool> reach(g.order() + 1, false);
  reach[0] = true;
  for (VertexSet comp : components(g)) {
    const int a = (comp & parts->left).size();
    const int b = (comp & parts->right).size();
    std::vector<bool> next(g.order() + 1, false);
    for (int s = 0; s <= g.order(); ++s) {
      if (!reach[s]) continue;
      if (s + a <= g.order()) next[s + a] = true;
      if (s + b <= g.order()) next[s + b] = true;
    }
    reach = std::move(next);
  }
  return reach[g.order() / 2];
}

bool is_regular(const Graph& g) {
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != g.degree(0)) return false;
  }
  return true;
}

bool verify_perfect_elimination_ordering(const Graph& g, std::span<const int> order) {
  if (static_cast<int>(order.size()) != g.order()) return false;
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] < 0 || order[i] >= g.order() || pos[order[i]] >= 0) return false;
    pos[order[i]] = static_cast<int>(i);
  }
  for (int v : order) {
    VertexSet later;
    for (int w : g.neighbors(v)) {
      if (pos[w] > pos[v]) later.insert(w);
    }
    for (int a : later) {
      if (!(later.without(a)).is_subset_of(g.neighbors(a))) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g) {
  // Maximum cardinality search; the reverse visiting order is a PEO iff g is chordal.
  const int n = g.order();
  std::vector<int> weight(n, 0);
  std::vector<int> visit;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    int best = left.first();
    for (int v : left) {
      if (weight[v] > weight[best]) best = v;
    }
    visit.push_back(best);
    left.erase(best);
    for (int w : g.neighbors(best) & left) ++weight[w];
  }
  std::reverse(visit.begin(), visit.end());

  // Linear-style check: each vertex's later neighbours minus the earliest one
  // must be adjacent to that earliest one.
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[visit[i]] = i;
  for (int v : visit) {
    int parent = -1;
    VertexSet later;
    for (int w : g.neighbors(v)) {
      if (pos[w] > pos[v]) {
        later.insert(w);
        if (parent < 0 || pos[w] < pos[parent]) parent = w;
      }
    }
    if (parent >= 0 && !later.without(parent).is_subset_of(g.neighbors(parent))) return std::nullopt;
  }
  return visit;
}

bool is_chordal(const Graph& g) { return perfect_elimination_ordering(g).has_value(); }

bool is_split(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end(), std::greater<>());
  int m = 0;
  for (int i = 0; i < static_cast<int>(d.size()); ++i) {
    if (d[i] >= i) m = i + 1;  // 1-based: d_i >= i - 1
  }
  long long lhs = 0;
  long long rhs = static_cast<long long>(m) * (m - 1);
  for (int i = 0; i < static_cast<int>(d.size()); ++i) (i < m ? lhs : rhs) += d[i];
  return lhs == rhs;
}

ClassFlags class_predicates(const Graph& g) {
  ClassFlags f;
  f.bipartite = is_bipartite(g);
  f.balanced_bipartite = f.bipartite && is_balanced_bipartite(g);
  f.regular = is_regular(g);
  f.chordal = is_chordal(g);
  f.split = is_split(g);
  f.planar = is_planar(g);
  f.connected = is_connected(g);
  return f;
}

}  // namespace cyclekit
