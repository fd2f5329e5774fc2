#include <algorithm>

#include "cyclekit/structure.hpp"

namespace cyclekit {

namespace {

struct InducedSearch {
  const Graph& g;
  const Graph& h;
  std::vector<int> order;  // pattern vertices, each (after the first of its component) adjacent to an earlier one
  std::vector<int> map;
  VertexSet used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int x = order[depth];
    // Candidates must agree with every earlier assignment on adjacency.
    VertexSet cand = g.vertices() - used;
    for (std::size_t i = 0; i < depth; ++i) {
      const int px = order[i];
      const VertexSet nb = g.neighbors(map[px]);
      cand = h.adjacent(x, px) ? (cand & nb) : (cand - nb);
      if (cand.empty()) return false;
    }
    const int need = h.degree(x);
    for (int y : cand) {
      if (g.degree(y) < need) continue;
      map[x] = y;
      used.insert(y);
      if (extend(depth + 1)) return true;
      used.erase(y);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& h) {
  if (h.order() > g.order()) return std::nullopt;
  InducedSearch s{g, h, {}, std::vector<int>(h.order(), -1), {}};
  VertexSet placed;
  std::vector<int> roots(h.order());
  for (int v = 0; v < h.order(); ++v) roots[v] = v;
  std::stable_sort(roots.begin(), roots.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
  for (int root : roots) {
    if (placed.contains(root)) continue;
    std::vector<int> queue{root};
    placed.insert(root);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int w : h.neighbors(queue[i]) - placed) {
        placed.insert(w);
        queue.push_back(w);
      }
    }
    s.order.insert(s.order.end(), queue.begin(), queue.end());
  }
  if (!s.extend(0)) return std::nullopt;
  return s.map;
}

bool verify_induced_map(const Graph& g, const Graph& h, std::span<const int> map) {
  if (static_cast<int>(map.size()) != h.order()) return false;
  VertexSet seen;
  for (int y : map) {
    if (y < 0 || y >= g.order() || seen.contains(y)) return false;
    seen.insert(y);
  }
  for (int a = 0; a < h.order(); ++a) {
    for (int b = a + 1; b < h.order(); ++b) {
      if (h.adjacent(a, b) != g.adjacent(map[a], map[b])) return false;
    }
  }
  return true;
}

bool is_free(const Graph& g, std::span<const PatternGraph> patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const PatternGraph& p) { return find_induced(g, p.graph).has_value(); });
}

}  // namespace cyclekit
