// Planarity by incremental path embedding (Demoucron, Malgrange, Pertuiset)
// on each biconnected block, plus a Kuratowski certificate extractor.

#include <algorithm>
#include <functional>

#include "cyclekit/named_graphs.hpp"
#include "cyclekit/structure.hpp"

namespace cyclekit {

std::vector<VertexSet> biconnected_blocks(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  std::vector<VertexSet> blocks;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int w : g.neighbors(v)) {
      if (disc[w] < 0) {
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          VertexSet block;
          while (true) {
            auto [a, b] = stack.back();
            stack.pop_back();
            block.insert(a);
            block.insert(b);
            if (a == v && b == w) break;
          }
          blocks.push_back(block);
        }
      } else if (w != parent && disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v) {
    if (disc[v] < 0) dfs(v, -1);
  }
  return blocks;
}

namespace {

struct Fragment {
  VertexSet interior;     // vertices not yet embedded (empty for a lone chord)
  VertexSet attachments;  // embedded vertices the fragment touches
  Edge chord{-1, -1};     // set when the fragment is a single edge
};

// Path a -> ... -> b whose interior lies in `interior`.
std::vector<int> path_through(const Graph& g, int a, int b, VertexSet interior) {
  std::vector<int> parent(g.order(), -1);
  std::vector<int> queue;
  VertexSet seen;
  for (int w : g.neighbors(a) & interior) {
    parent[w] = a;
    seen.insert(w);
    queue.push_back(w);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int v = queue[i];
    if (g.adjacent(v, b)) {
      std::vector<int> path{b};
      for (int x = v; x != a; x = parent[x]) path.push_back(x);
      path.push_back(a);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int w : (g.neighbors(v) & interior) - seen) {
      parent[w] = v;
      seen.insert(w);
      queue.push_back(w);
    }
  }
  return {};
}

}  // namespace

std::optional<std::vector<std::vector<int>>> planar_faces_biconnected(const Graph& g) {
  const int n = g.order();
  if (n >= 3 && g.size() > 3 * n - 6) return std::nullopt;

  // Initial cycle: an edge uv closed by a shortest u-v path avoiding it.
  const auto edges = g.edges();
  const auto [u0, v0] = edges.front();
  std::vector<int> cycle;
  {
    std::vector<int> parent(n, -1);
    std::vector<int> queue{v0};
    VertexSet seen = VertexSet::of({v0});
    for (std::size_t i = 0; i < queue.size() && parent[u0] < 0; ++i) {
      const int v = queue[i];
      for (int w : g.neighbors(v) - seen) {
        if (v == v0 && w == u0) continue;
        parent[w] = v;
        seen.insert(w);
        queue.push_back(w);
      }
    }
    for (int x = u0; x != v0; x = parent[x]) cycle.push_back(x);
    cycle.push_back(v0);
  }

  std::vector<std::vector<int>> faces{cycle, std::vector<int>(cycle.rbegin(), cycle.rend())};
  VertexSet embedded;
  std::vector<VertexSet> emb_adj(n);
  int embedded_edges = 0;
  auto embed_edge = [&](int a, int b) {
    emb_adj[a].insert(b);
    emb_adj[b].insert(a);
    ++embedded_edges;
  };
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    embedded.insert(cycle[i]);
    embed_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
  }

  while (embedded_edges < g.size()) {
    std::vector<Fragment> fragments;
    for (int a : embedded) {
      for (int b : (g.neighbors(a) & embedded) - emb_adj[a]) {
        if (a < b) fragments.push_back({VertexSet{}, VertexSet::of({a, b}), {a, b}});
      }
    }
    for (VertexSet comp : components(g, g.vertices() - embedded)) {
      fragments.push_back({comp, g.neighborhood(comp) & embedded, {-1, -1}});
    }

    std::vector<VertexSet> face_sets;
    for (const auto& f : faces) {
      VertexSet s;
      for (int v : f) s.insert(v);
      face_sets.push_back(s);
    }

    int chosen = -1;
    int chosen_face = -1;
    for (int i = 0; i < static_cast<int>(fragments.size()); ++i) {
      int count = 0;
      int first = -1;
      for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        if (fragments[i].attachments.is_subset_of(face_sets[f])) {
          if (count++ == 0) first = f;
        }
      }
      if (count == 0) return std::nullopt;
      if (chosen < 0 || count == 1) {
        chosen = i;
        chosen_face = first;
        if (count == 1) break;
      }
    }

    const Fragment& frag = fragments[chosen];
    std::vector<int> path;
    if (frag.chord.first >= 0) {
      path = {frag.chord.first, frag.chord.second};
    } else {
      const int a = frag.attachments.first();
      const int b = frag.attachments.without(a).first();
      path = path_through(g, a, b, frag.interior);
    }

    const std::vector<int> face = faces[chosen_face];
    const int len = static_cast<int>(face.size());
    const int i = static_cast<int>(std::find(face.begin(), face.end(), path.front()) - face.begin());
    const int j = static_cast<int>(std::find(face.begin(), face.end(), path.back()) - face.begin());
    std::vector<int> f1, f2;
    for (int k = i;; k = (k + 1) % len) {
      f1.push_back(face[k]);
      if (k == j) break;
    }
    for (auto it = path.rbegin() + 1; it + 1 != path.rend(); ++it) f1.push_back(*it);
    for (int k = j;; k = (k + 1) % len) {
      f2.push_back(face[k]);
      if (k == i) break;
    }
    for (auto it = path.begin() + 1; it + 1 != path.end(); ++it) f2.push_back(*it);
    faces[chosen_face] = std::move(f1);
    faces.push_back(std::move(f2));

    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      embedded.insert(path[k]);
      embed_edge(path[k], path[k + 1]);
    }
    embedded.insert(path.back());
  }
  return faces;
}

bool is_planar(const Graph& g) {
  if (g.order() >= 3 && g.size() > 3 * g.order() - 6) return false;
  for (VertexSet block : biconnected_blocks(g)) {
    if (block.size() < 5) continue;  // every graph on at most four vertices is planar
    const Graph h = g.induced(block);
    if (!planar_faces_biconnected(h)) return false;
  }
  return true;
}

std::optional<Graph> kuratowski_subgraph(const Graph& g) {
  if (is_planar(g)) return std::nullopt;
  std::vector<Edge> kept = g.edges();
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Edge> trial = kept;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!is_planar(Graph::from_edge_list(g.order(), trial))) {
      kept = std::move(trial);
    } else {
      ++i;
    }
  }
  return Graph::from_edge_list(g.order(), kept);
}

bool is_kuratowski_subdivision(const Graph& h) {
  // Work on an edge multiset so smoothing never needs parallel edges: a
  // smoothed result with a repeated pair cannot be K_5 or K_{3,3} anyway.
  std::vector<std::vector<int>> adj(h.order());
  for (auto [u, v] : h.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> alive(h.order(), true);
  for (int v = 0; v < h.order(); ++v) {
    if (adj[v].empty()) alive[v] = false;
    if (adj[v].size() == 1) return false;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < h.order(); ++v) {
      if (!alive[v] || adj[v].size() != 2) continue;
      const int a = adj[v][0];
      const int b = adj[v][1];
      if (a == b) return false;
      for (int& w : adj[a]) {
        if (w == v) w = b;
      }
      for (int& w : adj[b]) {
        if (w == v) w = a;
      }
      adj[v].clear();
      alive[v] = false;
      changed = true;
    }
  }
  std::vector<int> label(h.order(), -1);
  int k = 0;
  for (int v = 0; v < h.order(); ++v) {
    if (alive[v]) label[v] = k++;
  }
  if (k != 5 && k != 6) return false;
  GraphBuilder b(k);
  std::size_t edge_ends = 0;
  for (int v = 0; v < h.order(); ++v) {
    if (!alive[v]) continue;
    for (int w : adj[v]) {
      if (w == v) return false;
      b.add_edge(label[v], label[w]);
      ++edge_ends;
    }
  }
  const Graph core = std::move(b).build();
  if (static_cast<std::size_t>(core.size()) * 2 != edge_ends) return false;  // parallel edges collapsed
  return k == 5 ? isomorphic(core, complete_graph(5)) : isomorphic(core, complete_bipartite(3, 3));
}

}  // namespace cyclekit
