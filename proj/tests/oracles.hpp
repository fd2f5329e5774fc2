#pragma once

// Deliberately naive reference implementations. They share nothing with the
// library beyond Graph and ExactNumber, and favour obviousness over speed.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cyclekit/exact_number.hpp"
#include "cyclekit/graph.hpp"

namespace oracle {

using cyclekit::ExactNumber;
using cyclekit::Graph;

inline bool adj(const Graph& g, int u, int v) { return g.adjacent(u, v); }

inline std::vector<int> members(std::uint64_t mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if ((mask >> v) & 1U) out.push_back(v);
  }
  return out;
}

/// Components of G[keep] by repeated flooding.
inline int components(const Graph& g, std::uint64_t keep) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (!((keep >> s) & 1U) || label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = count;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (((keep >> v) & 1U) && label[v] < 0 && adj(g, u, v)) {
          label[v] = count;
          stack.push_back(v);
        }
      }
    }
    ++count;
  }
  return count;
}

inline std::uint64_t all(const Graph& g) { return g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1; }

inline bool independent(const Graph& g, std::uint64_t s) {
  const auto vs = members(s, g.order());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (adj(g, vs[i], vs[j])) return false;
    }
  }
  return true;
}

inline int alpha(const Graph& g) {
  int best = 0;
  for (std::uint64_t s = 0; s <= all(g); ++s) {
    if (independent(g, s)) best = std::max(best, std::popcount(s));
  }
  return best;
}

inline int kappa(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  int best = n - 1;
  for (std::uint64_t s = 0; s <= all(g); ++s) {
    const int k = std::popcount(s);
    if (k >= best || n - k < 2) continue;
    if (components(g, all(g) & ~s) > 1) best = k;
  }
  return best;
}

inline ExactNumber toughness(const Graph& g) {
  std::optional<ExactNumber> best;
  for (std::uint64_t s = 0; s <= all(g); ++s) {
    const int c = components(g, all(g) & ~s);
    if (c < 2) continue;
    const ExactNumber r(std::popcount(s), c);
    if (!best || r < *best) best = r;
  }
  return best ? *best : ExactNumber::infinity();
}

inline ExactNumber binding(const Graph& g) {
  const int n = g.order();
  std::optional<ExactNumber> best;
  for (std::uint64_t x = 1; x <= all(g); ++x) {
    std::uint64_t nb = 0;
    for (int u : members(x, n)) {
      for (int v = 0; v < n; ++v) {
        if (adj(g, u, v)) nb |= std::uint64_t{1} << v;
      }
    }
    if (nb == all(g)) continue;
    const ExactNumber r(std::popcount(nb), std::popcount(x));
    if (!best || r < *best) best = r;
  }
  return best ? *best : ExactNumber::infinity();
}

inline ExactNumber sigma(const Graph& g, int t) {
  std::optional<int> best;
  for (std::uint64_t s = 0; s <= all(g); ++s) {
    if (std::popcount(s) != t || !independent(g, s)) continue;
    int sum = 0;
    for (int v : members(s, g.order())) sum += g.degree(v);
    if (!best || sum < *best) best = sum;
  }
  return best ? ExactNumber(*best) : ExactNumber::infinity();
}

/// All-pairs distances by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> distances(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v = 0; v < n; ++v) {
      if (adj(g, u, v)) d[u][v] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (auto& row : d) {
    for (int& x : row) {
      if (x == inf) x = -1;
    }
  }
  return d;
}

inline ExactNumber delta_t(const Graph& g, int t) {
  const auto d = distances(g);
  std::optional<int> best;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (d[u][v] != t) continue;
      const int m = std::max(g.degree(u), g.degree(v));
      if (!best || m < *best) best = m;
    }
  }
  return best ? ExactNumber(*best) : ExactNumber::infinity();
}

/// Every cycle as a vertex sequence, each cycle once, including the
/// degenerate one-vertex and one-edge cycles. Plain unpruned DFS.
inline void each_cycle(const Graph& g, const std::function<void(const std::vector<int>&)>& visit) {
  const int n = g.order();
  for (int v = 0; v < n; ++v) visit({v});
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj(g, u, v)) visit({u, v});
    }
  }
  std::vector<int> path;
  std::vector<bool> used(n, false);
  std::function<void(int)> go = [&](int s) {
    const int end = path.back();
    if (path.size() >= 3 && adj(g, end, s) && path[1] < end) visit(path);
    for (int w = s + 1; w < n; ++w) {
      if (used[w] || !adj(g, end, w)) continue;
      used[w] = true;
      path.push_back(w);
      go(s);
      path.pop_back();
      used[w] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, false);
    used[s] = true;
    go(s);
  }
}

inline int circumference(const Graph& g) {
  int best = 0;
  each_cycle(g, [&](const std::vector<int>& c) { best = std::max(best, static_cast<int>(c.size())); });
  return best;
}

inline std::vector<std::vector<int>> longest_cycles(const Graph& g) {
  const int c = oracle::circumference(g);
  std::vector<std::vector<int>> out;
  each_cycle(g, [&](const std::vector<int>& cyc) {
    if (static_cast<int>(cyc.size()) == c) out.push_back(cyc);
  });
  return out;
}

inline bool hamiltonian(const Graph& g) { return g.order() > 0 && oracle::circumference(g) == g.order(); }

/// Longest path in G[keep], in edges; -1 if keep is empty.
inline int longest_path(const Graph& g, std::uint64_t keep) {
  int best = -1;
  const int n = g.order();
  std::function<void(int, std::uint64_t, int)> go = [&](int end, std::uint64_t used, int len) {
    best = std::max(best, len);
    for (int w = 0; w < n; ++w) {
      if (((keep >> w) & 1U) && !((used >> w) & 1U) && adj(g, end, w)) go(w, used | (std::uint64_t{1} << w), len + 1);
    }
  };
  for (int s = 0; s < n; ++s) {
    if ((keep >> s) & 1U) go(s, std::uint64_t{1} << s, 0);
  }
  return best;
}

/// Longest cycle (vertices) in G[keep]; 0 if keep is empty.
inline int circumference_within(const Graph& g, std::uint64_t keep) {
  std::vector<int> label;
  for (int v = 0; v < g.order(); ++v) {
    if ((keep >> v) & 1U) label.push_back(v);
  }
  cyclekit::GraphBuilder b(static_cast<int>(label.size()));
  for (std::size_t i = 0; i < label.size(); ++i) {
    for (std::size_t j = i + 1; j < label.size(); ++j) {
      if (adj(g, label[i], label[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return oracle::circumference(std::move(b).build());
}

inline std::uint64_t mask_of(const std::vector<int>& vs) {
  std::uint64_t m = 0;
  for (int v : vs) m |= std::uint64_t{1} << v;
  return m;
}

inline bool dominating(const Graph& g, const std::vector<int>& cycle) {
  const std::uint64_t on = mask_of(cycle);
  for (const auto& [u, v] : g.edges()) {
    if (!((on >> u) & 1U) && !((on >> v) & 1U)) return false;
  }
  return true;
}

/// graph6 written straight from the format description.
inline std::string graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  std::vector<int> bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(adj(g, i, j) ? 1 : 0);
  }
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int x = 0;
    for (int b = 0; b < 6; ++b) x = x * 2 + bits[k + b];
    out.push_back(static_cast<char>(63 + x));
  }
  return out;
}

/// Labelled graph on n vertices whose edge i (in the order (0,1), (0,2), ...,
/// (n-2,n-1)) is present iff bit i of code is set.
inline Graph from_code(int n, std::uint64_t code) {
  cyclekit::GraphBuilder b(n);
  int i = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++i) {
      if ((code >> i) & 1U) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

}  // namespace oracle
