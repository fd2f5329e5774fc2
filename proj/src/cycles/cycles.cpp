#include "cyclekit/cycles.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cyclekit {

VertexSet CycleCert::vertex_set() const {
  VertexSet s;
  for (int v : vertices) s.insert(v);
  return s;
}

namespace {

std::string join_vertices(const std::vector<int>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
  return os.str();
}

bool distinct_in_range(const Graph& g, const std::vector<int>& vs) {
  VertexSet seen;
  for (int v : vs) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  return true;
}

}  // namespace

std::string CycleCert::to_string() const { return join_vertices(vertices); }
std::string PathCert::to_string() const { return join_vertices(vertices); }

bool is_valid_cycle(const Graph& g, const CycleCert& c) {
  const auto& vs = c.vertices;
  if (vs.empty() || !distinct_in_range(g, vs)) return false;
  if (vs.size() == 1) return true;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.adjacent(vs[i], vs[i + 1])) return false;
  }
  return vs.size() == 2 || g.adjacent(vs.back(), vs.front());
}

bool is_valid_path(const Graph& g, const PathCert& p) {
  const auto& vs = p.vertices;
  if (vs.empty() || !distinct_in_range(g, vs)) return false;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.adjacent(vs[i], vs[i + 1])) return false;
  }
  return true;
}

namespace {

void require_cycle(const Graph& g, const CycleCert& c) {
  if (!is_valid_cycle(g, c)) throw CertificateError("not a cycle of the graph: " + c.to_string());
}

class HamiltonSearch {
 public:
  explicit HamiltonSearch(const Graph& g) : g_(g) {}

  std::optional<CycleCert> run() {
    path_ = {0};
    unvisited_ = g_.vertices().without(0);
    if (extend(0)) return CycleCert{path_};
    return std::nullopt;
  }

 private:
  bool extend(int end) {
    if (unvisited_.empty()) return g_.adjacent(end, 0);
    if (!g_.neighbors(0).intersects(unvisited_)) return false;
    if (!unvisited_.is_subset_of(reachable(g_, end, unvisited_.with(end)))) return false;
    const VertexSet open = unvisited_.with(end).with(0);
    int forced = -1;
    for (int u : unvisited_) {
      const VertexSet nb = g_.neighbors(u) & open;
      if (nb.size() < 2) return false;
      // A vertex with exactly two usable neighbours, one of them `end`, must come next.
      if (end != 0 && nb.size() == 2 && nb.contains(end)) {
        if (forced >= 0 && forced != u) return false;
        forced = u;
      }
    }
    std::vector<int> next;
    if (forced >= 0) {
      if (!g_.adjacent(end, forced)) return false;
      next.push_back(forced);
    } else {
      for (int w : g_.neighbors(end) & unvisited_) next.push_back(w);
      std::sort(next.begin(), next.end(), [&](int a, int b) {
        return (g_.neighbors(a) & unvisited_).size() < (g_.neighbors(b) & unvisited_).size();
      });
    }
    for (int w : next) {
      path_.push_back(w);
      unvisited_.erase(w);
      if (extend(w)) return true;
      unvisited_.insert(w);
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> path_;
  VertexSet unvisited_;
};

// Cycles whose smallest vertex is `start_` and whose other vertices lie in `allowed_`.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, int start, VertexSet allowed) : g_(g), start_(start), allowed_(allowed) {}

  /// Longest cycle through start exceeding `best`; updates best and cycle.
  void longest(int& best, std::vector<int>& cycle, int cap) {
    best_ = &best;
    cap_ = cap;
    cycle_ = &cycle;
    path_ = {start_};
    dfs_longest(start_, VertexSet::single(start_));
  }

  /// Visits every cycle of exactly `len` vertices (len >= 3) once.
  bool exact(int len, const std::function<bool(const CycleCert&)>& visit, std::uint64_t& count) {
    target_ = len;
    visit_ = &visit;
    count_ = &count;
    path_ = {start_};
    return dfs_exact(start_, VertexSet::single(start_));
  }

  /// Visits every cycle of length >= 3 through start once.
  bool all(const std::function<bool(const CycleCert&)>& visit, std::uint64_t& count) {
    visit_ = &visit;
    count_ = &count;
    path_ = {start_};
    return dfs_all(start_, VertexSet::single(start_));
  }

 private:
  // Vertices that could still be appended while keeping a way back to start.
  int headroom(int end, VertexSet visited) const {
    const VertexSet free = allowed_ - visited;
    const VertexSet reach = reachable(g_, end, free.with(end));
    if (!g_.neighbors(start_).intersects(reach)) return -1;
    return reach.without(end).size();
  }

  void dfs_longest(int end, VertexSet visited) {
    const int len = static_cast<int>(path_.size());
    if (len >= 3 && len > *best_ && g_.adjacent(end, start_)) {
      *best_ = len;
      *cycle_ = path_;
    }
    if (*best_ >= cap_) return;
    const int room = headroom(end, visited);
    if (room < 0 || len + room <= *best_) return;
    for (int w : g_.neighbors(end) & (allowed_ - visited)) {
      path_.push_back(w);
      dfs_longest(w, visited.with(w));
      path_.pop_back();
    }
  }

  bool dfs_exact(int end, VertexSet visited) {
    const int len = static_cast<int>(path_.size());
    if (len == target_) {
      if (g_.adjacent(end, start_) && path_[1] < end) {
        ++*count_;
        return (*visit_)(CycleCert{path_});
      }
      return true;
    }
    const int room = headroom(end, visited);
    if (room < 0 || len + room < target_) return true;
    for (int w : g_.neighbors(end) & (allowed_ - visited)) {
      path_.push_back(w);
      const bool go_on = dfs_exact(w, visited.with(w));
      path_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  bool dfs_all(int end, VertexSet visited) {
    const int len = static_cast<int>(path_.size());
    if (len >= 3 && g_.adjacent(end, start_) && path_[1] < end) {
      ++*count_;
      if (!(*visit_)(CycleCert{path_})) return false;
    }
    if (headroom(end, visited) <= 0) return true;
    for (int w : g_.neighbors(end) & (allowed_ - visited)) {
      path_.push_back(w);
      const bool go_on = dfs_all(w, visited.with(w));
      path_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const Graph& g_;
  int start_;
  VertexSet allowed_;
  std::vector<int> path_;
  int* best_ = nullptr;
  int cap_ = 0;
  std::vector<int>* cycle_ = nullptr;
  int target_ = 0;
  const std::function<bool(const CycleCert&)>* visit_ = nullptr;
  std::uint64_t* count_ = nullptr;
};

VertexSet above(VertexSet w, int s) { return w & VertexSet(~std::uint64_t{0} << s << 1); }

bool has_edge_within(const Graph& g, VertexSet w) {
  for (int v : w) {
    if (g.neighbors(v).intersects(w)) return true;
  }
  return false;
}

namespace {

LongestCycle longest_within(const Graph& g, VertexSet w, int cap) {
  LongestCycle r;
  if (w.empty()) return r;
  r.length = 1;
  r.cycle.vertices = {w.first()};
  for (int v : w) {
    const VertexSet nb = g.neighbors(v) & w;
    if (!nb.empty()) {
      r.length = 2;
      r.cycle.vertices = {v, nb.first()};
      break;
    }
  }
  for (int s : w) {
    if (above(w, s).size() + 1 <= r.length) break;
    CycleSearch search(g, s, above(w, s));
    search.longest(r.length, r.cycle.vertices, cap);
    if (r.length >= cap) break;
  }
  return r;
}

}  // namespace

LongestCycle circumference_within(const Graph& g, VertexSet w) { return longest_within(g, w, w.size()); }

class PathSearch {
 public:
  PathSearch(const Graph& g, VertexSet w) : g_(g), w_(w) {}

  LongestPath run() {
    LongestPath r;
    if (w_.empty()) return r;
    best_ = 0;
    best_path_ = {w_.first()};
    for (int s : w_) {
      path_ = {s};
      dfs(s, VertexSet::single(s));
      if (best_ == w_.size() - 1) break;
    }
    r.length = best_;
    r.path.vertices = best_path_;
    return r;
  }

 private:
  void dfs(int end, VertexSet visited) {
    const int len = static_cast<int>(path_.size()) - 1;
    if (len > best_) {
      best_ = len;
      best_path_ = path_;
    }
    const VertexSet free = w_ - visited;
    if (len + reachable(g_, end, free.with(end)).size() - 1 <= best_) return;
    for (int x : g_.neighbors(end) & free) {
      path_.push_back(x);
      dfs(x, visited.with(x));
      path_.pop_back();
      if (best_ == w_.size() - 1) return;
    }
  }

  const Graph& g_;
  VertexSet w_;
  std::vector<int> path_;
  int best_ = -1;
  std::vector<int> best_path_;
};

void check_ceiling(const Graph& g, int ceiling, const char* what) {
  if (g.order() > ceiling) {
    throw CeilingExceeded(std::string(what) + ": order " + std::to_string(g.order()) + " exceeds enumeration ceiling " +
                          std::to_string(ceiling));
  }
}

// A Hamilton cycle leaves at most |S| components after deleting S. Minimum
// separators of nonadjacent pairs and complements of a maximum independent
// set are tried as S; finding one that breaks the bound proves absence.
bool scattered(const Graph& g) {
  const int n = g.order();
  const auto indep = maximum_independent_set(g);
  if (2 * indep.size > n) return true;
  for (int s = 0; s < n; ++s) {
    for (int t : g.vertices() - g.neighbors(s)) {
      if (t <= s) continue;
      const VertexSet cut = minimum_separator(g, s, t);
      if (component_count(g, g.vertices() - cut) > cut.size()) return true;
    }
  }
  return false;
}

}  // namespace

std::optional<CycleCert> hamiltonian(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  if (n == 1) return CycleCert{{0}};
  if (n == 2) return g.adjacent(0, 1) ? std::optional(CycleCert{{0, 1}}) : std::nullopt;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return std::nullopt;
  }
  if (n >= kScatterCheckOrder && scattered(g)) return std::nullopt;
  return HamiltonSearch(g).run();
}

int circumference_upper_bound(const Graph& g) {
  const int n = g.order();
  int best = n;
  // A cycle not inside one component of G - S alternates between S and at
  // most |S| components, so it has at most |S| plus their sizes vertices.
  auto try_cut = [&](VertexSet cut) {
    std::vector<int> sizes;
    for (const auto& c : components(g, g.vertices() - cut)) sizes.push_back(c.size());
    std::sort(sizes.rbegin(), sizes.rend());
    int through = cut.size();
    for (std::size_t i = 0; i < sizes.size() && i < static_cast<std::size_t>(cut.size()); ++i) through += sizes[i];
    const int inside = sizes.empty() ? 0 : sizes.front();
    best = std::min(best, std::max(inside, through));
  };
  try_cut(g.vertices() - maximum_independent_set(g).members);
  for (int s = 0; s < n; ++s) {
    for (int t : g.vertices() - g.neighbors(s)) {
      if (t > s) try_cut(minimum_separator(g, s, t));
    }
  }
  return best;
}

LongestCycle circumference(const Graph& g) {
  if (g.order() >= 3) {
    if (auto h = hamiltonian(g)) return {g.order(), *h};
    if (g.order() >= kScatterCheckOrder) return longest_within(g, g.vertices(), circumference_upper_bound(g));
  }
  return circumference_within(g, g.vertices());
}

LongestPath longest_path(const Graph& g) { return PathSearch(g, g.vertices()).run(); }

bool is_dominating_cycle(const Graph& g, const CycleCert& c) {
  require_cycle(g, c);
  return !has_edge_within(g, g.vertices() - c.vertex_set());
}

bool is_pd_cycle(const Graph& g, const CycleCert& c, int lambda) {
  require_cycle(g, c);
  if (lambda < 1) throw std::invalid_argument("PD cycles need lambda >= 1");
  return PathSearch(g, g.vertices() - c.vertex_set()).run().length < lambda;
}

bool is_cd_cycle(const Graph& g, const CycleCert& c, int lambda) {
  require_cycle(g, c);
  if (lambda < 1) throw std::invalid_argument("CD cycles need lambda >= 1");
  return circumference_within(g, g.vertices() - c.vertex_set()).length < lambda;
}

std::uint64_t for_each_longest_cycle(const Graph& g, const std::function<bool(const CycleCert&)>& visit, int ceiling) {
  check_ceiling(g, ceiling, "longest-cycle enumeration");
  std::uint64_t count = 0;
  const int c = circumference(g).length;
  const VertexSet all = g.vertices();
  if (c == 1) {
    for (int v : all) {
      ++count;
      if (!visit(CycleCert{{v}})) break;
    }
  } else if (c == 2) {
    for (auto [u, v] : g.edges()) {
      ++count;
      if (!visit(CycleCert{{u, v}})) break;
    }
  } else if (c >= 3) {
    for (int s : all) {
      if (above(all, s).size() + 1 < c) break;
      CycleSearch search(g, s, above(all, s));
      if (!search.exact(c, visit, count)) break;
    }
  }
  return count;
}

std::vector<CycleCert> all_longest_cycles(const Graph& g, int ceiling) {
  std::vector<CycleCert> out;
  for_each_longest_cycle(
      g,
      [&](const CycleCert& c) {
        out.push_back(c);
        return true;
      },
      ceiling);
  return out;
}

bool satisfies(const Graph& g, const CycleCert& c, CycleCondition cond) {
  switch (cond.kind) {
    case CycleProperty::kDominating:
      return is_dominating_cycle(g, c);
    case CycleProperty::kPD:
      return is_pd_cycle(g, c, cond.lambda);
    case CycleProperty::kCD:
      return is_cd_cycle(g, c, cond.lambda);
  }
  return false;
}

std::string describe(CycleCondition cond) {
  switch (cond.kind) {
    case CycleProperty::kDominating:
      return "dominating";
    case CycleProperty::kPD:
      return "PD_" + std::to_string(cond.lambda);
    case CycleProperty::kCD:
      return "CD_" + std::to_string(cond.lambda);
  }
  return "?";
}

namespace {

bool set_satisfies(const Graph& g, VertexSet on_cycle, CycleCondition cond) {
  const VertexSet rest = g.vertices() - on_cycle;
  switch (cond.kind) {
    case CycleProperty::kDominating:
      return !has_edge_within(g, rest);
    case CycleProperty::kPD:
      return PathSearch(g, rest).run().length < cond.lambda;
    case CycleProperty::kCD:
      return circumference_within(g, rest).length < cond.lambda;
  }
  return false;
}

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  std::uint64_t r = 1;
  k = std::min(k, n - k);
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    if (r > cap) return cap + 1;
  }
  return r;
}

// Next integer with the same popcount (Gosper).
std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

std::optional<CycleCert> find_longest_cycle_on(const Graph& g, const std::function<bool(VertexSet)>& want, int ceiling,
                                               std::uint64_t* examined) {
  std::uint64_t count = 0;
  std::optional<CycleCert> found;
  const int n = g.order();
  const int c = circumference(g).length;
  auto done = [&]() {
    if (examined) *examined = count;
    return found;
  };
  if (c == 0) return done();
  if (c <= 2) {
    // Single vertices or edges are the longest cycles.
    if (c == 1) {
      for (int v : g.vertices()) {
        ++count;
        if (want(VertexSet::single(v))) {
          found = CycleCert{{v}};
          break;
        }
      }
    } else {
      for (auto [u, v] : g.edges()) {
        ++count;
        if (want(VertexSet::of({u, v}))) {
          found = CycleCert{{u, v}};
          break;
        }
      }
    }
    return done();
  }
  if (c == n) {
    ++count;
    if (want(g.vertices())) found = hamiltonian(g);
    return done();
  }
  if (binomial_capped(n, c, kVertexSetBudget) <= kVertexSetBudget) {
    const std::uint64_t limit = n >= 64 ? 0 : std::uint64_t{1} << n;
    for (std::uint64_t bits = (std::uint64_t{1} << c) - 1; bits < limit || limit == 0; bits = next_combination(bits)) {
      const VertexSet s(bits);
      bool plausible = true;
      for (int v : s) {
        if ((g.neighbors(v) & s).size() < 2) {
          plausible = false;
          break;
        }
      }
      if (plausible && want(s)) {
        ++count;
        std::vector<int> label(s.begin(), s.end());
        if (auto h = hamiltonian(g.induced(s))) {
          CycleCert cycle;
          for (int v : h->vertices) cycle.vertices.push_back(label[v]);
          found = cycle;
          break;
        }
      }
      if (limit == 0 && bits == ~std::uint64_t{0}) break;
    }
    return done();
  }
  check_ceiling(g, ceiling, "longest-cycle enumeration");
  std::set<std::uint64_t> seen;
  for_each_longest_cycle(
      g,
      [&](const CycleCert& cycle) {
        const VertexSet s = cycle.vertex_set();
        if (!seen.insert(s.bits()).second) return true;
        ++count;
        if (!want(s)) return true;
        found = cycle;
        return false;
      },
      ceiling);
  return done();
}

UniversalCheck every_longest_cycle_satisfies(const Graph& g, CycleCondition cond, int ceiling) {
  UniversalCheck r;
  const auto longest = circumference(g);
  r.circumference = longest.length;
  if (g.order() == 0) return r;
  if (longest.length == g.order()) {
    // Every longest cycle spans G, so nothing is left to dominate.
    r.cycles_checked = 0;
    return r;
  }
  // The remainder G - C has n - c vertices whatever C is; small remainders
  // cannot carry an edge, a long path or a long cycle.
  const int rest = g.order() - longest.length;
  const bool implied = (cond.kind == CycleProperty::kDominating && rest <= 1) ||
                       (cond.kind == CycleProperty::kPD && cond.lambda >= rest) ||
                       (cond.kind == CycleProperty::kCD && cond.lambda > rest);
  if (implied) return r;
  // The property depends only on V(C), so distinct vertex sets suffice.
  r.counterexample = find_longest_cycle_on(
      g, [&](VertexSet s) { return !set_satisfies(g, s, cond); }, ceiling, &r.cycles_checked);
  r.holds = !r.counterexample.has_value();
  return r;
}

std::optional<CycleCert> find_cycle_satisfying(const Graph& g, CycleCondition cond, int ceiling) {
  if (g.order() == 0) return std::nullopt;
  const auto longest = circumference(g);
  if (longest.length == g.order()) return longest.cycle;
  check_ceiling(g, ceiling, "cycle search");
  std::optional<CycleCert> found;
  auto probe = [&](const CycleCert& c) {
    if (!satisfies(g, c, cond)) return true;
    found = c;
    return false;
  };
  for_each_longest_cycle(g, probe, ceiling);
  if (found) return found;
  std::uint64_t count = 0;
  const VertexSet all = g.vertices();
  for (int s : all) {
    CycleSearch search(g, s, above(all, s));
    if (!search.all(probe, count)) return found;
  }
  for (auto [u, v] : g.edges()) {
    if (!probe(CycleCert{{u, v}})) return found;
  }
  for (int v : all) {
    if (!probe(CycleCert{{v}})) return found;
  }
  return found;
}

Residual residual_params(const Graph& g, const CycleCert& c) {
  require_cycle(g, c);
  return residual_params(g, c.vertex_set());
}

Residual residual_params(const Graph& g, VertexSet on_cycle) {
  const VertexSet rest = g.vertices() - on_cycle;
  if (rest.empty()) return {};
  return {PathSearch(g, rest).run().length, circumference_within(g, rest).length};
}

bool hamiltonian_dp_oracle(const Graph& g) {
  const int n = g.order();
  if (n > kDpOracleCeiling) throw CeilingExceeded("DP oracle: order exceeds " + std::to_string(kDpOracleCeiling));
  if (n == 0) return false;
  if (n == 1) return true;
  if (n == 2) return g.adjacent(0, 1);
  // ends[mask]: vertices v such that some path from 0 visits exactly mask and ends at v.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  ends[1] = 1;
  for (std::uint32_t mask = 1; mask < (1U << n); mask += 2) {
    const std::uint32_t e = ends[mask];
    if (!e) continue;
    for (int v = 0; v < n; ++v) {
      if (!((e >> v) & 1U)) continue;
      const auto out = static_cast<std::uint32_t>(g.neighbors(v).bits()) & ~mask;
      for (std::uint32_t rest = out; rest; rest &= rest - 1) {
        const int w = std::countr_zero(rest);
        ends[mask | (1U << w)] |= 1U << w;
      }
    }
  }
  const std::uint32_t full = (1U << n) - 1;
  const auto back = static_cast<std::uint32_t>(g.neighbors(0).bits());
  return (ends[full] & back) != 0;
}

}  // namespace cyclekit
