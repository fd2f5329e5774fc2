#include "cyclekit/invariants.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>

namespace cyclekit {

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.order = g.order();
  p.size = g.size();
  for (int v = 0; v < g.order(); ++v) p.degrees.push_back(g.degree(v));
  if (!p.degrees.empty()) {
    p.min_degree = *std::min_element(p.degrees.begin(), p.degrees.end());
    p.max_degree = *std::max_element(p.degrees.begin(), p.degrees.end());
  }
  return p;
}

namespace {

void sigma_search(const Graph& g, const std::vector<int>& order, std::size_t from, int left, int sum, VertexSet blocked,
                  int& best) {
  if (left == 0) {
    best = std::min(best, sum);
    return;
  }
  for (std::size_t i = from; i < order.size(); ++i) {
    const int v = order[i];
    if (blocked.contains(v)) continue;
    // order is by nondecreasing degree, so this is a valid lower bound
    if (sum + left * g.degree(v) >= best) return;
    sigma_search(g, order, i + 1, left - 1, sum + g.degree(v), blocked | g.neighbors(v) | VertexSet::single(v), best);
  }
}

}  // namespace

ExactNumber sigma(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("sigma_t requires t >= 1");
  std::vector<int> order(g.order());
  for (int v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
  int best = std::numeric_limits<int>::max();
  sigma_search(g, order, 0, t, 0, VertexSet{}, best);
  if (best == std::numeric_limits<int>::max()) return ExactNumber::infinity();
  return ExactNumber(best);
}

ExactNumber delta_at_distance(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("delta_t requires t >= 1");
  int best = std::numeric_limits<int>::max();
  for (int u = 0; u < g.order(); ++u) {
    auto dist = distances_from(g, u);
    for (int v = u + 1; v < g.order(); ++v) {
      if (dist[v] == t) best = std::min(best, std::max(g.degree(u), g.degree(v)));
    }
  }
  if (best == std::numeric_limits<int>::max()) return ExactNumber::infinity();
  return ExactNumber(best);
}

namespace {

// Unit vertex-capacity flow network: vertex v splits into in = 2v, out = 2v+1.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, int s, int t) : g_(g), nodes_(2 * g.order()), cap_(nodes_ * nodes_, 0) {
    constexpr int kBig = 1 << 20;
    for (int v = 0; v < g.order(); ++v) cap(2 * v, 2 * v + 1) = (v == s || v == t) ? kBig : 1;
    for (auto [u, v] : g.edges()) {
      cap(2 * u + 1, 2 * v) = kBig;
      cap(2 * v + 1, 2 * u) = kBig;
    }
    source_ = 2 * s + 1;
    sink_ = 2 * t;
  }

  /// Augments until the flow reaches `limit` or no path remains.
  int max_flow(int limit) {
    int flow = 0;
    std::vector<int> parent(nodes_);
    while (flow < limit) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[source_] = source_;
      std::vector<int> queue{source_};
      for (std::size_t i = 0; i < queue.size() && parent[sink_] < 0; ++i) {
        const int x = queue[i];
        for (int y : candidates(x)) {
          if (parent[y] < 0 && cap(x, y) > 0) {
            parent[y] = x;
            queue.push_back(y);
          }
        }
      }
      if (parent[sink_] < 0) break;
      for (int y = sink_; y != source_; y = parent[y]) {
        --cap(parent[y], y);
        ++cap(y, parent[y]);
      }
      ++flow;
    }
    return flow;
  }

  /// Residual-reachable side after max_flow has saturated.
  std::vector<bool> source_side() {
    std::vector<bool> seen(nodes_, false);
    seen[source_] = true;
    std::vector<int> queue{source_};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int y : candidates(queue[i])) {
        if (!seen[y] && cap(queue[i], y) > 0) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    return seen;
  }

 private:
  int& cap(int x, int y) { return cap_[static_cast<std::size_t>(x) * nodes_ + y]; }

  // Only arcs that exist in the split network (or their reverses) can carry capacity.
  std::vector<int> candidates(int x) const {
    const int v = x / 2;
    std::vector<int> out;
    out.push_back(x ^ 1);
    for (int w : g_.neighbors(v)) out.push_back((x & 1) ? 2 * w : 2 * w + 1);
    return out;
  }

  const Graph& g_;
  int nodes_;
  std::vector<int> cap_;
  int source_ = 0;
  int sink_ = 0;
};

void require_separable(const Graph& g, int s, int t) {
  if (s == t || g.adjacent(s, t)) throw std::invalid_argument("local connectivity needs distinct nonadjacent vertices");
}

}  // namespace

int local_connectivity(const Graph& g, int s, int t) {
  require_separable(g, s, t);
  SplitNetwork net(g, s, t);
  return net.max_flow(g.order());
}

VertexSet minimum_separator(const Graph& g, int s, int t) {
  require_separable(g, s, t);
  SplitNetwork net(g, s, t);
  net.max_flow(g.order());
  auto side = net.source_side();
  VertexSet cut;
  for (int v = 0; v < g.order(); ++v) {
    if (side[2 * v] && !side[2 * v + 1]) cut.insert(v);
  }
  return cut;
}

VertexCut vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return {0, {}};
  if (!is_connected(g)) return {0, {}};
  if (g.size() == n * (n - 1) / 2) return {n - 1, {}};
  // Some vertex among the first kappa+1 lies outside a minimum cut, and every
  // vertex on another side of that cut has a larger index.
  int best = n - 1;
  VertexSet best_cut;
  for (int i = 0; i <= best && i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      SplitNetwork net(g, i, j);
      const int k = net.max_flow(best);
      if (k < best) {
        best = k;
        best_cut = minimum_separator(g, i, j);
      }
    }
  }
  return {best, best_cut};
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<VertexSet> adj) : adj_(std::move(adj)) {}

  VertexSet run(VertexSet candidates) {
    expand(VertexSet{}, candidates);
    return best_;
  }

 private:
  void expand(VertexSet current, VertexSet cand) {
    if (cand.empty()) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    // Greedy colouring gives an upper bound on the clique inside cand.
    std::vector<int> order;
    std::vector<int> colour;
    VertexSet uncoloured = cand;
    int k = 0;
    while (!uncoloured.empty()) {
      ++k;
      VertexSet avail = uncoloured;
      while (!avail.empty()) {
        const int v = avail.first();
        avail -= adj_[v];
        avail.erase(v);
        uncoloured.erase(v);
        order.push_back(v);
        colour.push_back(k);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (current.size() + colour[i] <= best_.size()) return;
      const int v = order[i];
      expand(current.with(v), cand & adj_[v]);
      cand.erase(v);
    }
  }

  std::vector<VertexSet> adj_;
  VertexSet best_;
};

}  // namespace

IndependentSet maximum_independent_set(const Graph& g) {
  std::vector<VertexSet> comp_adj(g.order());
  for (int v = 0; v < g.order(); ++v) comp_adj[v] = (g.vertices() - g.neighbors(v)).without(v);
  CliqueSearch search(std::move(comp_adj));
  VertexSet s = search.run(g.vertices());
  return {s.size(), s};
}

Toughness toughness(const Graph& g) {
  const int n = g.order();
  if (g.size() == n * (n - 1) / 2) return {ExactNumber::infinity(), {}, 0};
  if (!is_connected(g)) return {ExactNumber(0), {}, component_count(g)};
  if (n > kToughnessCeiling) {
    throw CeilingExceeded("toughness: order " + std::to_string(n) + " exceeds ceiling " + std::to_string(kToughnessCeiling));
  }
  // Ratios as num/den; best starts above any attainable value.
  std::int64_t best_num = n;
  std::int64_t best_den = 1;
  VertexSet best_cut;
  int best_comp = 0;
  const std::uint64_t all = VertexSet::range(n).bits();
  for (std::uint64_t mask = 1; mask <= all; ++mask) {
    const int s = std::popcount(mask);
    if (s > n - 2) continue;
    // s(G - S) <= n - s bounds the ratio from below.
    if (static_cast<std::int64_t>(s) * best_den >= best_num * (n - s)) continue;
    const int k = component_count(g, g.vertices() - VertexSet(mask));
    if (k < 2) continue;
    if (static_cast<std::int64_t>(s) * best_den < best_num * k) {
      best_num = s;
      best_den = k;
      best_cut = VertexSet(mask);
      best_comp = k;
    }
  }
  return {ExactNumber(best_num, best_den), best_cut, best_comp};
}

namespace {

struct BindingSearch {
  const Graph& g;
  VertexSet all;
  std::int64_t best_num;
  std::int64_t best_den;
  VertexSet best;

  void run(int v, VertexSet x, VertexSet nx) {
    if (v == g.order()) {
      if (x.empty() || nx == all) return;
      if (static_cast<std::int64_t>(nx.size()) * best_den < best_num * x.size()) {
        best_num = nx.size();
        best_den = x.size();
        best = x;
      }
      return;
    }
    run(v + 1, x, nx);
    run(v + 1, x.with(v), nx | g.neighbors(v));
  }
};

}  // namespace

BindingNumber binding_number(const Graph& g) {
  if (g.order() == 0) return {ExactNumber::infinity(), {}};
  if (g.order() > kBindingCeiling) {
    throw CeilingExceeded("binding number: order " + std::to_string(g.order()) + " exceeds ceiling " +
                          std::to_string(kBindingCeiling));
  }
  BindingSearch s{g, g.vertices(), std::numeric_limits<std::int32_t>::max(), 1, {}};
  s.run(0, VertexSet{}, VertexSet{});
  return {ExactNumber(s.best_num, s.best_den), s.best};
}

InvariantReport compute_report(const Graph& g, const ReportOptions& options) {
  InvariantReport r;
  r.degrees = degree_profile(g);
  r.connectivity = vertex_connectivity(g).size;
  r.independence = maximum_independent_set(g).size;
  r.toughness = toughness(g).value;
  r.binding = binding_number(g).value;
  for (int t : options.sigma_ts) {
    r.sigma[t] = sigma(g, t);
    const bool standard_inf = r.independence < t;
    const bool alternative_inf = r.independence < r.connectivity;
    if (standard_inf != alternative_inf) r.sigma_reading_differs = true;
  }
  for (int t : options.delta_ts) r.delta[t] = delta_at_distance(g, t);
  r.classes = class_predicates(g);
  return r;
}

namespace {

std::vector<std::pair<std::string, std::string>> report_fields(const InvariantReport& r) {
  std::vector<std::pair<std::string, std::string>> f;
  auto b = [](bool x) { return std::string(x ? "true" : "false"); };
  f.emplace_back("n", std::to_string(r.degrees.order));
  f.emplace_back("q", std::to_string(r.degrees.size));
  f.emplace_back("min_degree", std::to_string(r.degrees.min_degree));
  f.emplace_back("max_degree", std::to_string(r.degrees.max_degree));
  std::string seq;
  for (std::size_t i = 0; i < r.degrees.degrees.size(); ++i) {
    if (i) seq += ',';
    seq += std::to_string(r.degrees.degrees[i]);
  }
  f.emplace_back("degrees", seq);
  f.emplace_back("connectivity", std::to_string(r.connectivity));
  f.emplace_back("independence", std::to_string(r.independence));
  f.emplace_back("toughness", r.toughness.to_string());
  f.emplace_back("binding", r.binding.to_string());
  for (const auto& [t, v] : r.sigma) f.emplace_back("sigma_" + std::to_string(t), v.to_string());
  for (const auto& [t, v] : r.delta) f.emplace_back("delta_" + std::to_string(t), v.to_string());
  f.emplace_back("bipartite", b(r.classes.bipartite));
  f.emplace_back("balanced_bipartite", b(r.classes.balanced_bipartite));
  f.emplace_back("regular", b(r.classes.regular));
  f.emplace_back("chordal", b(r.classes.chordal));
  f.emplace_back("split", b(r.classes.split));
  f.emplace_back("planar", b(r.classes.planar));
  f.emplace_back("connected", b(r.classes.connected));
  f.emplace_back("sigma_reading_differs", b(r.sigma_reading_differs));
  return f;
}

}  // namespace

std::string format_report_text(const InvariantReport& r) {
  std::ostringstream os;
  for (const auto& [k, v] : report_fields(r)) os << k << ' ' << v << '\n';
  return os.str();
}

std::string format_report_records(const InvariantReport& r) {
  std::ostringstream os;
  for (const auto& [k, v] : report_fields(r)) os << "{\"key\":\"" << k << "\",\"value\":\"" << v << "\"}\n";
  return os.str();
}

}  // namespace cyclekit
