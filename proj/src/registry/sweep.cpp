#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cyclekit/graph_io.hpp"
#include "cyclekit/registry.hpp"

namespace cyclekit {

namespace {

// Uniform double in [0, 1) from the top 53 bits, identical on every platform.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased and portable.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

}  // namespace

Graph random_gnp(int n, double p, std::mt19937_64& rng) {
  if (n < 0 || n > kMaxOrder) throw std::invalid_argument("gnp: order out of range");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (unit(rng) < p) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph random_regular(int n, int d, std::mt19937_64& rng) {
  if (n < 1 || n > kMaxOrder || d < 0 || d >= n || (n * d) % 2 != 0) {
    throw std::invalid_argument("regular: need 0 <= d < n and n*d even");
  }
  std::vector<int> points(static_cast<std::size_t>(n) * d);
  for (;;) {
    for (int v = 0; v < n; ++v) std::fill_n(points.begin() + static_cast<std::ptrdiff_t>(v) * d, d, v);
    // Fisher-Yates with the portable draw, then pair consecutive points.
    for (std::size_t i = points.size(); i > 1; --i) std::swap(points[i - 1], points[below(rng, i)]);
    GraphBuilder b(n);
    bool ok = true;
    for (std::size_t i = 0; ok && i < points.size(); i += 2) {
      const int u = points[i];
      const int v = points[i + 1];
      if (u == v || b.adjacent(u, v)) {
        ok = false;
      } else {
        b.add_edge(u, v);
      }
    }
    if (ok) return std::move(b).build();
  }
}

Graph random_bipartite(int n1, int n2, double p, std::mt19937_64& rng) {
  if (n1 < 0 || n2 < 0 || n1 + n2 > kMaxOrder) throw std::invalid_argument("bipartite: order out of range");
  GraphBuilder b(n1 + n2);
  for (int u = 0; u < n1; ++u) {
    for (int v = 0; v < n2; ++v) {
      if (unit(rng) < p) b.add_edge(u, n1 + v);
    }
  }
  return std::move(b).build();
}

std::vector<Graph> generate(const Ensemble& e) {
  std::mt19937_64 rng(e.seed);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(std::max(0, e.count)));
  for (int i = 0; i < e.count; ++i) {
    switch (e.model) {
      case Ensemble::Model::kGnp: out.push_back(random_gnp(e.n, e.p, rng)); break;
      case Ensemble::Model::kRegular: out.push_back(random_regular(e.n, e.d, rng)); break;
      case Ensemble::Model::kBipartite: out.push_back(random_bipartite(e.n, e.n2 ? e.n2 : e.n, e.p, rng)); break;
    }
  }
  return out;
}

namespace {

// sigma_t is +inf iff alpha < t here; the alternative reading uses alpha < kappa.
bool sigma_reading_differs(GraphContext& ctx) {
  const ExactNumber alpha = ctx.value(Symbol::kAlpha, 0);
  const ExactNumber kappa = ctx.value(Symbol::kKappa, 0);
  for (int t : {2, 3}) {
    if ((alpha < ExactNumber(t)) != (alpha < kappa)) return true;
  }
  return false;
}

}  // namespace

SweepReport sweep_graphs(const std::vector<Graph>& graphs, const CheckOptions& options) {
  SweepReport report;
  const auto& quarantined = quarantine();
  for (const auto& thm : catalog()) report.tallies[thm.id];
  for (const auto& g : graphs) {
    ++report.graphs;
    GraphContext ctx(g, options.enumeration_ceiling);
    std::string g6;
    for (const auto& thm : catalog()) {
      const auto verdicts = check(ctx, thm, options);
      const Outcome o = overall(verdicts);
      auto& tally = report.tallies[thm.id];
      ++tally.counts[o];
      if (o == Outcome::kHolds) {
        std::optional<ExactNumber> least;
        for (const auto& v : verdicts) {
          if (v.outcome == Outcome::kHolds && v.slack && (!least || *v.slack < *least)) least = v.slack;
        }
        if (least) {
          tally.slack_sum = tally.slack_sum + *least;
          ++tally.slack_count;
        }
      }
      if (o == Outcome::kViolated) {
        if (g6.empty()) g6 = encode_graph6(g);
        for (const auto& v : verdicts) {
          if (v.outcome != Outcome::kViolated) continue;
          Violation viol{g6, v, transcript(g, v)};
          (quarantined.count(thm.id) ? report.quarantined_violations : report.violations).push_back(std::move(viol));
        }
      }
    }
    try {
      if (sigma_reading_differs(ctx)) {
        ++report.sigma_reading_differs;
        if (report.sigma_reading_examples.size() < 5) {
          report.sigma_reading_examples.push_back(g6.empty() ? encode_graph6(g) : g6);
        }
      }
    } catch (const CeilingExceeded&) {
    }
  }
  return report;
}

SweepReport sweep(const Ensemble& e, const CheckOptions& options) { return sweep_graphs(generate(e), options); }

}  // namespace cyclekit
