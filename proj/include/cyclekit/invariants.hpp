#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclekit/exact_number.hpp"
#include "cyclekit/graph.hpp"
#include "cyclekit/structure.hpp"

namespace cyclekit {

class CeilingExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Orders above which the subset-enumerating invariants refuse to run.
inline constexpr int kToughnessCeiling = 26;
inline constexpr int kBindingCeiling = 26;

struct DegreeProfile {
  int order = 0;
  int size = 0;
  int min_degree = 0;  // 0 for K_0
  int max_degree = 0;
  std::vector<int> degrees;  // indexed by vertex
};

DegreeProfile degree_profile(const Graph& g);

/// Minimum degree sum over independent t-sets; +inf when alpha < t.
ExactNumber sigma(const Graph& g, int t);
/// Minimum over pairs at distance exactly t of the larger degree; +inf when
/// no pair is at distance t.
ExactNumber delta_at_distance(const Graph& g, int t);

struct VertexCut {
  int size = 0;
  /// A separating set of that size; empty when g is complete, disconnected
  /// or has at most one vertex.
  VertexSet cut;
};

/// Maximum number of internally disjoint s-t paths for nonadjacent s != t.
int local_connectivity(const Graph& g, int s, int t);
/// Minimum s-t vertex separator for nonadjacent s != t.
VertexSet minimum_separator(const Graph& g, int s, int t);
/// kappa(G). kappa(K_n) = n - 1; 0 if disconnected or n <= 1.
VertexCut vertex_connectivity(const Graph& g);

struct IndependentSet {
  int size = 0;
  VertexSet members;
};

/// Maximum independent set by branch and bound on cliques of the complement.
IndependentSet maximum_independent_set(const Graph& g);

struct Toughness {
  ExactNumber value;
  /// Minimising cutset; meaningless when value is infinite.
  VertexSet cut;
  int components = 0;  // s(G - cut)
};

/// min |S| / s(G - S) over S with s(G - S) > 1; +inf for complete graphs
/// (including K_1), 0 for disconnected graphs.
Toughness toughness(const Graph& g);

struct BindingNumber {
  ExactNumber value;
  VertexSet witness;
};

/// min |N(X)| / |X| over nonempty X with N(X) != V. Requires n >= 1.
BindingNumber binding_number(const Graph& g);

/// Which optional invariants to include in a report.
struct ReportOptions {
  std::vector<int> sigma_ts{1, 2, 3};
  std::vector<int> delta_ts{1, 2};
};

struct InvariantReport {
  DegreeProfile degrees;
  int connectivity = 0;
  int independence = 0;
  ExactNumber toughness;
  ExactNumber binding;  // +inf for K_0
  std::map<int, ExactNumber> sigma;
  std::map<int, ExactNumber> delta;
  ClassFlags classes;
  /// Set when sigma_t would differ under the alternative "+inf iff alpha <
  /// kappa" reading of the degenerate case, for some requested t.
  bool sigma_reading_differs = false;
};

InvariantReport compute_report(const Graph& g, const ReportOptions& options = {});

/// "key value" lines in a fixed order.
std::string format_report_text(const InvariantReport& r);
/// One {"key":..., "value":...} JSON object per line.
std::string format_report_records(const InvariantReport& r);

}  // namespace cyclekit
