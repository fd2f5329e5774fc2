#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclekit/graph.hpp"
#include "cyclekit/invariants.hpp"

namespace cyclekit {

class CertificateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Default order limit for enumerating every longest cycle.
inline constexpr int kEnumerationCeiling = 14;
inline constexpr int kDpOracleCeiling = 20;
/// Orders from which the Hamilton search first tries cheap separator refutations.
inline constexpr int kScatterCheckOrder = 13;

/// Cycle as a vertex sequence. Length counts vertices; a single vertex and a
/// single edge are cycles of length 1 and 2.
struct CycleCert {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
  VertexSet vertex_set() const;
  std::string to_string() const;  // "v1 v2 ... vt"
  friend bool operator==(const CycleCert&, const CycleCert&) = default;
};

/// Path as a vertex sequence. Length counts edges.
struct PathCert {
  std::vector<int> vertices;
  int length() const { return vertices.empty() ? -1 : static_cast<int>(vertices.size()) - 1; }
  std::string to_string() const;
};

bool is_valid_cycle(const Graph& g, const CycleCert& c);
bool is_valid_path(const Graph& g, const PathCert& p);

/// A Hamilton cycle, or nullopt after exhaustive search. K_1 and K_2 count.
std::optional<CycleCert> hamiltonian(const Graph& g);

struct LongestCycle {
  int length = 0;  // 0 only for K_0
  CycleCert cycle;
};
LongestCycle circumference(const Graph& g);

struct LongestPath {
  int length = -1;  // edges; -1 only for K_0
  PathCert path;
};
LongestPath longest_path(const Graph& g);

/// Every edge has an end on C.
bool is_dominating_cycle(const Graph& g, const CycleCert& c);
/// Every path with at least lambda edges meets C.
bool is_pd_cycle(const Graph& g, const CycleCert& c, int lambda);
/// Every cycle with at least lambda vertices meets C.
bool is_cd_cycle(const Graph& g, const CycleCert& c, int lambda);

/// Calls `visit` once per longest cycle, normalised so the smallest vertex
/// comes first and the second vertex is smaller than the last. Stops early
/// when `visit` returns false. Returns the number of cycles visited.
std::uint64_t for_each_longest_cycle(const Graph& g, const std::function<bool(const CycleCert&)>& visit,
                                     int ceiling = kEnumerationCeiling);
std::vector<CycleCert> all_longest_cycles(const Graph& g, int ceiling = kEnumerationCeiling);

enum class CycleProperty { kDominating, kPD, kCD };

struct CycleCondition {
  CycleProperty kind = CycleProperty::kDominating;
  int lambda = 0;  // ignored for kDominating
};
bool satisfies(const Graph& g, const CycleCert& c, CycleCondition cond);
std::string describe(CycleCondition cond);

/// Largest number of c-subsets scanned when enumerating vertex sets of
/// longest cycles; above it cycle enumeration under the order ceiling is used.
inline constexpr std::uint64_t kVertexSetBudget = 2'000'000;

/// A longest cycle whose vertex set S has want(S), or nullopt if none.
/// Each distinct vertex set is considered once; `examined` receives the
/// number of candidate sets passed to the Hamilton test.
std::optional<CycleCert> find_longest_cycle_on(const Graph& g, const std::function<bool(VertexSet)>& want,
                                               int ceiling = kEnumerationCeiling, std::uint64_t* examined = nullptr);

struct UniversalCheck {
  bool holds = true;
  std::optional<CycleCert> counterexample;
  int circumference = 0;
  std::uint64_t cycles_checked = 0;  // vertex sets examined
};
UniversalCheck every_longest_cycle_satisfies(const Graph& g, CycleCondition cond, int ceiling = kEnumerationCeiling);

/// Some cycle of any length (including 1 and 2) satisfying cond, searching
/// longest cycles first and then all cycles.
std::optional<CycleCert> find_cycle_satisfying(const Graph& g, CycleCondition cond,
                                               int ceiling = kEnumerationCeiling);

/// Longest path (edges) and longest cycle (vertices) in G - C; both absent
/// when C spans G.
struct Residual {
  std::optional<int> path_edges;
  std::optional<int> cycle_vertices;
};
/// Upper bound on the circumference from vertex cuts: n, or less when some
/// cut S leaves components too many or too small to be threaded by a cycle.
int circumference_upper_bound(const Graph& g);

Residual residual_params(const Graph& g, const CycleCert& c);
Residual residual_params(const Graph& g, VertexSet on_cycle);

/// Subset dynamic programming Hamiltonicity, independent of the search above.
bool hamiltonian_dp_oracle(const Graph& g);

}  // namespace cyclekit
