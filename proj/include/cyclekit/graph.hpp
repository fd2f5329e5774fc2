#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclekit {

/// Largest order any graph may have. Every solver in the toolkit is
/// exponential, so this is far beyond what they can handle anyway.
inline constexpr int kMaxOrder = 64;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A subset of {0, ..., 63} stored as a bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  /// {0, ..., n-1}.
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; the set must be nonempty.
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;
   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const;
  /// "{0 3 5}"
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with fixed-width bit rows.
/// Immutable once built; use GraphBuilder or the free constructors.
class Graph {
 public:
  /// K_0.
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws GraphError on out-of-range endpoints or self-loops. Duplicate
  /// pairs collapse.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  int size() const { return q_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  VertexSet neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return rows_[v].size(); }
  /// N(X), the union of the neighbourhoods of the members of X.
  VertexSet neighborhood(VertexSet x) const;

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Induced subgraph on `keep`, relabelled in increasing vertex order.
  Graph induced(VertexSet keep) const;
  Graph delete_vertices(VertexSet s) const { return induced(vertices() - s); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  friend class GraphBuilder;
  int n_ = 0;
  int q_ = 0;
  std::vector<VertexSet> rows_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  int order() const { return graph_.n_; }
  GraphBuilder& add_edge(int u, int v);
  /// Adds every edge between two disjoint vertex sets.
  GraphBuilder& add_complete_bipartite(VertexSet a, VertexSet b);
  /// Adds every edge inside `s`.
  GraphBuilder& add_clique(VertexSet s);
  bool adjacent(int u, int v) const { return graph_.adjacent(u, v); }
  Graph build() && { return std::move(graph_); }
  Graph build() const& { return graph_; }

 private:
  Graph graph_;
};

// Construction algebra. Vertices of the first operand keep their labels;
// later operands are shifted past them.

Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(const Graph& a, const Graph& b);
/// t disjoint copies of g.
Graph copies(int t, const Graph& g);
Graph complement(const Graph& g);
/// u ~ v iff 1 <= dist(u, v) <= k. Requires k >= 1.
Graph power(const Graph& g, int k);

/// Shortest-path edge count, or nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, int u, int v);
/// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, int source);

/// Vertex sets of the components of g[within], in order of smallest member.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }
/// Number of components of g[within] without materialising them.
int component_count(const Graph& g, VertexSet within);
inline int component_count(const Graph& g) { return component_count(g, g.vertices()); }
/// Vertices reachable from `source` inside `within` (source must be in within).
VertexSet reachable(const Graph& g, int source, VertexSet within);
bool is_connected(const Graph& g);

/// Exhaustive isomorphism test with degree and adjacency pruning. Returns a
/// map from vertices of a to vertices of b when one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);
inline bool isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

std::ostream& operator<<(std::ostream& os, const Graph& g);

}  // namespace cyclekit
