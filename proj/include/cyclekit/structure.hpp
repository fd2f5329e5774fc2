#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclekit/graph.hpp"

namespace cyclekit {

/// A named small graph used as a forbidden induced subgraph.
struct PatternGraph {
  std::string name;
  Graph graph;
};

PatternGraph claw_pattern();
PatternGraph path_pattern(int t);
PatternGraph cycle_pattern(int t);
PatternGraph complete_pattern(int m);
PatternGraph empty_pattern(int m);
PatternGraph complete_bipartite_pattern(int a, int b);
PatternGraph net_pattern(int i, int j, int k);
PatternGraph petersen_pattern();

/// Parses CLI tokens: "claw", "P6", "C5", "K5", "K33" (= K_{3,3}),
/// "K_2_3", "Kbar3", "N_0_1_2", "triangle", "petersen".
/// Throws std::invalid_argument for unknown tokens.
PatternGraph parse_pattern(std::string_view token);
std::vector<PatternGraph> parse_pattern_list(std::string_view comma_separated);

/// Injective map V(H) -> V(G) realising H as an induced subgraph of G, or
/// nullopt after exhaustive search.
std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& h);
inline std::optional<std::vector<int>> contains_induced(const Graph& g, const PatternGraph& h) {
  return find_induced(g, h.graph);
}
bool is_free(const Graph& g, std::span<const PatternGraph> patterns);

/// True iff `map` realises h as an induced subgraph of g.
bool verify_induced_map(const Graph& g, const Graph& h, std::span<const int> map);

struct Bipartition {
  VertexSet left;
  VertexSet right;
};

/// A proper 2-colouring (smallest vertex of each component on the left),
/// or nullopt if g has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);
/// Bipartite with some bipartition into equal halves.
bool is_balanced_bipartite(const Graph& g);
bool is_regular(const Graph& g);

/// A perfect elimination ordering (each vertex's later neighbours form a
/// clique), or nullopt if g is not chordal.
std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g);
bool is_chordal(const Graph& g);
bool verify_perfect_elimination_ordering(const Graph& g, std::span<const int> order);
/// Degree-sequence characterisation of split graphs.
bool is_split(const Graph& g);

/// Exact planarity by path embedding on each biconnected block.
bool is_planar(const Graph& g);
/// Facial cycles of a planar embedding of a 2-connected graph, or nullopt
/// if it is not planar. Precondition: g is 2-connected with n >= 3.
std::optional<std::vector<std::vector<int>>> planar_faces_biconnected(const Graph& g);
/// Maximal 2-connected pieces (and bridges) as vertex sets.
std::vector<VertexSet> biconnected_blocks(const Graph& g);
/// Edge-minimal nonplanar subgraph of g (same vertex labels), which is a
/// subdivision of K_5 or K_{3,3}; nullopt when g is planar.
std::optional<Graph> kuratowski_subgraph(const Graph& g);
/// True iff h, after dropping isolated vertices and suppressing degree-2
/// vertices, is K_5 or K_{3,3}.
bool is_kuratowski_subdivision(const Graph& h);

struct ClassFlags {
  bool bipartite = false;
  bool balanced_bipartite = false;
  bool regular = false;
  bool chordal = false;
  bool split = false;
  bool planar = false;
  bool connected = false;
};

ClassFlags class_predicates(const Graph& g);

}  // namespace cyclekit
