#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cyclekit/graph.hpp"

namespace cyclekit {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decodes one graph6 string. An optional ">>graph6<<" header is accepted.
/// Throws ParseError for bad length, characters outside '?'..'~', nonzero
/// padding bits, or orders beyond kMaxOrder.
Graph parse_graph6(std::string_view text);
/// Canonical graph6 text with no header and no trailing newline.
std::string encode_graph6(const Graph& g);

/// "n m" header followed by m lines "u v", 0-based. '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

/// "p edge n m" then "e u v" lines, 1-based. 'c' lines are comments.
Graph parse_dimacs(std::string_view text);

enum class GraphFormat { kAuto, kGraph6, kEdgeList, kDimacs };

/// Reads every graph from a stream. graph6 input may hold one graph per
/// line; edge-list and DIMACS input hold exactly one graph. kAuto picks
/// DIMACS if the first meaningful line starts with 'p', edge-list if it is
/// two integers, and graph6 otherwise.
std::vector<Graph> read_graphs(std::istream& in, GraphFormat format = GraphFormat::kAuto);

}  // namespace cyclekit
