#include "cyclekit/graph_io.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

namespace cyclekit {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int sextet(char c) {
  if (c < 63 || c > 126) {
    throw ParseError("graph6: character code " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))) +
                     " is outside the printable range 63..126");
  }
  return c - 63;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

std::vector<long long> parse_ints(std::string_view line, std::string_view what) {
  std::vector<long long> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    long long v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{}) throw ParseError(std::string(what) + ": expected an integer in \"" + std::string(line) + "\"");
    out.push_back(v);
    p = next;
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto pos = text.find('\n');
    lines.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return lines;
}

Graph from_pairs(long long n, std::vector<Edge> const& edges, std::string_view what) {
  if (n < 0 || n > kMaxOrder) {
    throw ParseError(std::string(what) + ": order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxOrder));
  }
  try {
    return Graph::from_edge_list(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw ParseError("graph6: empty string");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    throw ParseError("graph6: order exceeds " + std::to_string(kMaxOrder));
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated order field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    if (n < 63) throw ParseError("graph6: long order field used for n < 63");
    pos = 4;
  }
  if (n > kMaxOrder) throw ParseError("graph6: order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));

  const long long bits = n * (n - 1) / 2;
  const long long chars = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != chars) {
    throw ParseError("graph6: expected " + std::to_string(chars) + " adjacency characters for n=" + std::to_string(n) +
                     ", found " + std::to_string(text.size() - pos));
  }

  GraphBuilder b(static_cast<int>(n));
  long long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int c = sextet(text[pos + k / 6]);
      if ((c >> (5 - k % 6)) & 1) b.add_edge(u, v);
    }
  }
  for (; k < chars * 6; ++k) {
    const int c = sextet(text[pos + k / 6]);
    if ((c >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
  }
  return std::move(b).build();
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int used = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::vector<long long>> rows;
  for (auto line : split_lines(text)) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    rows.push_back(parse_ints(line, "edge list"));
  }
  if (rows.empty() || rows[0].size() != 2) throw ParseError("edge list: missing \"n m\" header");
  const long long n = rows[0][0];
  const long long m = rows[0][1];
  if (m < 0 || static_cast<long long>(rows.size() - 1) != m) {
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(rows.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 2) throw ParseError("edge list: each edge line needs exactly two vertices");
    edges.emplace_back(static_cast<int>(rows[i][0]), static_cast<int>(rows[i][1]));
  }
  return from_pairs(n, edges, "edge list");
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph parse_dimacs(std::string_view text) {
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  for (auto line : split_lines(text)) {
    line = trim(line);
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      if (n >= 0) throw ParseError("dimacs: duplicate problem line");
      std::istringstream is{std::string(line)};
      std::string p, kind;
      is >> p >> kind >> n >> m;
      if (!is || (kind != "edge" && kind != "col")) throw ParseError("dimacs: malformed problem line \"" + std::string(line) + "\"");
      continue;
    }
    if (line[0] == 'e') {
      if (n < 0) throw ParseError("dimacs: edge line before problem line");
      auto ints = parse_ints(line.substr(1), "dimacs");
      if (ints.size() != 2) throw ParseError("dimacs: edge line needs two vertices");
      edges.emplace_back(static_cast<int>(ints[0] - 1), static_cast<int>(ints[1] - 1));
      continue;
    }
    throw ParseError("dimacs: unexpected line \"" + std::string(line) + "\"");
  }
  if (n < 0) throw ParseError("dimacs: missing problem line");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("dimacs: problem line announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return from_pairs(n, edges, "dimacs");
}

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (format == GraphFormat::kAuto) {
    format = GraphFormat::kGraph6;
    for (auto line : split_lines(text)) {
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      // graph6 never contains whitespace, which keeps 'c'/'p' unambiguous.
      const bool spaced = line.find_first_of(" \t") != std::string_view::npos;
      if (spaced || line == "c") {
        format = (line[0] == 'p' || line[0] == 'c') ? GraphFormat::kDimacs : GraphFormat::kEdgeList;
      }
      break;
    }
  }
  switch (format) {
    case GraphFormat::kDimacs:
      return {parse_dimacs(text)};
    case GraphFormat::kEdgeList:
      return {parse_edge_list(text)};
    default:
      break;
  }
  std::vector<Graph> out;
  for (auto line : split_lines(text)) {
    line = trim(line);
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace cyclekit
