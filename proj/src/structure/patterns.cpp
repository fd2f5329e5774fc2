#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "cyclekit/named_graphs.hpp"
#include "cyclekit/structure.hpp"

namespace cyclekit {

PatternGraph claw_pattern() { return {"claw", star_graph(3)}; }
PatternGraph path_pattern(int t) { return {"P" + std::to_string(t), path_graph(t)}; }
PatternGraph cycle_pattern(int t) { return {"C" + std::to_string(t), cycle_graph(t)}; }
PatternGraph complete_pattern(int m) { return {"K" + std::to_string(m), complete_graph(m)}; }
PatternGraph empty_pattern(int m) { return {"Kbar" + std::to_string(m), empty_graph(m)}; }
PatternGraph complete_bipartite_pattern(int a, int b) {
  return {"K_" + std::to_string(a) + "_" + std::to_string(b), complete_bipartite(a, b)};
}
PatternGraph net_pattern(int i, int j, int k) {
  return {"N_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k), net_graph(i, j, k)};
}
PatternGraph petersen_pattern() { return {"petersen", petersen_graph()}; }

namespace {

int to_int(std::string_view s, std::string_view token) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size() || v < 0) {
    throw std::invalid_argument("unknown pattern \"" + std::string(token) + "\"");
  }
  return v;
}

std::vector<int> split_numbers(std::string_view s, std::string_view token) {
  std::vector<int> out;
  while (!s.empty()) {
    auto pos = s.find_first_of("_,");
    out.push_back(to_int(s.substr(0, pos), token));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

}  // namespace

PatternGraph parse_pattern(std::string_view token) {
  std::string lower(token);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "claw" || lower == "k13" || lower == "k_1_3") return claw_pattern();
  if (lower == "petersen") return petersen_pattern();
  if (lower == "triangle") return net_pattern(0, 0, 0);
  if (lower == "bull") return net_pattern(0, 1, 1);
  if (lower == "net") return net_pattern(1, 1, 1);
  if (lower == "k33") return complete_bipartite_pattern(3, 3);

  std::string_view t = lower;
  auto strip = [&](std::string_view prefix) {
    if (!t.starts_with(prefix)) return false;
    t.remove_prefix(prefix.size());
    if (t.starts_with("_")) t.remove_prefix(1);
    return true;
  };
  if (strip("kbar")) return empty_pattern(to_int(t, token));
  if (strip("p")) {
    const int m = to_int(t, token);
    if (m < 1) throw std::invalid_argument("path pattern needs at least one vertex");
    return path_pattern(m);
  }
  if (strip("c")) {
    const int m = to_int(t, token);
    if (m < 3) throw std::invalid_argument("cycle pattern needs at least three vertices");
    return cycle_pattern(m);
  }
  if (strip("n")) {
    auto nums = split_numbers(t, token);
    if (nums.size() == 1 && t.size() == 3) nums = {t[0] - '0', t[1] - '0', t[2] - '0'};
    if (nums.size() != 3) throw std::invalid_argument("net pattern needs three path lengths: " + std::string(token));
    return net_pattern(nums[0], nums[1], nums[2]);
  }
  if (strip("k")) {
    auto nums = split_numbers(t, token);
    if (nums.size() == 1) return complete_pattern(nums[0]);
    if (nums.size() == 2) return complete_bipartite_pattern(nums[0], nums[1]);
  }
  throw std::invalid_argument("unknown pattern \"" + std::string(token) + "\"");
}

std::vector<PatternGraph> parse_pattern_list(std::string_view comma_separated) {
  std::vector<PatternGraph> out;
  while (!comma_separated.empty()) {
    auto pos = comma_separated.find(',');
    auto tok = comma_separated.substr(0, pos);
    if (!tok.empty()) out.push_back(parse_pattern(tok));
    if (pos == std::string_view::npos) break;
    comma_separated.remove_prefix(pos + 1);
  }
  return out;
}

}  // namespace cyclekit
