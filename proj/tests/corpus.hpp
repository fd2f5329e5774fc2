#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cyclekit/graph.hpp"
#include "cyclekit/registry.hpp"

namespace corpus {

/// `count` seeded G(n, p) graphs, with n and p cycling through the given lists.
inline std::vector<cyclekit::Graph> gnp(int count, std::vector<int> orders, std::vector<double> probs,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<cyclekit::Graph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int n = orders[static_cast<std::size_t>(i) % orders.size()];
    const double p = probs[(static_cast<std::size_t>(i) / orders.size()) % probs.size()];
    out.push_back(cyclekit::random_gnp(n, p, rng));
  }
  return out;
}

struct Fixture {
  std::string graph6;
  int n = 0;
  std::vector<cyclekit::Edge> edges;
};

/// Lines "g6 <tab> n <tab> u-v u-v ..." written by an external encoder.
inline std::vector<Fixture> reference_fixtures() {
  std::ifstream in(CYCLEKIT_TEST_DATA "/graph6_reference.txt");
  std::vector<Fixture> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    Fixture f;
    fields >> f.graph6 >> f.n;
    std::string e;
    while (fields >> e) {
      const auto dash = e.find('-');
      f.edges.emplace_back(std::stoi(e.substr(0, dash)), std::stoi(e.substr(dash + 1)));
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace corpus
