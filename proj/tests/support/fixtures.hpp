#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "ofg/game.hpp"
#include "ofg/generators.hpp"
#include "ofg/random.hpp"

namespace ofg::testing {

// Two nodes a=0, b=1, mutual unit influence, unit self weights, s = (0, 1).
inline GameInstance fix_a() {
  return GameInstance({1.0, 1.0}, {0.0, 1.0}, {{0, 1, 1.0}, {1, 0, 1.0}});
}

// Directed 3-cycle, node i influenced by i+1, s = (1, 0, 0).
inline GameInstance fix_cycle3() {
  const std::vector<double> s{1.0, 0.0, 0.0};
  return directed_cycle(3, s);
}

inline GameInstance fix_star(std::size_t m) { return star_farm(1, m); }

// Tree with every child-count draw equal to 1: a path of L + 1 nodes.
inline TreeInstance fix_path(double p, std::size_t levels) {
  return random_tree(TreeParams{p, levels, 0}, [] { return 1u; });
}

/// Random instance on n nodes: each ordered pair gets an edge with
/// probability `density`, weights uniform in [0.1, 2], self weights uniform
/// in [0.05, 1.5], s uniform in [-1, 2]. With `inflate`, self weights of
/// violating nodes are grown by 1.5x until every influence ratio is < 1.
inline GameInstance random_instance(Rng& rng, std::size_t n, double density, bool inflate) {
  std::vector<double> w(n), s(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = uniform(rng, 0.05, 1.5);
    s[i] = uniform(rng, -1.0, 2.0);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && uniform01(rng) < density) edges.push_back({i, j, uniform(rng, 0.1, 2.0)});

  if (inflate) {
    std::vector<double> received(n, 0.0), exerted(n, 0.0);
    for (const Edge& e : edges) {
      received[e.from] += e.weight;
      exerted[e.to] += e.weight;
    }
    for (std::size_t i = 0; i < n; ++i)
      while (exerted[i] / (w[i] + received[i]) >= 1.0) w[i] *= 1.5;
  }
  return GameInstance(std::move(w), std::move(s), std::move(edges));
}

inline std::vector<double> random_profile(Rng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> z(n);
  for (double& v : z) v = uniform(rng, lo, hi);
  return z;
}

}  // namespace ofg::testing
