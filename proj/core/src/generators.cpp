#include "ofg/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ofg/random.hpp"

namespace ofg {

namespace {

// Guard against accidental exponential blow-up (p = 2 doubles every level).
constexpr std::size_t kMaxTreeNodes = std::size_t{1} << 26;

void check_tree_params(const TreeParams& params) {
  if (!(params.p > 1.0 && params.p <= 2.0)) throw std::invalid_argument("tree p must lie in (1, 2]");
  if (params.levels == 0) throw std::invalid_argument("tree needs at least one level below the root");
}

}  // namespace

GameInstance directed_cycle(std::size_t n, std::span<const double> s) {
  if (n < 2) throw std::invalid_argument("a directed cycle needs at least 2 nodes");
  if (s.size() != n) throw std::invalid_argument("cycle opinions must have n entries");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (NodeId i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  return GameInstance(std::vector<double>(n, 1.0), std::vector<double>(s.begin(), s.end()), std::move(edges));
}

GameInstance d_regular_complete(std::size_t d, std::span<const double> s) {
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
  const std::size_t n = d + 1;
  if (s.size() != n) throw std::invalid_argument("complete digraph opinions must have d + 1 entries");
  std::vector<Edge> edges;
  edges.reserve(n * d);
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = 0; j < n; ++j)
      if (i != j) edges.push_back({i, j, 1.0});
  return GameInstance(std::vector<double>(n, 1.0), std::vector<double>(s.begin(), s.end()), std::move(edges));
}

GameInstance star_farm(std::size_t num_stars, std::size_t star_size) {
  if (num_stars < 1) throw std::invalid_argument("need at least one star");
  if (star_size < 2) throw std::invalid_argument("a star needs a center and at least one leaf");
  const std::size_t n = num_stars * star_size;
  std::vector<double> w(n, 1.0), s(n, 0.0);
  std::vector<Edge> edges;
  edges.reserve(num_stars * (star_size - 1));
  for (std::size_t k = 0; k < num_stars; ++k) {
    const NodeId center = k * star_size;
    s[center] = 1.0;
    for (std::size_t leaf = 1; leaf < star_size; ++leaf) edges.push_back({center + leaf, center, 1.0});
  }
  return GameInstance(std::move(w), std::move(s), std::move(edges));
}

TreeInstance random_tree(const TreeParams& params) {
  check_tree_params(params);
  Rng rng(params.seed);
  const double p_two = params.p - 1.0;
  return random_tree(params, [&rng, p_two]() -> unsigned { return uniform01(rng) < p_two ? 2u : 1u; });
}

TreeInstance random_tree(const TreeParams& params, const ChildCountSource& draws) {
  check_tree_params(params);
  const double root_weight = std::sqrt(params.p);
  const double inner_weight = root_weight - 1.0;

  std::vector<double> w{root_weight};
  std::vector<double> s{1.0};
  std::vector<Edge> edges;
  std::vector<std::size_t> level_of{0};
  std::vector<std::size_t> level_counts{1};
  std::size_t violators = 0;

  std::size_t level_begin = 0;
  for (std::size_t level = 0; level < params.levels; ++level) {
    const std::size_t level_end = w.size();
    for (NodeId parent = level_begin; parent < level_end; ++parent) {
      const unsigned children = draws();
      if (children != 1 && children != 2)
        throw std::invalid_argument("child count must be 1 or 2, got " + std::to_string(children));
      if (children == 2) ++violators;
      for (unsigned c = 0; c < children; ++c) {
        edges.push_back({w.size(), parent, 1.0});
        w.push_back(inner_weight);
        s.push_back(0.0);
        level_of.push_back(level + 1);
      }
      if (w.size() > kMaxTreeNodes) throw std::length_error("tree exceeds the node limit");
    }
    level_counts.push_back(w.size() - level_end);
    level_begin = level_end;
  }

  const std::size_t internal = level_begin;
  return TreeInstance{GameInstance(std::move(w), std::move(s), std::move(edges)), std::move(level_of),
                      std::move(level_counts), violators, internal};
}

TreeClosedForm tree_closed_form(const TreeParams& params, std::span<const std::size_t> level_counts) {
  check_tree_params(params);
  if (level_counts.size() != params.levels + 1)
    throw std::invalid_argument("level_counts must have L + 1 entries");
  const double root = std::sqrt(params.p);
  TreeClosedForm form;
  form.optimum_upper_bound = root;
  for (std::size_t i = 0; i <= params.levels; ++i) {
    const double decay = std::pow(params.p, -static_cast<double>(i));
    form.level_opinion.push_back(std::pow(params.p, -0.5 * static_cast<double>(i)));
    form.level_cost.push_back(i == 0 ? 0.0 : (params.p - root) * decay);
    form.equilibrium_cost += static_cast<double>(level_counts[i]) * form.level_cost.back();
  }
  return form;
}

}  // namespace ofg
