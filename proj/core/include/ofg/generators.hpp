#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ofg/game.hpp"

namespace ofg {

/// Node i is influenced by node (i + 1) mod n with weight 1; every w_ii = 1.
/// Throws std::invalid_argument for n < 2 or s.size() != n.
GameInstance directed_cycle(std::size_t n, std::span<const double> s);

/// Complete digraph on d + 1 nodes, unit edge weights, w_ii = 1, so every
/// node receives and exerts total influence d.
GameInstance d_regular_complete(std::size_t d, std::span<const double> s);

/// Disjoint stars. Each center has w_cc = 1, s = 1 and no influencers; each
/// of its star_size - 1 leaves has w = 1, s = 0 and a unit edge to the center.
/// Nodes are laid out star by star, center first.
GameInstance star_farm(std::size_t num_stars, std::size_t star_size);

struct TreeParams {
  double p = 1.44;          ///< expected child count, in (1, 2]
  std::size_t levels = 1;   ///< leaf level L; the root sits at level 0
  std::uint64_t seed = 0;
};

/// Branching tree whose edges all point from child to parent.
///
/// Every node above level L independently gets 2 children with probability
/// p - 1 and 1 child otherwise. The root has w = sqrt(p) and s = 1; every
/// other node has w = sqrt(p) - 1, s = 0 and a unit edge to its parent.
/// Nodes are numbered breadth first, so parents precede children.
struct TreeInstance {
  GameInstance instance;
  std::vector<std::size_t> level_of;
  std::vector<std::size_t> level_counts;  ///< size L + 1, level_counts[0] == 1
  std::size_t violator_count = 0;         ///< nodes with two children
  std::size_t internal_count = 0;         ///< nodes above level L

  double violating_fraction() const {
    return internal_count == 0 ? 0.0 : static_cast<double>(violator_count) / static_cast<double>(internal_count);
  }
};

/// Source of child counts in breadth-first order; must return 1 or 2.
using ChildCountSource = std::function<unsigned()>;

TreeInstance random_tree(const TreeParams& params);

/// Same construction with externally supplied child counts (params.seed is
/// ignored). Used to pin down exact shapes, e.g. a path when every draw is 1.
TreeInstance random_tree(const TreeParams& params, const ChildCountSource& draws);

/// Equilibrium of a generated tree in closed form. Each node's best
/// response depends only on its parent, so z = p^(-level/2) holds for every
/// realization and the equilibrium cost uses the actual level counts.
struct TreeClosedForm {
  std::vector<double> level_opinion;  ///< p^(-i/2)
  std::vector<double> level_cost;     ///< per-node cost (p - sqrt p) p^(-i), 0 at the root
  double equilibrium_cost = 0.0;      ///< sum_i level_counts[i] * level_cost[i]
  double optimum_upper_bound = 0.0;   ///< sqrt(p), the cost of the all-zero profile
};

TreeClosedForm tree_closed_form(const TreeParams& params, std::span<const std::size_t> level_counts);

}  // namespace ofg
