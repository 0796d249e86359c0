#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ofg/game.hpp"
#include "ofg/solvers.hpp"

namespace ofg {

/// Per-node influence condition and the PoA bound it implies.
///
/// ratios[i] = (sum_j w_ji) / (w_ii + sum_j w_ij): how much node i
/// influences others relative to how much it is anchored (by itself and its
/// influencers). If every ratio is at most 1/(1+eps), the price of anarchy
/// is at most 1 + 1/eps. The largest such eps is 1/max_ratio - 1.
struct ConditionReport {
  std::vector<double> ratios;
  double max_ratio = 0.0;
  /// Absent when max_ratio >= 1; +inf when max_ratio == 0.
  std::optional<double> epsilon_star;
  /// 1 + 1/epsilon_star; 1 when epsilon_star is +inf; +inf when absent.
  double poa_bound = 1.0;
  /// Nodes with ratio >= 1, ascending.
  std::vector<NodeId> violators;
};

std::vector<double> influence_ratios(const GameInstance& instance);

ConditionReport condition_report(const GameInstance& instance);

/// Builds the report fields from precomputed ratios. `nodes` selects which
/// entries count toward max_ratio and violators (all when empty); unselected
/// entries are kept in `ratios` as given.
ConditionReport condition_from_ratios(std::vector<double> ratios, std::span<const NodeId> nodes = {});

/// Weighted Eulerian test: |out_i - in_i| <= tol * (1 + out_i + in_i) at
/// every node, where out_i = sum_j w_ij and in_i = sum_j w_ji.
bool is_eulerian(const GameInstance& instance, double tol = 1e-12);

struct CertifiedPoA {
  ConditionReport report;
  PoAReport empirical;
  /// epsilon_star exists and empirical.poa <= bound * (1 + 1e-9).
  bool certified = false;
};

CertifiedPoA certified_poa(const GameInstance& instance);

}  // namespace ofg
