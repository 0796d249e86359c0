#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ofg/efficiency.hpp"
#include "ofg/game.hpp"
#include "ofg/solvers.hpp"

namespace ofg {

enum class SelectionRule { explicit_list, violators, centers };

std::string_view to_string(SelectionRule rule);

/// Nodes whose expressed opinions are dictated, and the dictated values.
/// `assignment[k]` belongs to `controlled[k]`; controlled is ascending and
/// duplicate free.
struct ControlPlan {
  std::vector<NodeId> controlled;
  std::vector<double> assignment;
  SelectionRule rule = SelectionRule::explicit_list;
};

struct StackelbergResult {
  ControlPlan plan;
  OpinionProfile induced_profile;
  double social_cost = 0.0;  ///< includes the controlled players' own costs
  double opt_cost = 0.0;     ///< unconstrained social optimum
  double induced_poa = 1.0;  ///< social_cost / opt_cost (1 for 0/0)
  double residual = 0.0;     ///< best-response gap over uncontrolled nodes
};

/// Controls `nodes` at their social-optimum values.
ControlPlan plan_at_optimum(const GameInstance& instance, std::vector<NodeId> nodes,
                            SelectionRule rule = SelectionRule::explicit_list);

/// Controls the nodes with influence ratio >= 1 at their optimum values.
ControlPlan select_violators(const GameInstance& instance);

/// Controls the influence sources (nodes that influence someone but have no
/// influencers of their own), e.g. every star center, at optimum values.
ControlPlan select_centers(const GameInstance& instance);

/// Fixes the controlled nodes and solves the stationarity equations of the
/// rest. Throws std::invalid_argument for a malformed plan.
StackelbergResult induced_equilibrium(const GameInstance& instance, ControlPlan plan);

/// Influence condition for the game left after controlling `controlled`.
///
/// Only uncontrolled nodes are constrained. Controlled players keep o = z,
/// so their own deviation terms vanish, but their costs still depend on the
/// uncontrolled players that influence them; the influence an uncontrolled
/// node exerts on a controlled one therefore stays in its numerator. Each
/// denominator keeps all received influence, controlled sources included.
ConditionReport residual_condition(const GameInstance& instance, std::span<const NodeId> controlled);

struct ControlExperiment {
  PoAReport uncontrolled;
  StackelbergResult controlled;
  ConditionReport residual;
  double residual_bound = 1.0;  ///< 1 + 1/eps' (+inf when some ratio >= 1)
};

/// select_violators followed by induced_equilibrium.
ControlExperiment control_experiment(const GameInstance& instance);

}  // namespace ofg
