#include "ofg/stackelberg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "linear_system.hpp"

namespace ofg {

std::string_view to_string(SelectionRule rule) {
  switch (rule) {
    case SelectionRule::explicit_list: return "explicit-list";
    case SelectionRule::violators: return "violators";
    case SelectionRule::centers: return "centers";
  }
  return "unknown";
}

ControlPlan plan_at_optimum(const GameInstance& instance, std::vector<NodeId> nodes, SelectionRule rule) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (NodeId i : nodes)
    if (i >= instance.size()) throw std::invalid_argument("controlled node out of range");
  ControlPlan plan{std::move(nodes), {}, rule};
  if (!plan.controlled.empty()) {
    const OpinionProfile opt = social_optimum(instance);
    for (NodeId i : plan.controlled) plan.assignment.push_back(opt[i]);
  }
  return plan;
}

ControlPlan select_violators(const GameInstance& instance) {
  return plan_at_optimum(instance, condition_report(instance).violators, SelectionRule::violators);
}

ControlPlan select_centers(const GameInstance& instance) {
  std::vector<NodeId> centers;
  for (NodeId i = 0; i < instance.size(); ++i)
    if (instance.influence_exerted(i) > 0.0 && instance.influencers(i).empty()) centers.push_back(i);
  return plan_at_optimum(instance, std::move(centers), SelectionRule::centers);
}

StackelbergResult induced_equilibrium(const GameInstance& instance, ControlPlan plan) {
  require_valid(instance);
  if (plan.assignment.size() != plan.controlled.size())
    throw std::invalid_argument("plan needs one assignment per controlled node");
  if (!std::is_sorted(plan.controlled.begin(), plan.controlled.end()) ||
      std::adjacent_find(plan.controlled.begin(), plan.controlled.end()) != plan.controlled.end())
    throw std::invalid_argument("controlled nodes must be ascending and distinct");

  const std::size_t n = instance.size();
  OpinionProfile profile(instance.internal_opinions().begin(), instance.internal_opinions().end());
  std::vector<bool> free(n, true);
  double magnitude = instance.opinion_scale() - 1.0;
  for (std::size_t k = 0; k < plan.controlled.size(); ++k) {
    const NodeId i = plan.controlled[k];
    if (i >= n) throw std::invalid_argument("controlled node out of range");
    if (!std::isfinite(plan.assignment[k])) throw std::invalid_argument("assignment must be finite");
    free[i] = false;
    profile[i] = plan.assignment[k];
    magnitude = std::max(magnitude, std::abs(plan.assignment[k]));
  }
  const double scale = 1.0 + magnitude;

  StackelbergResult result;
  result.induced_profile =
      detail::solve_stationarity(instance, free, std::move(profile), kDirectRelativeTolerance * scale, &result.residual);
  result.social_cost = social_cost(instance, result.induced_profile);
  result.opt_cost = social_cost(instance, social_optimum(instance));
  const PoAReport ratio = make_poa_report(result.social_cost, result.opt_cost, scale);
  if (ratio.degenerate && result.social_cost > 1e-12 * scale * scale)
    result.induced_poa = std::numeric_limits<double>::infinity();
  else
    result.induced_poa = ratio.poa;
  result.plan = std::move(plan);
  return result;
}

ConditionReport residual_condition(const GameInstance& instance, std::span<const NodeId> controlled) {
  std::vector<bool> is_controlled(instance.size(), false);
  for (NodeId i : controlled) is_controlled.at(i) = true;
  std::vector<NodeId> uncontrolled;
  for (NodeId i = 0; i < instance.size(); ++i)
    if (!is_controlled[i]) uncontrolled.push_back(i);

  std::vector<double> ratios = influence_ratios(instance);
  for (NodeId i = 0; i < instance.size(); ++i)
    if (is_controlled[i]) ratios[i] = 0.0;
  if (uncontrolled.empty()) return condition_from_ratios(std::vector<double>(instance.size(), 0.0));
  return condition_from_ratios(std::move(ratios), uncontrolled);
}

ControlExperiment control_experiment(const GameInstance& instance) {
  ControlExperiment out;
  out.uncontrolled = price_of_anarchy(instance);
  out.controlled = induced_equilibrium(instance, select_violators(instance));
  out.residual = residual_condition(instance, out.controlled.plan.controlled);
  out.residual_bound = out.residual.poa_bound;
  return out;
}

}  // namespace ofg
