#include "ofg/efficiency.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ofg {

std::vector<double> influence_ratios(const GameInstance& instance) {
  require_valid(instance);
  std::vector<double> ratios(instance.size());
  for (NodeId i = 0; i < instance.size(); ++i) {
    const double exerted = instance.influence_exerted(i);
    ratios[i] = exerted == 0.0 ? 0.0 : exerted / (instance.self_weight(i) + instance.influence_received(i));
  }
  return ratios;
}

ConditionReport condition_from_ratios(std::vector<double> ratios, std::span<const NodeId> nodes) {
  ConditionReport report;
  auto consider = [&](NodeId i) {
    const double r = ratios.at(i);
    report.max_ratio = std::max(report.max_ratio, r);
    if (r >= 1.0) report.violators.push_back(i);
  };
  if (nodes.empty()) {
    for (NodeId i = 0; i < ratios.size(); ++i) consider(i);
  } else {
    std::vector<NodeId> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    for (NodeId i : sorted) consider(i);
  }
  report.ratios = std::move(ratios);

  constexpr double inf = std::numeric_limits<double>::infinity();
  if (report.max_ratio >= 1.0) {
    report.epsilon_star.reset();
    report.poa_bound = inf;
  } else if (report.max_ratio == 0.0) {
    report.epsilon_star = inf;
    report.poa_bound = 1.0;
  } else {
    report.epsilon_star = 1.0 / report.max_ratio - 1.0;
    report.poa_bound = 1.0 + 1.0 / *report.epsilon_star;
  }
  return report;
}

ConditionReport condition_report(const GameInstance& instance) {
  return condition_from_ratios(influence_ratios(instance));
}

bool is_eulerian(const GameInstance& instance, double tol) {
  if (tol < 0.0) throw std::invalid_argument("tolerance must be non-negative");
  for (NodeId i = 0; i < instance.size(); ++i) {
    const double out = instance.influence_received(i);
    const double in = instance.influence_exerted(i);
    if (std::abs(out - in) > tol * (1.0 + out + in)) return false;
  }
  return true;
}

CertifiedPoA certified_poa(const GameInstance& instance) {
  CertifiedPoA out{condition_report(instance), price_of_anarchy(instance), false};
  out.certified = out.report.epsilon_star.has_value() &&
                  out.empirical.poa <= out.report.poa_bound + 1e-9 * out.report.poa_bound;
  return out;
}

}  // namespace ofg
