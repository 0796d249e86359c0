#include "ofg/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "linear_system.hpp"

namespace ofg {

std::string_view to_string(SolveMethod m) {
  return m == SolveMethod::direct ? "direct" : "dynamics";
}

std::string_view to_string(Schedule s) {
  return s == Schedule::synchronous ? "synchronous" : "sequential-sweep";
}

NoConvergence::NoConvergence(EquilibriumSolution last)
    : Error("best-response dynamics did not converge after " + std::to_string(last.iterations) +
            " iterations (residual " + std::to_string(last.residual) + ")"),
      last_(std::move(last)) {}

EquilibriumSolution nash_direct(const GameInstance& instance) {
  require_valid(instance);
  const std::vector<bool> free_mask(instance.size(), true);
  double residual = 0.0;
  OpinionProfile z = detail::solve_stationarity(
      instance, free_mask,
      OpinionProfile(instance.internal_opinions().begin(), instance.internal_opinions().end()),
      kDirectRelativeTolerance * instance.opinion_scale(), &residual);
  return {std::move(z), residual, SolveMethod::direct, 0};
}

EquilibriumSolution nash_dynamics(const GameInstance& instance, const DynamicsConfig& config) {
  require_valid(instance);
  if (!(config.tolerance > 0.0)) throw std::invalid_argument("dynamics tolerance must be positive");
  if (config.max_iterations == 0) throw std::invalid_argument("max_iterations must be positive");

  OpinionProfile z = config.initial.value_or(
      OpinionProfile(instance.internal_opinions().begin(), instance.internal_opinions().end()));
  require_profile(instance, z);

  const std::size_t n = instance.size();
  OpinionProfile next(n);
  double residual = fixed_point_residual(instance, z);
  std::size_t it = 0;
  while (it < config.max_iterations) {
    ++it;
    double change = 0.0;
    if (config.schedule == Schedule::synchronous) {
      for (NodeId i = 0; i < n; ++i) {
        next[i] = best_response(instance, z, i);
        change = std::max(change, std::abs(next[i] - z[i]));
      }
      z.swap(next);
    } else {
      for (NodeId i = 0; i < n; ++i) {
        const double v = best_response(instance, z, i);
        change = std::max(change, std::abs(v - z[i]));
        z[i] = v;
      }
    }
    if (change < config.tolerance) {
      residual = fixed_point_residual(instance, z);
      if (residual <= config.tolerance) return {std::move(z), residual, SolveMethod::dynamics, it};
    }
  }
  residual = fixed_point_residual(instance, z);
  EquilibriumSolution last{std::move(z), residual, SolveMethod::dynamics, it};
  if (residual <= config.tolerance) return last;
  throw NoConvergence(std::move(last));
}

OpinionProfile social_optimum(const GameInstance& instance) {
  require_valid(instance);
  return detail::solve_social_optimum(instance, kDirectRelativeTolerance * instance.opinion_scale(), nullptr);
}

PoAReport make_poa_report(double nash_cost, double opt_cost, double scale) {
  PoAReport report{nash_cost, opt_cost, 1.0, false};
  if (opt_cost <= 1e-12 * scale * scale)
    report.degenerate = true;
  else
    report.poa = nash_cost / opt_cost;
  return report;
}

PoAReport price_of_anarchy(const GameInstance& instance) {
  const EquilibriumSolution nash = nash_direct(instance);
  const OpinionProfile opt = social_optimum(instance);
  return make_poa_report(social_cost(instance, nash.profile), social_cost(instance, opt),
                         instance.opinion_scale());
}

}  // namespace ofg
