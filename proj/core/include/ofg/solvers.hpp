#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "ofg/costs.hpp"
#include "ofg/game.hpp"

namespace ofg {

enum class SolveMethod { direct, dynamics };
enum class Schedule { synchronous, sequential_sweep };

std::string_view to_string(SolveMethod m);
std::string_view to_string(Schedule s);

struct EquilibriumSolution {
  OpinionProfile profile;
  double residual = 0.0;  ///< max_i |z_i - best_response(z, i)|
  SolveMethod method = SolveMethod::direct;
  std::size_t iterations = 0;  ///< 0 for the direct solver
};

struct DynamicsConfig {
  Schedule schedule = Schedule::synchronous;
  double tolerance = 1e-10;
  std::size_t max_iterations = 1'000'000;
  /// Starting profile; the internal opinions when unset.
  std::optional<OpinionProfile> initial;
};

/// Best-response dynamics ran out of iterations. Carries the last profile.
class NoConvergence : public Error {
 public:
  explicit NoConvergence(EquilibriumSolution last);
  const EquilibriumSolution& last() const { return last_; }

 private:
  EquilibriumSolution last_;
};

/// Absolute tolerance for the direct solvers' residual checks.
inline constexpr double kDirectRelativeTolerance = 1e-9;

/// The unique pure Nash equilibrium from a sparse direct solve of the
/// stationarity equations, post-checked so that residual <= 1e-9 * scale
/// (scale = 1 + max |s_i|).
EquilibriumSolution nash_direct(const GameInstance& instance);

/// Repeated best responses: synchronous updates every node from the
/// previous profile; sequential_sweep updates in index order in place. Stops
/// once the largest per-node change and the true residual both drop below
/// the tolerance.
EquilibriumSolution nash_dynamics(const GameInstance& instance, const DynamicsConfig& config = {});

/// Unique minimizer of the social cost. Its gradient max-norm is at most
/// 1e-9 * scale.
OpinionProfile social_optimum(const GameInstance& instance);

struct PoAReport {
  double nash_cost = 0.0;
  double opt_cost = 0.0;
  double poa = 1.0;
  /// Optimum cost is numerically zero (<= 1e-12 * scale^2); poa is then 1.
  bool degenerate = false;
};

/// Ratio of the equilibrium cost to the optimum cost. The equilibrium is
/// unique, so this is also the worst-equilibrium ratio.
PoAReport price_of_anarchy(const GameInstance& instance);

/// Ratio with the 0/0 convention shared by every PoA computed here.
PoAReport make_poa_report(double nash_cost, double opt_cost, double scale);

}  // namespace ofg
