#include "ofg/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "ofg/costs.hpp"
#include "ofg/efficiency.hpp"
#include "ofg/random.hpp"
#include "ofg/solvers.hpp"

namespace ofg {

double smoothness_lhs(const GameInstance& instance, std::span<const double> z, std::span<const double> o) {
  require_profile(instance, z);
  require_profile(instance, o);
  double total = 0.0;
  for (NodeId i = 0; i < instance.size(); ++i)
    total += individual_cost(instance, z, i) + (o[i] - z[i]) * own_cost_derivative(instance, z, i);
  return total;
}

namespace {

double violation_of(const GameInstance& instance, const SmoothnessParams& params,
                    std::span<const double> z, std::span<const double> o) {
  const double lhs = smoothness_lhs(instance, z, o);
  const double rhs = params.lambda * social_cost(instance, o) + params.mu * social_cost(instance, z);
  const double excess = lhs - rhs;
  return excess > 1e-9 * (1.0 + std::abs(lhs)) ? excess : 0.0;
}

SamplingBox default_box(const GameInstance& instance) {
  auto s = instance.internal_opinions();
  auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  const double span = *hi - *lo;
  if (span == 0.0) return {*lo - 1.0, *hi + 1.0};
  return {*lo - span, *hi + span};
}

void draw_pair(std::size_t n, const SmoothnessCheckOptions& options, const SamplingBox& box,
               std::uint64_t stream, OpinionProfile& z, OpinionProfile& o) {
  Rng rng(derive_seed(options.seed, stream));
  z.resize(n);
  o.resize(n);
  for (double& v : z) v = uniform(rng, box.lo, box.hi);
  if (options.mode == SamplingMode::diagonal) {
    o = z;
  } else {
    for (double& v : o) v = uniform(rng, box.lo, box.hi);
  }
}

}  // namespace

SmoothnessCheckResult check_pair(const GameInstance& instance, const SmoothnessParams& params,
                                 const SmoothnessCheckOptions& options) {
  if (!(params.lambda > 0.0) || !(params.mu < 1.0))
    throw std::invalid_argument("smoothness parameters need lambda > 0 and mu < 1");
  if (options.samples == 0) throw std::invalid_argument("need at least one sample");
  const SamplingBox box = options.box.value_or(default_box(instance));
  if (!(box.lo <= box.hi) || !std::isfinite(box.lo) || !std::isfinite(box.hi))
    throw std::invalid_argument("sampling box must be a finite interval");

  const OpinionProfile nash = nash_direct(instance).profile;
  const OpinionProfile opt = social_optimum(instance);
  const OpinionProfile s(instance.internal_opinions().begin(), instance.internal_opinions().end());

  struct Structured {
    const OpinionProfile* z;
    const OpinionProfile* o;
    const char* origin;
  };
  const Structured structured[] = {{&nash, &opt, "nash/opt"}, {&opt, &nash, "opt/nash"}, {&s, &opt, "s/opt"}};
  constexpr std::size_t kStructured = std::size(structured);

  const std::size_t n = instance.size();
  std::vector<double> violations(kStructured + options.samples, 0.0);
  for (std::size_t k = 0; k < kStructured; ++k)
    violations[k] = violation_of(instance, params, *structured[k].z, *structured[k].o);

  auto run_range = [&](std::size_t begin, std::size_t end) {
    OpinionProfile z, o;
    for (std::size_t k = begin; k < end; ++k) {
      draw_pair(n, options, box, k, z, o);
      violations[kStructured + k] = violation_of(instance, params, z, o);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(options.samples)));
  if (threads == 1) {
    run_range(0, options.samples);
  } else {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (options.samples + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(options.samples, begin + chunk);
      if (begin < end) workers.emplace_back(run_range, begin, end);
    }
  }

  SmoothnessCheckResult result;
  result.params = params;
  result.samples_checked = violations.size();
  result.seed = options.seed;
  result.box = box;
  std::size_t worst = 0;
  for (std::size_t k = 0; k < violations.size(); ++k) {
    if (violations[k] > result.max_violation) {
      result.max_violation = violations[k];
      worst = k;
    }
  }
  if (result.max_violation > 0.0) {
    SmoothnessWitness w;
    w.sample_index = worst;
    if (worst < kStructured) {
      w.z = *structured[worst].z;
      w.o = *structured[worst].o;
      w.origin = structured[worst].origin;
    } else {
      draw_pair(n, options, box, worst - kStructured, w.z, w.o);
      w.origin = "random";
    }
    result.witness = std::move(w);
  }
  return result;
}

SmoothnessCheckResult certificate_for_condition(const GameInstance& instance,
                                                const SmoothnessCheckOptions& options) {
  const ConditionReport report = condition_report(instance);
  if (!report.epsilon_star)
    throw ConditionUnsatisfied("influence condition fails at " + std::to_string(report.violators.size()) +
                               " node(s); no finite epsilon exists");
  return check_pair(instance, SmoothnessParams{report.poa_bound, 0.0}, options);
}

}  // namespace ofg
