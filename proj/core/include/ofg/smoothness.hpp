#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "ofg/game.hpp"

namespace ofg {

/// A (lambda, mu) pair for the local smoothness inequality
///
///   sum_i [ C_i(z) + (o_i - z_i) dC_i/dz_i(z) ] <= lambda C(o) + mu C(z).
///
/// A game satisfying it for all profile pairs has PoA <= lambda / (1 - mu).
struct SmoothnessParams {
  double lambda = 1.0;  ///< > 0
  double mu = 0.0;      ///< < 1

  double poa_bound() const { return lambda / (1.0 - mu); }
};

struct SamplingBox {
  double lo = 0.0;
  double hi = 1.0;
};

enum class SamplingMode {
  independent,  ///< z and o drawn independently
  diagonal,     ///< o = z for every random sample
};

struct SmoothnessCheckOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  /// Defaults to [min s - span, max s + span], span = max s - min s; when
  /// span is 0 the box is [s - 1, s + 1].
  std::optional<SamplingBox> box;
  SamplingMode mode = SamplingMode::independent;
  /// Worker threads for the random samples; the reduction is ordered by
  /// sample index, so the result does not depend on this.
  unsigned threads = 1;
};

struct SmoothnessWitness {
  OpinionProfile z;
  OpinionProfile o;
  std::size_t sample_index = 0;
  std::string origin;  ///< "nash/opt", "opt/nash", "s/opt" or "random"
};

struct SmoothnessCheckResult {
  SmoothnessParams params;
  std::size_t samples_checked = 0;
  /// max over pairs of LHS - lambda C(o) - mu C(z), counted only where it
  /// exceeds 1e-9 (1 + |LHS|); 0 when no pair violates.
  double max_violation = 0.0;
  /// Present iff max_violation > 0; the lowest-index pair attaining it.
  std::optional<SmoothnessWitness> witness;
  std::uint64_t seed = 0;
  SamplingBox box;
};

/// Left-hand side of the local smoothness inequality for one (z, o) pair.
double smoothness_lhs(const GameInstance& instance, std::span<const double> z, std::span<const double> o);

/// Tries to falsify (lambda, mu)-smoothness. Always checks (nash, opt),
/// (opt, nash) and (s, opt) first (sample indices 0..2), then `samples`
/// random pairs from box^n. Sampling can only find violations; a zero
/// result is evidence, not proof.
SmoothnessCheckResult check_pair(const GameInstance& instance, const SmoothnessParams& params,
                                 const SmoothnessCheckOptions& options = {});

/// Checks the certificate (1 + 1/eps*, 0) implied by the influence
/// condition. Throws ConditionUnsatisfied when some node has ratio >= 1.
SmoothnessCheckResult certificate_for_condition(const GameInstance& instance,
                                                const SmoothnessCheckOptions& options = {});

}  // namespace ofg
