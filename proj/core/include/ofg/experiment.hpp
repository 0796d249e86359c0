#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ofg/generators.hpp"

namespace ofg {

/// One random-tree trial. Numeric fields are NaN when `failed` is set.
struct TreeExperimentRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double p = 0.0;
  std::size_t levels = 0;
  std::size_t total_nodes = 0;
  double violating_fraction = 0.0;  ///< two-child nodes among internal nodes
  double nash_cost = 0.0;
  double opt_cost = 0.0;
  double poa = 0.0;
  double closed_form_cost = 0.0;
  bool failed = false;
  std::string error;
};

struct TreeExperimentConfig {
  double p = 1.44;
  std::vector<std::size_t> levels;
  std::size_t trials = 1;
  std::uint64_t base_seed = 0;
  /// Worker threads; output order is (L, trial) regardless.
  unsigned threads = 1;
};

/// Trial t at every L uses seed base_seed + t. A trial that throws is
/// recorded as failed instead of aborting the sweep.
std::vector<TreeExperimentRecord> run_tree_experiment(const TreeExperimentConfig& config);

/// Solves one tree and fills a record (trial and seed left to the caller).
TreeExperimentRecord evaluate_tree(const TreeParams& params, const TreeInstance& tree);

/// Header plus one row per record; reals at 17 significant digits.
void write_tree_csv(std::ostream& out, std::span<const TreeExperimentRecord> records);

inline constexpr const char* kTreeCsvHeader =
    "trial,seed,p,L,total_nodes,violating_fraction,nash_cost,opt_cost,poa,closed_form_cost";

}  // namespace ofg
