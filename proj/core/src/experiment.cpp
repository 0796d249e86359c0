#include "ofg/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <limits>
#include <ostream>
#include <thread>

#include "ofg/costs.hpp"
#include "ofg/solvers.hpp"

namespace ofg {

namespace {

std::string real17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

TreeExperimentRecord evaluate_tree(const TreeParams& params, const TreeInstance& tree) {
  TreeExperimentRecord rec;
  rec.seed = params.seed;
  rec.p = params.p;
  rec.levels = params.levels;
  rec.total_nodes = tree.instance.size();
  rec.violating_fraction = tree.violating_fraction();
  const PoAReport poa = price_of_anarchy(tree.instance);
  rec.nash_cost = poa.nash_cost;
  rec.opt_cost = poa.opt_cost;
  rec.poa = poa.poa;
  rec.closed_form_cost = tree_closed_form(params, tree.level_counts).equilibrium_cost;
  return rec;
}

std::vector<TreeExperimentRecord> run_tree_experiment(const TreeExperimentConfig& config) {
  const std::size_t jobs = config.levels.size() * config.trials;
  std::vector<TreeExperimentRecord> records(jobs);

  auto run_job = [&](std::size_t k) {
    const std::size_t level = config.levels[k / config.trials];
    const std::size_t trial = k % config.trials;
    const TreeParams params{config.p, level, config.base_seed + trial};
    TreeExperimentRecord rec;
    try {
      rec = evaluate_tree(params, random_tree(params));
    } catch (const std::exception& e) {
      constexpr double nan = std::numeric_limits<double>::quiet_NaN();
      rec = TreeExperimentRecord{};
      rec.p = config.p;
      rec.levels = level;
      rec.violating_fraction = rec.nash_cost = rec.opt_cost = rec.poa = rec.closed_form_cost = nan;
      rec.failed = true;
      rec.error = e.what();
    }
    rec.trial = trial;
    rec.seed = params.seed;
    records[k] = std::move(rec);
  };

  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1 || jobs < 2) {
    for (std::size_t k = 0; k < jobs; ++k) run_job(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t)
      workers.emplace_back([&] {
        for (std::size_t k = next++; k < jobs; k = next++) run_job(k);
      });
  }
  return records;
}

void write_tree_csv(std::ostream& out, std::span<const TreeExperimentRecord> records) {
  out << kTreeCsvHeader << '\n';
  for (const TreeExperimentRecord& r : records) {
    out << r.trial << ',' << r.seed << ',' << real17(r.p) << ',' << r.levels << ',' << r.total_nodes << ','
        << real17(r.violating_fraction) << ',' << real17(r.nash_cost) << ',' << real17(r.opt_cost) << ','
        << real17(r.poa) << ',' << real17(r.closed_form_cost) << '\n';
  }
}

}  // namespace ofg
