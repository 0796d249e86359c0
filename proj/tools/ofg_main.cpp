// ofg: command-line front end for the opinion formation game library.
//
// Exit status: 0 on success, 1 on domain errors (parse, validation, solver),
// 2 on usage errors.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ofg/ofg.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ofg;

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// JSON has no infinity; unbounded quantities are written as the string "+inf".
ordered_json real(double x) {
  if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
  if (std::isnan(x)) return nullptr;
  return x;
}

ordered_json reals(std::span<const double> xs) {
  ordered_json out = ordered_json::array();
  for (double x : xs) out.push_back(real(x));
  return out;
}

ordered_json ids(const GameInstance& g, std::span<const NodeId> nodes) {
  ordered_json out = ordered_json::array();
  for (NodeId i : nodes) out.push_back(g.labels()[i]);
  return out;
}

ordered_json all_ids(const GameInstance& g) {
  ordered_json out = ordered_json::array();
  for (std::int64_t label : g.labels()) out.push_back(label);
  return out;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(item);
  if (parts.empty() || text.back() == ',') throw UsageError("empty item in list '" + text + "'");
  return parts;
}

double to_real(const std::string& text) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(x)) throw UsageError("not a finite number: '" + text + "'");
  return x;
}

std::int64_t to_integer(const std::string& text) {
  std::size_t used = 0;
  long long x = 0;
  try {
    x = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not an integer: '" + text + "'");
  return x;
}

std::vector<double> real_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : split_csv(text)) out.push_back(to_real(item));
  return out;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << '\n'; }

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text << '\n';
  if (!out) throw Error("write failed for " + path);
}

ordered_json condition_json(const GameInstance& g, const ConditionReport& r) {
  ordered_json out;
  out["ids"] = all_ids(g);
  out["ratios"] = reals(r.ratios);
  out["max_ratio"] = real(r.max_ratio);
  out["epsilon_star"] = r.epsilon_star ? real(*r.epsilon_star) : ordered_json(nullptr);
  out["poa_bound"] = real(r.poa_bound);
  out["violators"] = ids(g, r.violators);
  return out;
}

ordered_json poa_json(const PoAReport& r) {
  ordered_json out;
  out["nash_cost"] = real(r.nash_cost);
  out["opt_cost"] = real(r.opt_cost);
  out["poa"] = real(r.poa);
  out["degenerate"] = r.degenerate;
  return out;
}

ordered_json smoothness_json(const GameInstance& g, const SmoothnessCheckResult& r) {
  ordered_json out;
  out["lambda"] = real(r.params.lambda);
  out["mu"] = real(r.params.mu);
  out["poa_bound"] = real(r.params.poa_bound());
  out["samples_checked"] = r.samples_checked;
  out["seed"] = r.seed;
  out["box"] = {real(r.box.lo), real(r.box.hi)};
  out["max_violation"] = real(r.max_violation);
  out["violated"] = r.witness.has_value();
  if (r.witness) {
    out["witness"] = {{"sample_index", r.witness->sample_index},
                      {"origin", r.witness->origin},
                      {"ids", all_ids(g)},
                      {"z", reals(r.witness->z)},
                      {"o", reals(r.witness->o)}};
  } else {
    out["witness"] = nullptr;
  }
  out["note"] = "sampling can only falsify smoothness; zero violations is evidence, not a proof";
  return out;
}

SmoothnessCheckOptions sampling_options(std::size_t samples, std::uint64_t seed) {
  SmoothnessCheckOptions opts;
  opts.samples = samples;
  opts.seed = seed;
  opts.threads = std::max(1u, std::thread::hardware_concurrency());
  return opts;
}

int cmd_validate(const std::string& file) {
  const GameInstance g = load_instance(file);
  const ValidationReport report = validate(g);
  ordered_json findings = ordered_json::array();
  for (const Finding& f : report.findings) {
    ordered_json item;
    item["severity"] = f.severity == Severity::error ? "error" : "warning";
    item["node"] = f.node ? ordered_json(g.labels()[*f.node]) : ordered_json(nullptr);
    item["edge"] = f.edge ? ordered_json{g.labels()[f.edge->first], g.labels()[f.edge->second]} : ordered_json(nullptr);
    item["message"] = f.message;
    findings.push_back(std::move(item));
  }
  ordered_json out;
  out["ok"] = report.ok();
  out["nodes"] = g.size();
  out["edges"] = g.edge_count();
  out["errors"] = report.error_count();
  out["warnings"] = report.warning_count();
  out["findings"] = std::move(findings);
  emit(out);
  return report.ok() ? 0 : kDomainError;
}

int cmd_nash(const std::string& file, const std::string& method, const std::string& schedule, double tol,
             std::size_t max_iters) {
  const GameInstance g = load_instance(file);
  EquilibriumSolution sol;
  if (method == "direct") {
    sol = nash_direct(g);
  } else {
    DynamicsConfig config;
    config.schedule = schedule == "sync" ? Schedule::synchronous : Schedule::sequential_sweep;
    config.tolerance = tol;
    config.max_iterations = max_iters;
    sol = nash_dynamics(g, config);
  }
  ordered_json out;
  out["method"] = std::string(to_string(sol.method));
  out["ids"] = all_ids(g);
  out["profile"] = reals(sol.profile);
  out["residual"] = real(sol.residual);
  out["iterations"] = sol.iterations;
  out["social_cost"] = real(social_cost(g, sol.profile));
  emit(out);
  return 0;
}

int cmd_opt(const std::string& file) {
  const GameInstance g = load_instance(file);
  const OpinionProfile o = social_optimum(g);
  ordered_json out;
  out["ids"] = all_ids(g);
  out["profile"] = reals(o);
  out["cost"] = real(social_cost(g, o));
  emit(out);
  return 0;
}

int cmd_certify(const std::string& file, std::size_t samples, std::uint64_t seed) {
  const GameInstance g = load_instance(file);
  const CertifiedPoA c = certified_poa(g);
  ordered_json out;
  out["condition"] = condition_json(g, c.report);
  out["empirical"] = poa_json(c.empirical);
  out["certified"] = c.certified;
  if (c.report.epsilon_star) {
    out["certificate"] = smoothness_json(g, certificate_for_condition(g, sampling_options(samples, seed)));
  } else {
    out["certificate"] = nullptr;
    out["certificate_reason"] = "influence condition fails at the listed violators";
  }
  emit(out);
  return 0;
}

// Keyword "violators" or "all", or a comma list of node ids from the file.
std::vector<NodeId> resolve_control(const GameInstance& g, const std::string& spec, SelectionRule& rule) {
  if (spec == "violators") {
    rule = SelectionRule::violators;
    return condition_report(g).violators;
  }
  rule = SelectionRule::explicit_list;
  std::vector<NodeId> nodes;
  if (spec == "all") {
    for (NodeId i = 0; i < g.size(); ++i) nodes.push_back(i);
    return nodes;
  }
  for (const std::string& item : split_csv(spec)) {
    const auto index = g.index_of(to_integer(item));
    if (!index) throw UsageError("--control names unknown node id " + item);
    nodes.push_back(*index);
  }
  return nodes;
}

int cmd_stackelberg(const std::string& file, const std::string& control, const std::string& assign) {
  const GameInstance g = load_instance(file);
  require_valid(g);
  SelectionRule rule = SelectionRule::explicit_list;
  std::vector<NodeId> nodes = resolve_control(g, control, rule);

  ControlPlan plan;
  if (assign == "opt") {
    plan = plan_at_optimum(g, nodes, rule);
  } else {
    // Values pair with the controlled nodes in the order they were named.
    const std::vector<double> values = real_list(assign);
    if (values.size() != nodes.size())
      throw UsageError("--assign needs " + std::to_string(nodes.size()) + " values, got " +
                       std::to_string(values.size()));
    std::vector<std::pair<NodeId, double>> pairs;
    for (std::size_t k = 0; k < nodes.size(); ++k) pairs.emplace_back(nodes[k], values[k]);
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t k = 0; k + 1 < pairs.size(); ++k)
      if (pairs[k].first == pairs[k + 1].first) throw UsageError("--control lists a node twice");
    plan.rule = rule;
    for (const auto& [node, value] : pairs) {
      plan.controlled.push_back(node);
      plan.assignment.push_back(value);
    }
  }

  const StackelbergResult r = induced_equilibrium(g, plan);
  const ConditionReport residual = residual_condition(g, r.plan.controlled);
  ordered_json out;
  out["plan"] = {{"selection_rule", std::string(to_string(r.plan.rule))},
                 {"controlled", ids(g, r.plan.controlled)},
                 {"assignment", reals(r.plan.assignment)}};
  out["ids"] = all_ids(g);
  out["induced_profile"] = reals(r.induced_profile);
  out["residual"] = real(r.residual);
  out["social_cost"] = real(r.social_cost);
  out["opt_cost"] = real(r.opt_cost);
  out["induced_poa"] = real(r.induced_poa);
  out["uncontrolled_poa"] = real(price_of_anarchy(g).poa);
  out["residual_epsilon"] = residual.epsilon_star ? real(*residual.epsilon_star) : ordered_json(nullptr);
  out["residual_bound"] = real(residual.poa_bound);
  out["residual_note"] =
      "one reading of the residual condition: ratios over uncontrolled nodes only, with influence on controlled "
      "nodes kept in numerators";
  emit(out);
  return 0;
}

std::vector<double> default_opinions(std::size_t n) {
  std::vector<double> s(n, 0.0);
  if (n > 0) s[0] = 1.0;
  return s;
}

int cmd_tree_experiment(double p, const std::string& levels, std::size_t trials, std::uint64_t seed,
                        const std::string& path) {
  TreeExperimentConfig config;
  config.p = p;
  for (const std::string& item : split_csv(levels)) {
    const std::int64_t level = to_integer(item);
    if (level < 1) throw UsageError("--levels entries must be positive");
    config.levels.push_back(static_cast<std::size_t>(level));
  }
  if (!(p > 1.0 && p <= 2.0)) throw UsageError("--p must lie in (1, 2]");
  config.trials = trials;
  config.base_seed = seed;
  config.threads = std::max(1u, std::thread::hardware_concurrency());
  const auto records = run_tree_experiment(config);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  write_tree_csv(out, records);
  if (!out) throw Error("write failed for " + path);

  std::size_t failed = 0;
  for (const auto& r : records) failed += r.failed;
  std::cout << "wrote " << records.size() << " records to " << path;
  if (failed > 0) std::cout << " (" << failed << " failed)";
  std::cout << '\n';
  for (std::size_t level : config.levels) {
    double sum_poa = 0.0, sum_frac = 0.0;
    std::size_t ok = 0;
    for (const auto& r : records)
      if (r.levels == level && !r.failed) {
        sum_poa += r.poa;
        sum_frac += r.violating_fraction;
        ++ok;
      }
    if (ok == 0) continue;
    std::printf("L=%zu  mean_poa=%.6f  mean_violating_fraction=%.4f\n", level, sum_poa / static_cast<double>(ok),
                sum_frac / static_cast<double>(ok));
  }
  return failed > 0 ? kDomainError : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibria, optima and price of anarchy for opinion formation games"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  std::string file;
  auto add_file = [&file](CLI::App* sub) {
    sub->add_option("file", file, "Instance JSON file")->required();
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check an instance and list findings");
  add_file(validate_cmd);

  std::string method = "direct", schedule = "sync";
  double tol = 1e-10;
  std::size_t max_iters = 1'000'000;
  auto* nash_cmd = app.add_subcommand("nash", "Nash equilibrium");
  add_file(nash_cmd);
  nash_cmd->add_option("--method", method, "direct or dynamics")->check(CLI::IsMember({"direct", "dynamics"}));
  nash_cmd->add_option("--schedule", schedule, "Dynamics update order")->check(CLI::IsMember({"sync", "sweep"}));
  nash_cmd->add_option("--tol", tol, "Dynamics stopping tolerance")->check(CLI::PositiveNumber);
  nash_cmd->add_option("--max-iters", max_iters, "Dynamics iteration cap")->check(CLI::PositiveNumber);

  auto* opt_cmd = app.add_subcommand("opt", "Social optimum");
  add_file(opt_cmd);
  auto* poa_cmd = app.add_subcommand("poa", "Price of anarchy");
  add_file(poa_cmd);
  auto* check_cmd = app.add_subcommand("check", "Influence-ratio condition report");
  add_file(check_cmd);

  double lambda = 0.0, mu = 0.0;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  auto* smooth_cmd = app.add_subcommand("smooth", "Try to falsify (lambda, mu) local smoothness");
  add_file(smooth_cmd);
  smooth_cmd->add_option("--lambda", lambda)->required();
  smooth_cmd->add_option("--mu", mu)->required();
  smooth_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
  smooth_cmd->add_option("--seed", seed);

  auto* certify_cmd = app.add_subcommand("certify", "Condition bound, empirical PoA and smoothness certificate");
  add_file(certify_cmd);
  certify_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
  certify_cmd->add_option("--seed", seed);

  std::string out_path, s_list;
  std::size_t n = 0, d = 0, stars = 0, size = 0, levels = 0;
  double p = 0.0;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->require_subcommand(1);
  auto* gen_cycle = gen_cmd->add_subcommand("cycle", "Directed cycle");
  gen_cycle->add_option("--n", n)->required();
  gen_cycle->add_option("--s", s_list, "Comma-separated internal opinions");
  auto* gen_dreg = gen_cmd->add_subcommand("dreg", "Complete digraph on d+1 nodes");
  gen_dreg->add_option("--d", d)->required();
  gen_dreg->add_option("--s", s_list, "Comma-separated internal opinions");
  auto* gen_tree = gen_cmd->add_subcommand("tree", "Random branching tree");
  gen_tree->add_option("--p", p)->required();
  gen_tree->add_option("--levels", levels)->required();
  gen_tree->add_option("--seed", seed)->required();
  auto* gen_stars = gen_cmd->add_subcommand("stars", "Disjoint stars");
  gen_stars->add_option("--stars", stars)->required();
  gen_stars->add_option("--size", size)->required();
  for (auto* sub : {gen_cycle, gen_dreg, gen_tree, gen_stars}) sub->add_option("--out", out_path, "Output file");

  std::string levels_list, csv_path;
  std::size_t trials = 0;
  auto* tree_cmd = app.add_subcommand("tree-experiment", "Random-tree PoA sweep to CSV");
  tree_cmd->add_option("--p", p)->required();
  tree_cmd->add_option("--levels", levels_list, "Comma-separated L values")->required();
  tree_cmd->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
  tree_cmd->add_option("--seed", seed)->required();
  tree_cmd->add_option("--out", csv_path)->required();

  std::string control = "violators", assign = "opt";
  auto* stackelberg_cmd = app.add_subcommand("stackelberg", "Induced equilibrium with controlled nodes");
  add_file(stackelberg_cmd);
  stackelberg_cmd->add_option("--control", control, "violators, all, or comma-separated node ids");
  stackelberg_cmd->add_option("--assign", assign, "opt or comma-separated values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*validate_cmd) return cmd_validate(file);
    if (*nash_cmd) return cmd_nash(file, method, schedule, tol, max_iters);
    if (*opt_cmd) return cmd_opt(file);
    if (*poa_cmd) {
      emit(poa_json(price_of_anarchy(load_instance(file))));
      return 0;
    }
    if (*check_cmd) {
      const GameInstance g = load_instance(file);
      require_valid(g);
      emit(condition_json(g, condition_report(g)));
      return 0;
    }
    if (*smooth_cmd) {
      const GameInstance g = load_instance(file);
      emit(smoothness_json(g, check_pair(g, {lambda, mu}, sampling_options(samples, seed))));
      return 0;
    }
    if (*certify_cmd) return cmd_certify(file, samples, seed);
    if (*gen_cmd) {
      if (*gen_tree) {
        const TreeInstance tree = random_tree({p, levels, seed});
        write_text(out_path, serialize_instance(tree.instance, tree.level_of));
        return 0;
      }
      GameInstance g = *gen_stars ? star_farm(stars, size)
                       : *gen_cycle ? directed_cycle(n, s_list.empty() ? default_opinions(n) : real_list(s_list))
                                    : d_regular_complete(d, s_list.empty() ? default_opinions(d + 1) : real_list(s_list));
      write_text(out_path, serialize_instance(g));
      return 0;
    }
    if (*tree_cmd) return cmd_tree_experiment(p, levels_list, trials, seed, csv_path);
    if (*stackelberg_cmd) return cmd_stackelberg(file, control, assign);
  } catch (const NoConvergence& e) {
    std::cerr << "ofg: " << e.what() << '\n';
    std::cerr << "ofg: last residual " << e.last().residual << " after " << e.last().iterations << " iterations\n";
    return kDomainError;
  } catch (const Error& e) {
    std::cerr << "ofg: " << e.what() << '\n';
    return kDomainError;
  } catch (const UsageError& e) {
    std::cerr << "ofg: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::logic_error& e) {
    // Precondition failures on user-supplied arguments, e.g. --p 3.
    std::cerr << "ofg: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
