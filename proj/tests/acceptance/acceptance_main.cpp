// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "ofg/ofg.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

using namespace ofg;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first failure message; later checks keep running so the
// detail reports the worst value seen.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && pass_) {
      pass_ = false;
      first_ = what;
    }
  }
  Outcome done(const std::string& summary) const { return {pass_, pass_ ? summary : first_ + " | " + summary}; }

 private:
  bool pass_ = true;
  std::string first_;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::string fmt(const char* f, double a, double b, double c) {
  char buf[200];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// Step-h grid minimum of f on [lo, hi]^2, restricted to a window of +-w
// around a coarse-grid minimum; f is a convex quadratic here.
std::pair<double, double> grid_argmin_2d(const std::function<double(double, double)>& f, double lo, double hi,
                                         double h) {
  const auto coarse = testing::grid_minimize_2d(f, lo, hi, 1e-2);
  const double w = 2e-2;
  double best = f(coarse.x, coarse.y), bx = coarse.x, by = coarse.y;
  const int steps = static_cast<int>(std::lround(2 * w / h));
  for (int a = 0; a <= steps; ++a)
    for (int b = 0; b <= steps; ++b) {
      const double x = coarse.x - w + a * h, y = coarse.y - w + b * h;
      const double v = f(x, y);
      if (v < best) best = v, bx = x, by = y;
    }
  return {bx, by};
}

double grid_argmin_1d(const std::function<double(double)>& f, double lo, double hi, double h) {
  double best = f(lo), arg = lo;
  const int steps = static_cast<int>(std::lround((hi - lo) / h));
  for (int k = 1; k <= steps; ++k) {
    const double x = lo + k * h;
    const double v = f(x);
    if (v < best) best = v, arg = x;
  }
  return arg;
}

Outcome two_node_exact() {
  Checker c;
  const GameInstance g = testing::fix_a();
  const auto z = nash_direct(g).profile;
  const auto o = social_optimum(g);
  const PoAReport r = price_of_anarchy(g);
  c.expect(std::abs(z[0] - 1.0 / 3) <= 1e-9 && std::abs(z[1] - 2.0 / 3) <= 1e-9, "nash != (1/3, 2/3)");
  c.expect(std::abs(o[0] - 0.4) <= 1e-9 && std::abs(o[1] - 0.6) <= 1e-9, "optimum != (2/5, 3/5)");
  c.expect(std::abs(r.poa - 10.0 / 9) <= 1e-9, "poa != 10/9");
  const ConditionReport cr = condition_report(g);
  c.expect(cr.epsilon_star && *cr.epsilon_star == 1.0 && cr.poa_bound == 2.0, "condition report != (1, 2)");
  c.expect(certified_poa(g).certified, "not certified");

  // Grid oracle at step 1e-4.
  const double h = 1e-4;
  const auto [ox, oy] = grid_argmin_2d([&](double x, double y) { return social_cost(g, std::vector<double>{x, y}); },
                                       0.0, 1.0, h);
  c.expect(std::abs(ox - 0.4) <= h && std::abs(oy - 0.6) <= h, "grid optimum disagrees");
  for (NodeId i = 0; i < 2; ++i) {
    const double best = grid_argmin_1d(
        [&](double x) {
          std::vector<double> p = z;
          p[i] = x;
          return individual_cost(g, p, i);
        },
        0.0, 1.0, h);
    c.expect(std::abs(best - z[i]) <= h, "grid best response disagrees with nash");
  }
  return c.done(fmt("nash=(%.12f, %.12f) poa=%.12f", z[0], z[1], r.poa) + fmt(" grid_opt=(%.4f, %.4f)", ox, oy));
}

Outcome directed_cycle_bound() {
  Checker c;
  double worst = 0.0;
  Rng rng(1001);
  for (std::size_t n : {3u, 5u, 10u, 50u}) {
    for (int k = 0; k < 100; ++k) {
      std::vector<double> s(n);
      for (double& x : s) x = uniform01(rng);
      const GameInstance g = directed_cycle(n, s);
      const ConditionReport cr = condition_report(g);
      c.expect(cr.epsilon_star && *cr.epsilon_star == 1.0 && cr.poa_bound == 2.0, "cycle condition != (1, 2)");
      const double poa = price_of_anarchy(g).poa;
      worst = std::max(worst, poa);
      c.expect(poa <= 2.0 + 1e-9, "cycle poa above 2");
    }
  }
  return c.done(fmt("400 cycles, max poa=%.6f", worst));
}

Outcome d_regular_bound() {
  Checker c;
  Rng rng(1002);
  double worst_gap = -1e300, worst_eps_err = 0.0;
  for (std::size_t d : {1u, 2u, 3u, 5u, 8u}) {
    for (int k = 0; k < 100; ++k) {
      std::vector<double> s(d + 1);
      for (double& x : s) x = uniform01(rng);
      const GameInstance g = d_regular_complete(d, s);
      const ConditionReport cr = condition_report(g);
      const double err = cr.epsilon_star ? std::abs(*cr.epsilon_star - 1.0 / static_cast<double>(d)) : 1.0;
      worst_eps_err = std::max(worst_eps_err, err);
      c.expect(err <= 1e-12, "eps* != 1/d");
      const double poa = price_of_anarchy(g).poa;
      worst_gap = std::max(worst_gap, poa - static_cast<double>(d + 1));
      c.expect(poa <= static_cast<double>(d + 1) + 1e-9, "poa above d+1");
    }
  }
  return c.done(fmt("500 instances, max |eps*-1/d|=%.2e, max poa-(d+1)=%.4f", worst_eps_err, worst_gap));
}

Outcome condition_bound_property() {
  Checker c;
  Rng rng(1003);
  double worst_ratio = 0.0;
  std::size_t sample_total = 0;
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 2 + rng() % 11;
    const GameInstance g = testing::random_instance(rng, n, 0.3, true);
    const CertifiedPoA cp = certified_poa(g);
    c.expect(cp.report.epsilon_star.has_value(), "inflated instance still violates");
    const double bound = cp.report.poa_bound;
    worst_ratio = std::max(worst_ratio, cp.empirical.poa / bound);
    c.expect(cp.empirical.poa <= bound + 1e-9 * bound, "poa above 1 + 1/eps*");
    SmoothnessCheckOptions opts;
    opts.samples = 200;
    opts.seed = static_cast<std::uint64_t>(k);
    const SmoothnessCheckResult sr = certificate_for_condition(g, opts);
    sample_total += sr.samples_checked;
    c.expect(sr.params.lambda == bound && sr.params.mu == 0.0, "certificate is not (1 + 1/eps*, 0)");
    c.expect(sr.max_violation == 0.0, "smoothness certificate violated");
  }
  return c.done(fmt("500 instances, max poa/bound=%.4f, %.0f smoothness pairs", worst_ratio,
                    static_cast<double>(sample_total)));
}

Outcome tree_closed_forms() {
  Checker c;
  std::size_t trees = 0;
  double worst_z = 0.0, worst_cost = 0.0, worst_opt = -1e300;
  for (double p : {1.05, 1.21, 1.44}) {
    for (std::size_t levels = 1; levels <= 12; ++levels) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const TreeParams params{p, levels, seed};
        const TreeInstance tree = random_tree(params);
        const TreeClosedForm form = tree_closed_form(params, tree.level_counts);
        const auto z = nash_direct(tree.instance).profile;
        for (NodeId i = 0; i < z.size(); ++i) {
          const double err = std::abs(z[i] - std::pow(p, -static_cast<double>(tree.level_of[i]) / 2));
          worst_z = std::max(worst_z, err);
          c.expect(err <= 1e-9, "opinion != p^(-level/2)");
        }
        double expected = 0.0;
        for (std::size_t i = 1; i <= levels; ++i)
          expected += static_cast<double>(tree.level_counts[i]) * (p - std::sqrt(p)) * std::pow(p, -static_cast<double>(i));
        const double cost = social_cost(tree.instance, z);
        const double rel = std::abs(cost - expected) / expected;
        worst_cost = std::max(worst_cost, rel);
        c.expect(rel <= 1e-9, "equilibrium cost != closed form");
        c.expect(std::abs(form.equilibrium_cost - expected) <= 1e-12 * expected, "library closed form differs");
        const double opt = social_cost(tree.instance, social_optimum(tree.instance));
        worst_opt = std::max(worst_opt, opt - std::sqrt(p));
        c.expect(opt <= std::sqrt(p) + 1e-9, "optimum above sqrt(p)");
        ++trees;
      }
    }
  }
  return c.done(fmt("%.0f trees, max |z err|=%.2e, max rel cost err=%.2e", static_cast<double>(trees), worst_z,
                    worst_cost) +
                fmt(", max opt-sqrt(p)=%.4f", worst_opt));
}

std::vector<double> mean_poa_by_level(double p, const std::vector<std::size_t>& levels, std::size_t trials,
                                      std::uint64_t seed, std::vector<double>* fractions = nullptr) {
  TreeExperimentConfig config;
  config.p = p;
  config.levels = levels;
  config.trials = trials;
  config.base_seed = seed;
  config.threads = 4;
  const auto records = run_tree_experiment(config);
  std::vector<double> poa(levels.size(), 0.0), frac(levels.size(), 0.0);
  for (std::size_t k = 0; k < records.size(); ++k) {
    poa[k / trials] += records[k].poa / static_cast<double>(trials);
    frac[k / trials] += records[k].violating_fraction / static_cast<double>(trials);
  }
  if (fractions) *fractions = frac;
  return poa;
}

Outcome unbounded_growth() {
  Checker c;
  const std::vector<std::size_t> levels{4, 5, 6, 7, 8, 9, 10};
  const auto mean = mean_poa_by_level(1.44, levels, 30, 6000);
  const double factor = mean[6] / mean[1];
  c.expect(factor >= 1.6, "mean poa(L=10) / mean poa(L=5) < 1.6");
  int inversions = 0;
  for (std::size_t k = 1; k < mean.size(); ++k) inversions += mean[k] < mean[k - 1];
  c.expect(inversions <= 1, "more than one inversion in mean poa over L");
  std::string series;
  for (double m : mean) series += fmt(" %.3f", m);
  return c.done(fmt("poa(10)/poa(5)=%.3f, inversions=%.0f, means:", factor, inversions) + series);
}

Outcome small_violation_regime() {
  Checker c;
  std::vector<double> fractions;
  const auto mean = mean_poa_by_level(1.05, {60, 120}, 30, 7000, &fractions);
  c.expect(fractions[0] >= 0.02 && fractions[0] <= 0.10, "mean violating fraction outside [0.02, 0.10]");
  c.expect(mean[0] >= 1.2, "mean poa at L=60 below 1.2");
  c.expect(mean[1] >= 1.5 * mean[0], "mean poa at L=120 below 1.5x L=60");
  return c.done(fmt("fraction(60)=%.4f, poa(60)=%.4f, poa(120)=%.4f", fractions[0], mean[0], mean[1]));
}

Outcome smoothness_identities() {
  Checker c;
  Rng rng(1008);
  double worst_diag = 0.0, worst_nash = -1e300, worst_fd = 0.0;
  for (int k = 0; k < 100; ++k) {
    const GameInstance g = testing::random_instance(rng, 1 + rng() % 10, 0.4, false);
    const auto z = testing::random_profile(rng, g.size(), -3.0, 3.0);
    const double cost = social_cost(g, z);
    const double rel = std::abs(smoothness_lhs(g, z, z) - cost) / std::max(cost, 1e-300);
    worst_diag = std::max(worst_diag, rel);
    c.expect(rel <= 1e-12, "LHS(z, z) != C(z)");
  }
  for (int k = 0; k < 100; ++k) {
    const GameInstance g = testing::random_instance(rng, 2 + rng() % 9, 0.4, false);
    const auto z = nash_direct(g).profile;
    const auto o = testing::random_profile(rng, g.size(), -3.0, 3.0);
    const double scale = g.opinion_scale();
    const double gap = smoothness_lhs(g, z, o) - social_cost(g, z);
    worst_nash = std::max(worst_nash, gap / (scale * scale));
    c.expect(gap <= 1e-8 * scale * scale, "LHS(nash, o) - C(nash) too large");
  }
  for (int k = 0; k < 100; ++k) {
    const GameInstance g = testing::random_instance(rng, 1 + rng() % 10, 0.4, false);
    const auto z = testing::random_profile(rng, g.size(), -2.0, 2.0);
    const NodeId i = rng() % g.size();
    const double an = own_cost_derivative(g, z, i);
    const double fd = testing::central_difference([&](const std::vector<double>& x) { return individual_cost(g, x, i); },
                                                  z, i, 1e-6 * g.opinion_scale());
    const double rel = std::abs(fd - an) / std::max(1.0, std::abs(an));
    worst_fd = std::max(worst_fd, rel);
    c.expect(rel <= 1e-4, "derivative disagrees with finite differences");
  }
  return c.done(fmt("max rel diag=%.2e, max nash gap/scale^2=%.2e, max fd rel=%.2e", worst_diag, worst_nash, worst_fd));
}

Outcome star_farm_lower_bound() {
  Checker c;
  std::string summary;
  for (std::size_t m : {3u, 5u, 9u, 16u}) {
    const GameInstance g = star_farm(m, m);
    const double md = static_cast<double>(m);
    const double poa = price_of_anarchy(g).poa;
    c.expect(std::abs(poa - (md + 1) / 2) <= 1e-9, "star farm poa != (m+1)/2");

    std::vector<NodeId> centers;
    for (std::size_t k = 0; k < m; ++k) centers.push_back(k * m);
    c.expect(condition_report(g).violators == centers, "violators are not exactly the centers");

    const StackelbergResult all = induced_equilibrium(g, plan_at_optimum(g, centers));
    c.expect(std::abs(all.induced_poa - 1.0) <= 1e-9, "controlling all centers does not give poa 1");

    const std::vector<NodeId> omit_one(centers.begin() + 1, centers.end());
    const double partial = induced_equilibrium(g, plan_at_optimum(g, omit_one)).induced_poa;
    c.expect(partial > 1.0, "omitting a center gives poa <= 1");
    if (m >= 5) c.expect(partial > 1.05, "omitting a center gives poa <= 1.05");
    summary += fmt(" m=%.0f:poa=%.3f,omit1=%.4f", md, poa, partial);
  }
  return c.done(summary.substr(1));
}

Outcome solver_cross_validation() {
  Checker c;
  std::vector<GameInstance> instances{testing::fix_a(), testing::fix_cycle3(), testing::fix_star(3),
                                      testing::fix_star(7), testing::fix_path(1.44, 2).instance,
                                      testing::fix_path(1.05, 30).instance, d_regular_complete(3, std::vector<double>{1, 0, 0, 0})};
  Rng rng(1010);
  while (instances.size() < 7 + 200) {
    GameInstance g = testing::random_instance(rng, 1 + rng() % 12, 0.3, false);
    if (validate(g).ok()) instances.push_back(std::move(g));
  }
  double worst_diff = 0.0, worst_grad = 0.0;
  for (const GameInstance& g : instances) {
    DynamicsConfig config;
    config.tolerance = 1e-11;
    const auto direct = nash_direct(g).profile;
    const auto dyn = nash_dynamics(g, config).profile;
    for (NodeId i = 0; i < g.size(); ++i) {
      worst_diff = std::max(worst_diff, std::abs(direct[i] - dyn[i]));
      c.expect(std::abs(direct[i] - dyn[i]) <= 1e-8, "direct and dynamics disagree");
    }
    const auto grad = social_cost_gradient(g, social_optimum(g));
    double norm = 0.0;
    for (double x : grad) norm = std::max(norm, std::abs(x));
    worst_grad = std::max(worst_grad, norm / g.opinion_scale());
    c.expect(norm <= 1e-9 * g.opinion_scale(), "optimum gradient too large");
  }
  return c.done(fmt("%.0f instances, max |direct-dynamics|=%.2e, max grad/scale=%.2e",
                    static_cast<double>(instances.size()), worst_diff, worst_grad));
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"two-node exact PoA", two_node_exact},
      {"directed-cycle bound", directed_cycle_bound},
      {"d-regular bound", d_regular_bound},
      {"condition bound as a property", condition_bound_property},
      {"tree closed forms", tree_closed_forms},
      {"unbounded PoA growth", unbounded_growth},
      {"small-violation regime", small_violation_regime},
      {"smoothness identities", smoothness_identities},
      {"star-farm lower bound", star_farm_lower_bound},
      {"solver cross-validation", solver_cross_validation},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[k].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !out.pass;
    std::printf("%s AC%zu %s (%.2fs): %s\n", out.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, secs,
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
