#include "linear_system.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include "ofg/costs.hpp"

namespace ofg::detail {

namespace {

using SparseMatrix = Eigen::SparseMatrix<double>;
using Vector = Eigen::VectorXd;
using Triplet = Eigen::Triplet<double>;

constexpr int kMaxRefinements = 4;

}  // namespace

OpinionProfile solve_stationarity(const GameInstance& instance,
                                  const std::vector<bool>& free,
                                  OpinionProfile profile,
                                  double tolerance,
                                  double* residual) {
  const std::size_t n = instance.size();
  if (free.size() != n || profile.size() != n)
    throw std::invalid_argument("mask/profile length does not match node count");

  std::vector<Eigen::Index> reduced(n, -1);
  std::vector<NodeId> full;
  for (NodeId i = 0; i < n; ++i) {
    if (!free[i]) continue;
    reduced[i] = static_cast<Eigen::Index>(full.size());
    full.push_back(i);
  }
  const auto m = static_cast<Eigen::Index>(full.size());

  auto gap = [&](const OpinionProfile& z) {
    double g = 0.0;
    for (NodeId i : full) g = std::max(g, std::abs(z[i] - best_response(instance, z, i)));
    return g;
  };

  if (m == 0) {
    if (residual) *residual = 0.0;
    return profile;
  }

  std::vector<Triplet> triplets;
  triplets.reserve(full.size() + instance.edge_count());
  Vector rhs(m);
  for (Eigen::Index r = 0; r < m; ++r) {
    const NodeId i = full[static_cast<std::size_t>(r)];
    triplets.emplace_back(r, r, instance.self_weight(i) + instance.influence_received(i));
    double b = instance.self_weight(i) * instance.internal_opinion(i);
    for (const Neighbor& nb : instance.influencers(i)) {
      if (reduced[nb.node] >= 0)
        triplets.emplace_back(r, reduced[nb.node], -nb.weight);
      else
        b += nb.weight * profile[nb.node];
    }
    rhs[r] = b;
  }
  SparseMatrix a(m, m);
  a.setFromTriplets(triplets.begin(), triplets.end());
  a.makeCompressed();

  Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
  lu.compute(a);
  if (lu.info() != Eigen::Success) throw SingularSystem("stationarity system is singular: " + lu.lastErrorMessage());

  Vector x = lu.solve(rhs);
  if (lu.info() != Eigen::Success) throw SingularSystem("stationarity solve failed");

  auto scatter = [&](const Vector& v) {
    for (Eigen::Index r = 0; r < m; ++r) profile[full[static_cast<std::size_t>(r)]] = v[r];
  };
  scatter(x);
  double g = gap(profile);
  for (int step = 0; step < kMaxRefinements && !(g <= tolerance); ++step) {
    Vector correction = lu.solve(rhs - a * x);
    x += correction;
    scatter(x);
    g = gap(profile);
  }
  if (!(g <= tolerance))
    throw SingularSystem("stationarity solve missed the residual contract (gap " + std::to_string(g) + ")");
  if (residual) *residual = g;
  return profile;
}

OpinionProfile solve_social_optimum(const GameInstance& instance, double tolerance,
                                    double* gradient_norm) {
  const std::size_t n = instance.size();
  const auto m = static_cast<Eigen::Index>(n);

  // Setting each component of grad C to zero gives
  //   (w_ii + sum_j w_ij + sum_k w_ki) o_i - sum_j (w_ij + w_ji) o_j = w_ii s_i
  // so every stored edge (i, j, w) adds w to both diagonals and -w to both
  // off-diagonal slots.
  std::vector<Triplet> triplets;
  triplets.reserve(n + 4 * instance.edge_count());
  Vector rhs(m);
  for (NodeId i = 0; i < n; ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    triplets.emplace_back(r, r, instance.self_weight(i));
    rhs[r] = instance.self_weight(i) * instance.internal_opinion(i);
  }
  for (const Edge& e : instance.edges()) {
    const auto f = static_cast<Eigen::Index>(e.from);
    const auto t = static_cast<Eigen::Index>(e.to);
    triplets.emplace_back(f, f, e.weight);
    triplets.emplace_back(t, t, e.weight);
    triplets.emplace_back(f, t, -e.weight);
    triplets.emplace_back(t, f, -e.weight);
  }
  SparseMatrix a(m, m);
  a.setFromTriplets(triplets.begin(), triplets.end());
  a.makeCompressed();

  Eigen::SimplicialLDLT<SparseMatrix> ldlt;
  ldlt.compute(a);
  if (ldlt.info() != Eigen::Success) throw SingularSystem("optimality system is not positive definite");

  Vector x = ldlt.solve(rhs);
  OpinionProfile o(x.data(), x.data() + m);
  auto norm = [&](const OpinionProfile& z) {
    double g = 0.0;
    for (double v : social_cost_gradient(instance, z)) g = std::max(g, std::abs(v));
    return g;
  };
  double g = norm(o);
  for (int step = 0; step < kMaxRefinements && !(g <= tolerance); ++step) {
    x += ldlt.solve(rhs - a * x);
    o.assign(x.data(), x.data() + m);
    g = norm(o);
  }
  if (!(g <= tolerance))
    throw SingularSystem("optimality solve missed the gradient contract (norm " + std::to_string(g) + ")");
  if (gradient_norm) *gradient_norm = g;
  return o;
}

}  // namespace ofg::detail
