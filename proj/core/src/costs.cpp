#include "ofg/costs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ofg {

namespace {

void check_length(const GameInstance& instance, std::span<const double> z) {
  if (z.size() != instance.size()) throw std::invalid_argument("profile length does not match node count");
}

void check_index(const GameInstance& instance, NodeId i) {
  if (i >= instance.size()) throw std::out_of_range("node index out of range");
}

double cost_unchecked(const GameInstance& instance, std::span<const double> z, NodeId i) {
  const double anchor = z[i] - instance.internal_opinion(i);
  double c = instance.self_weight(i) * anchor * anchor;
  for (const Neighbor& nb : instance.influencers(i)) {
    const double d = z[i] - z[nb.node];
    c += nb.weight * d * d;
  }
  return c;
}

double own_derivative_unchecked(const GameInstance& instance, std::span<const double> z, NodeId i) {
  double g = instance.self_weight(i) * (z[i] - instance.internal_opinion(i));
  for (const Neighbor& nb : instance.influencers(i)) g += nb.weight * (z[i] - z[nb.node]);
  return 2.0 * g;
}

double best_response_unchecked(const GameInstance& instance, std::span<const double> z, NodeId i) {
  double num = instance.self_weight(i) * instance.internal_opinion(i);
  for (const Neighbor& nb : instance.influencers(i)) num += nb.weight * z[nb.node];
  return num / (instance.self_weight(i) + instance.influence_received(i));
}

}  // namespace

double individual_cost(const GameInstance& instance, std::span<const double> z, NodeId i) {
  check_length(instance, z);
  check_index(instance, i);
  return cost_unchecked(instance, z, i);
}

double social_cost(const GameInstance& instance, std::span<const double> z) {
  check_length(instance, z);
  double total = 0.0;
  for (NodeId i = 0; i < instance.size(); ++i) total += cost_unchecked(instance, z, i);
  return total;
}

double own_cost_derivative(const GameInstance& instance, std::span<const double> z, NodeId i) {
  check_length(instance, z);
  check_index(instance, i);
  return own_derivative_unchecked(instance, z, i);
}

std::vector<double> social_cost_gradient(const GameInstance& instance, std::span<const double> z) {
  check_length(instance, z);
  std::vector<double> g(instance.size());
  for (NodeId i = 0; i < instance.size(); ++i) {
    double v = own_derivative_unchecked(instance, z, i);
    for (const Neighbor& nb : instance.influenced(i)) v -= 2.0 * nb.weight * (z[nb.node] - z[i]);
    g[i] = v;
  }
  return g;
}

double best_response(const GameInstance& instance, std::span<const double> z, NodeId i) {
  check_length(instance, z);
  check_index(instance, i);
  return best_response_unchecked(instance, z, i);
}

double fixed_point_residual(const GameInstance& instance, std::span<const double> z) {
  check_length(instance, z);
  double r = 0.0;
  for (NodeId i = 0; i < instance.size(); ++i)
    r = std::max(r, std::abs(z[i] - best_response_unchecked(instance, z, i)));
  return r;
}

}  // namespace ofg
