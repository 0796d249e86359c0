#pragma once

#include <span>
#include <vector>

#include "ofg/game.hpp"

namespace ofg {

// Quadratic player costs
//
//   C_i(z) = w_ii (z_i - s_i)^2 + sum_{j != i} w_ij (z_i - z_j)^2
//
// and the social cost C(z) = sum_i C_i(z). None of these validate the
// instance; they only check the profile length and node index.

double individual_cost(const GameInstance& instance, std::span<const double> z, NodeId i);

double social_cost(const GameInstance& instance, std::span<const double> z);

/// Partial derivative of C_i with respect to the player's own opinion z_i:
/// 2 w_ii (z_i - s_i) + 2 sum_j w_ij (z_i - z_j).
double own_cost_derivative(const GameInstance& instance, std::span<const double> z, NodeId i);

/// Gradient of the social cost. Component i collects the derivative of
/// C_i and of every C_k that contains z_i:
///   2 w_ii (z_i - s_i) + 2 sum_j w_ij (z_i - z_j) - 2 sum_k w_ki (z_k - z_i).
std::vector<double> social_cost_gradient(const GameInstance& instance, std::span<const double> z);

/// Minimizer of C_i over z_i with the rest of z held fixed:
/// (w_ii s_i + sum_j w_ij z_j) / (w_ii + sum_j w_ij).
double best_response(const GameInstance& instance, std::span<const double> z, NodeId i);

/// max_i |z_i - best_response(z, i)|.
double fixed_point_residual(const GameInstance& instance, std::span<const double> z);

}  // namespace ofg
