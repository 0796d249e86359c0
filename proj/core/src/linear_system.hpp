#pragma once

#include <span>
#include <vector>

#include "ofg/game.hpp"

namespace ofg::detail {

/// Solves the Nash stationarity equations
///
///   (w_ii + sum_j w_ij) z_i - sum_j w_ij z_j = w_ii s_i
///
/// for every node with free[i] set; other nodes keep profile[i] and move to
/// the right-hand side. The reduced matrix is strictly diagonally dominant
/// by rows when all w_ii > 0. Iterative refinement runs until every free
/// node's best-response gap is at most `tolerance`; SingularSystem is
/// thrown if the factorization fails or refinement cannot meet it.
///
/// Returns the full profile and writes the achieved gap to *residual.
OpinionProfile solve_stationarity(const GameInstance& instance,
                                  const std::vector<bool>& free,
                                  OpinionProfile profile,
                                  double tolerance,
                                  double* residual);

/// Solves grad C(o) = 0, i.e. M o = w_diag * s with
/// M = diag(w_ii) + Laplacian(w + w^T), which is symmetric positive
/// definite when all w_ii > 0. Refines until the gradient max-norm is at
/// most `tolerance`.
OpinionProfile solve_social_optimum(const GameInstance& instance, double tolerance,
                                    double* gradient_norm);

}  // namespace ofg::detail
