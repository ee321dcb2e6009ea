#pragma once

#include <functional>
#include <span>
#include <vector>

#include "natcd/dataset.hpp"
#include "natcd/family.hpp"
#include "natcd/penalty.hpp"

namespace natcd {

/// Accelerated proximal-gradient (ISTA/FISTA) reference solver for the same
/// penalised objective as the coordinate engine. Deliberately shares no
/// numerical machinery with the coordinate path beyond the family kernels:
/// plain dense passes, no predictor cache, no threshold logic.
///
/// Returns beta with proximal fixed-point residual
///   max_j |beta_j - prox(beta - grad/L)_j| < tol.
/// Throws ConvergenceError when max_iter is exhausted.
std::vector<double> ista_solve(const Dataset& data, const FamilyKernel& family,
                               const PenaltySpec& penalty, double tol, long max_iter = 200000);

/// Same solver with an explicit linear term replacing the dataset's w;
/// minimises (1/n) sum_i A(x_i^T b) + lambda sum_{j>=1} b_j^2 - linear^T b
/// + sum_j mu_j |b_j|. Used for dual-gap checks.
std::vector<double> prox_grad_solve(const Matrix& x, std::span<const double> linear,
                                    const FamilyKernel& family, const PenaltySpec& penalty,
                                    double tol, long max_iter = 200000);

/// Golden-section minimiser of u(b) - w b + mu |b|. The convex objective is
/// minimised over each sign region separately (brackets expanded outward from
/// +-max(1, |bounds|)) and compared against the kink at 0.
double scalar_grid_solve(const std::function<double(double)>& u, double w, double mu,
                         double bounds, double grid_tol);

}  // namespace natcd
