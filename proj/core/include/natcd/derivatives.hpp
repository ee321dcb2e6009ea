#pragma once

#include <span>
#include <vector>

#include "natcd/cache.hpp"
#include "natcd/dataset.hpp"
#include "natcd/family.hpp"

namespace natcd {

/// One-coordinate derivative machinery for the restriction
/// U_j(b) = U(beta_1, ..., b, ..., beta_p), with all other coordinates held
/// at the cache's current values. The l2 term (lambda excluded from the
/// intercept) is folded into U_j, so
///
///   U_j'(b)  = (1/n) sum_i x_ij A'(eta_i^(-j) + x_ij b) + 2 lambda b [j >= 1]
///   U_j''(b) = (1/n) sum_i x_ij^2 A''(eta_i^(-j) + x_ij b) + 2 lambda [j >= 1]
///
/// where eta_i^(-j) is the cached predictor with coordinate j removed.
/// All functions throw NumericError on non-finite intermediates.

double u_prime_j(const Dataset& data, const FamilyKernel& family, const PredictorCache& cache,
                 int j, double beta_j, double lambda);

double u_second_j(const Dataset& data, const FamilyKernel& family, const PredictorCache& cache,
                  int j, double beta_j, double lambda);

struct Deriv12 {
  double first;
  double second;
};

/// Fused U_j' and U_j'' in one pass over the samples.
Deriv12 u_deriv12_j(const Dataset& data, const FamilyKernel& family, const PredictorCache& cache,
                    int j, double beta_j, double lambda);

/// w0_j = U_j'(0). The l2 term vanishes at 0, so lambda does not enter.
double w0_j(const Dataset& data, const FamilyKernel& family, const PredictorCache& cache, int j);

/// U_j value up to a constant along the slice: (1/n) sum_i A(.) plus the
/// coordinate's own l2 contribution. Used for line-search comparisons.
double u_value_j(const Dataset& data, const FamilyKernel& family, const PredictorCache& cache,
                 int j, double beta_j, double lambda);

/// Gradient of U + lambda * sum_{j>=1} beta_j^2 at the cache's beta: the dual
/// vector u_hat of the box formulation.
std::vector<double> smooth_gradient(const Dataset& data, const FamilyKernel& family,
                                    const PredictorCache& cache, double lambda);

}  // namespace natcd
