#pragma once

#include <span>

#include "natcd/dataset.hpp"
#include "natcd/family.hpp"
#include "natcd/penalty.hpp"

namespace natcd {

/// Penalised negative log-likelihood
///   H(beta) = U(beta) - w^T beta + lambda * sum_{j>=1} beta_j^2
///             + sum_j mu_j |beta_j|
/// with U(beta) = (1/n) sum_i A(x_i^T beta). Pure and deterministic; throws
/// NumericError when an intermediate overflows.
double score(const Dataset& data, const FamilyKernel& family, const PenaltySpec& penalty,
             std::span<const double> beta);

/// max_k (h1[k] - h2[k]) / h1[k]; throws on length mismatch or h1[k] == 0.
double relative_score_difference(std::span<const double> h1, std::span<const double> h2);

}  // namespace natcd
