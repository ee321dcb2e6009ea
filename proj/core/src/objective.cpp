#include "natcd/objective.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "natcd/errors.hpp"
#include "natcd/numerics.hpp"

namespace natcd {

double score(const Dataset& data, const FamilyKernel& family, const PenaltySpec& penalty,
             std::span<const double> beta) {
  const int n = data.n();
  const int p = data.p();
  if (beta.size() != static_cast<std::size_t>(p)) {
    throw std::invalid_argument("score: beta length does not match p");
  }
  if (penalty.size() != p) {
    throw std::invalid_argument("score: penalty length does not match p");
  }
  if (!all_finite(beta)) {
    throw std::invalid_argument("score: non-finite coefficient");
  }

  std::vector<double> eta(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < p; ++j) {
    const double b = beta[j];
    if (b == 0.0) continue;
    const auto xj = data.column(j);
    for (int i = 0; i < n; ++i) eta[i] += xj[i] * b;
  }

  PairwiseAccumulator loglik;
  for (int i = 0; i < n; ++i) loglik.add(family.a(eta[i]));
  const double u = loglik.total() / n;

  PairwiseAccumulator linear;
  PairwiseAccumulator ridge;
  PairwiseAccumulator lasso;
  for (int j = 0; j < p; ++j) {
    linear.add(data.w(j) * beta[j]);
    if (j > 0) ridge.add(beta[j] * beta[j]);
    lasso.add(penalty.mu(j) * std::abs(beta[j]));
  }

  const double value = u - linear.total() + penalty.lambda() * ridge.total() + lasso.total();
  if (!std::isfinite(value)) {
    throw NumericError("score: objective is non-finite (overflow in A?)");
  }
  return value;
}

double relative_score_difference(std::span<const double> h1, std::span<const double> h2) {
  if (h1.size() != h2.size()) {
    throw std::invalid_argument("relative_score_difference: length mismatch");
  }
  if (h1.empty()) {
    throw std::invalid_argument("relative_score_difference: empty input");
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < h1.size(); ++k) {
    if (h1[k] == 0.0) {
      throw std::invalid_argument("relative_score_difference: h1 entry is zero");
    }
    worst = std::max(worst, (h1[k] - h2[k]) / h1[k]);
  }
  return worst;
}

}  // namespace natcd
