#include "natcd/penalty.hpp"

#include <cmath>
#include <stdexcept>

namespace natcd {

PenaltySpec::PenaltySpec(std::vector<double> mu, double lambda)
    : mu_(std::move(mu)), lambda_(lambda) {
  if (mu_.empty()) throw std::invalid_argument("PenaltySpec: empty mu");
  if (mu_[0] != 0.0) throw std::invalid_argument("PenaltySpec: intercept weight mu[0] must be 0");
  for (double m : mu_) {
    if (!(m >= 0.0) || !std::isfinite(m)) {
      throw std::invalid_argument("PenaltySpec: mu entries must be finite and >= 0");
    }
  }
  if (!(lambda_ >= 0.0) || !std::isfinite(lambda_)) {
    throw std::invalid_argument("PenaltySpec: lambda must be finite and >= 0");
  }
}

PenaltySpec PenaltySpec::uniform(int p, double mu, double lambda) {
  if (p < 1) throw std::invalid_argument("PenaltySpec: p must be >= 1");
  std::vector<double> weights(static_cast<std::size_t>(p), mu);
  weights[0] = 0.0;
  return PenaltySpec(std::move(weights), lambda);
}

}  // namespace natcd
