#pragma once

#include <span>
#include <vector>

namespace natcd {

/// Per-coefficient l1 weights plus a global l2 strength. The intercept weight
/// mu[0] is fixed to zero; the l2 term likewise skips the intercept.
class PenaltySpec {
 public:
  PenaltySpec(std::vector<double> mu, double lambda);

  /// All penalised coefficients share one l1 weight; mu[0] = 0.
  static PenaltySpec uniform(int p, double mu, double lambda = 0.0);

  std::span<const double> mu() const { return mu_; }
  double mu(int j) const { return mu_[j]; }
  double lambda() const { return lambda_; }
  int size() const { return static_cast<int>(mu_.size()); }

 private:
  std::vector<double> mu_;
  double lambda_;
};

}  // namespace natcd
