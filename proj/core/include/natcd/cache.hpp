#pragma once

#include <span>
#include <vector>

#include "natcd/dataset.hpp"

namespace natcd {

/// Coefficient vector together with incrementally maintained linear
/// predictors eta_i = x_i^T beta. A full recomputation runs every
/// refresh_period = 2p shifts to bound floating-point drift.
///
/// Single-owner mutable state: use one cache per concurrent fit.
class PredictorCache {
 public:
  PredictorCache(const Dataset& data, std::vector<double> beta);

  /// Applies beta[j] += delta and eta_i += x_ij * delta for all i.
  void shift(const Dataset& data, int j, double delta);

  /// Recomputes eta from beta and resets the shift counter.
  void refresh(const Dataset& data);

  std::span<const double> eta() const { return eta_; }
  std::span<const double> beta() const { return beta_; }
  double beta(int j) const { return beta_[j]; }

  int refresh_counter() const { return refresh_counter_; }
  int refresh_period() const { return refresh_period_; }

 private:
  std::vector<double> beta_;
  std::vector<double> eta_;
  int refresh_counter_ = 0;
  int refresh_period_ = 1;
};

}  // namespace natcd
