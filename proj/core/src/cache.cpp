#include "natcd/cache.hpp"

#include <stdexcept>

#include "natcd/numerics.hpp"

namespace natcd {

PredictorCache::PredictorCache(const Dataset& data, std::vector<double> beta)
    : beta_(std::move(beta)), eta_(static_cast<std::size_t>(data.n()), 0.0) {
  if (beta_.size() != static_cast<std::size_t>(data.p())) {
    throw std::invalid_argument("PredictorCache: beta length does not match p");
  }
  if (!all_finite(beta_)) {
    throw std::invalid_argument("PredictorCache: non-finite coefficient");
  }
  refresh_period_ = 2 * data.p();
  refresh(data);
}

void PredictorCache::shift(const Dataset& data, int j, double delta) {
  beta_[j] += delta;
  const auto xj = data.column(j);
  const int n = data.n();
  for (int i = 0; i < n; ++i) eta_[i] += xj[i] * delta;
  if (++refresh_counter_ >= refresh_period_) refresh(data);
}

void PredictorCache::refresh(const Dataset& data) {
  const int n = data.n();
  const int p = data.p();
  std::fill(eta_.begin(), eta_.end(), 0.0);
  for (int j = 0; j < p; ++j) {
    const double b = beta_[j];
    if (b == 0.0) continue;
    const auto xj = data.column(j);
    for (int i = 0; i < n; ++i) eta_[i] += xj[i] * b;
  }
  refresh_counter_ = 0;
}

}  // namespace natcd
