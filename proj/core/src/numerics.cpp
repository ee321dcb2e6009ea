#include "natcd/numerics.hpp"

namespace natcd {

double pairwise_sum(std::span<const double> values) {
  PairwiseAccumulator acc;
  for (double v : values) acc.add(v);
  return acc.total();
}

void ExactAccumulator::add(double x) {
  std::size_t kept = 0;
  for (double y : components_) {
    if (std::abs(x) < std::abs(y)) std::swap(x, y);
    const double hi = x + y;
    const double lo = y - (hi - x);
    if (lo != 0.0) components_[kept++] = lo;
    x = hi;
  }
  components_.resize(kept);
  components_.push_back(x);
}

double ExactAccumulator::total() const {
  // Sum from the largest component down, then apply a one-ulp correction when
  // the discarded tail straddles a rounding boundary (CPython's fsum).
  std::size_t n = components_.size();
  if (n == 0) return 0.0;
  double hi = components_[--n];
  double lo = 0.0;
  while (n > 0) {
    const double x = hi;
    const double y = components_[--n];
    hi = x + y;
    const double yr = hi - x;
    lo = y - yr;
    if (lo != 0.0) break;
  }
  if (n > 0 && ((lo < 0.0 && components_[n - 1] < 0.0) ||
                (lo > 0.0 && components_[n - 1] > 0.0))) {
    const double y = lo * 2.0;
    const double x = hi + y;
    if (y == x - hi) hi = x;
  }
  return hi;
}

double exact_sum(std::span<const double> values) {
  ExactAccumulator acc;
  for (double v : values) acc.add(v);
  return acc.total();
}

bool all_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace natcd
