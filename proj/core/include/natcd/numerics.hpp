#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace natcd {

/// Streaming pairwise (binary-counter) summation.
///
/// partial_[k] holds the sum of one block of 2^k consecutive terms; adding a
/// term merges completed blocks bottom-up, so the reduction tree is a fixed
/// function of the number of terms and the insertion order. Two runs over the
/// same sequence produce bit-identical totals.
class PairwiseAccumulator {
 public:
  void add(double x) {
    std::uint64_t mask = count_;
    int level = 0;
    while (mask & 1u) {
      x += partial_[level];
      mask >>= 1;
      ++level;
    }
    partial_[level] = x;
    ++count_;
  }

  double total() const {
    double sum = 0.0;
    std::uint64_t mask = count_;
    int level = 0;
    while (mask) {
      if (mask & 1u) sum += partial_[level];
      mask >>= 1;
      ++level;
    }
    return sum;
  }

  std::uint64_t count() const { return count_; }

 private:
  std::array<double, 64> partial_{};
  std::uint64_t count_ = 0;
};

double pairwise_sum(std::span<const double> values);

/// Exactly rounded summation (Shewchuk expansion, as in Python's fsum).
/// The result is the true real sum rounded once, so it does not depend on
/// the order of the terms.
class ExactAccumulator {
 public:
  ExactAccumulator() { components_.reserve(16); }

  void add(double x);
  double total() const;

 private:
  std::vector<double> components_;  // non-overlapping, increasing magnitude
};

double exact_sum(std::span<const double> values);

bool all_finite(std::span<const double> values);

/// Sign with sign(0) == 0.
inline int sign(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace natcd
