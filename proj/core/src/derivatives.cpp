#include "natcd/derivatives.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "natcd/errors.hpp"
#include "natcd/numerics.hpp"

namespace natcd {

namespace {

void check_index(const Dataset& data, int j) {
  if (j < 0 || j >= data.p()) {
    throw std::invalid_argument("coordinate index " + std::to_string(j) + " out of range");
  }
}

[[noreturn]] void throw_nonfinite(const char* what, int j) {
  throw NumericError(std::string(what) + " is non-finite at coordinate " + std::to_string(j));
}

}  // namespace

double u_prime_j(const Dataset& data, const FamilyKernel& family, const PredictorCache& cache,
                 int j, double beta_j, double lambda) {
  check_index(data, j);
  const auto xj = data.column(j);
  const auto eta = cache.eta();
  const double shift = beta_j - cache.beta(j);
  const int n = data.n();
  PairwiseAccumulator acc;
  for (int i = 0; i < n; ++i) {
    acc.add(xj[i] * family.a1(eta[i] + xj[i] * shift));
  }
  double g = acc.total() / n;
  if (j > 0) g += 2.0 * lambda * beta_j;
  if (!std::isfinite(g)) throw_nonfinite("U_j'", j);
  return g;
}

double u_second_j(const Dataset& data, const FamilyKernel& family, const PredictorCache& cache,
                  int j, double beta_j, double lambda) {
  check_index(data, j);
  const auto xj = data.column(j);
  const auto eta = cache.eta();
  const double shift = beta_j - cache.beta(j);
  const int n = data.n();
  PairwiseAccumulator acc;
  for (int i = 0; i < n; ++i) {
    acc.add(xj[i] * xj[i] * family.a2(eta[i] + xj[i] * shift));
  }
  double h = acc.total() / n;
  if (j > 0) h += 2.0 * lambda;
  if (!std::isfinite(h)) throw_nonfinite("U_j''", j);
  return h;
}

Deriv12 u_deriv12_j(const Dataset& data, const FamilyKernel& family, const PredictorCache& cache,
                    int j, double beta_j, double lambda) {
  check_index(data, j);
  const auto xj = data.column(j);
  const auto eta = cache.eta();
  const double shift = beta_j - cache.beta(j);
  const int n = data.n();
  PairwiseAccumulator first;
  PairwiseAccumulator second;
  for (int i = 0; i < n; ++i) {
    const double x = xj[i];
    const auto d = family.a12(eta[i] + x * shift);
    first.add(x * d.first);
    second.add(x * x * d.second);
  }
  double g = first.total() / n;
  double h = second.total() / n;
  if (j > 0) {
    g += 2.0 * lambda * beta_j;
    h += 2.0 * lambda;
  }
  if (!std::isfinite(g) || !std::isfinite(h)) throw_nonfinite("U_j derivative", j);
  return {g, h};
}

double w0_j(const Dataset& data, const FamilyKernel& family, const PredictorCache& cache, int j) {
  return u_prime_j(data, family, cache, j, 0.0, 0.0);
}

double u_value_j(const Dataset& data, const FamilyKernel& family, const PredictorCache& cache,
                 int j, double beta_j, double lambda) {
  check_index(data, j);
  const auto xj = data.column(j);
  const auto eta = cache.eta();
  const double shift = beta_j - cache.beta(j);
  const int n = data.n();
  PairwiseAccumulator acc;
  for (int i = 0; i < n; ++i) {
    acc.add(family.a(eta[i] + xj[i] * shift));
  }
  double v = acc.total() / n;
  if (j > 0) v += lambda * beta_j * beta_j;
  if (!std::isfinite(v)) throw_nonfinite("U_j", j);
  return v;
}

std::vector<double> smooth_gradient(const Dataset& data, const FamilyKernel& family,
                                    const PredictorCache& cache, double lambda) {
  const int n = data.n();
  const int p = data.p();
  const auto eta = cache.eta();
  std::vector<double> mean_deriv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) mean_deriv[i] = family.a1(eta[i]);

  std::vector<double> grad(static_cast<std::size_t>(p));
  for (int j = 0; j < p; ++j) {
    const auto xj = data.column(j);
    PairwiseAccumulator acc;
    for (int i = 0; i < n; ++i) acc.add(xj[i] * mean_deriv[i]);
    double g = acc.total() / n;
    if (j > 0) g += 2.0 * lambda * cache.beta(j);
    if (!std::isfinite(g)) throw_nonfinite("gradient", j);
    grad[j] = g;
  }
  return grad;
}

}  // namespace natcd
