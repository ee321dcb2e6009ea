#include "natcd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "natcd/errors.hpp"

namespace natcd {

namespace {

double soft_threshold(double v, double t) {
  if (v > t) return v - t;
  if (v < -t) return v + t;
  return 0.0;
}

/// Upper bound on the squared spectral norm: min(frobenius, l1 * linf).
double op_norm_sq_bound(const Matrix& x) {
  const int n = x.rows();
  const int p = x.cols();
  double frob = 0.0;
  std::vector<double> row_sums(static_cast<std::size_t>(n), 0.0);
  double col_max = 0.0;
  for (int j = 0; j < p; ++j) {
    const auto xj = x.col(j);
    double col_sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double a = std::abs(xj[i]);
      col_sum += a;
      row_sums[i] += a;
      frob += a * a;
    }
    col_max = std::max(col_max, col_sum);
  }
  double row_max = 0.0;
  for (double r : row_sums) row_max = std::max(row_max, r);
  return std::min(frob, col_max * row_max);
}

struct ValueGrad {
  double value;
  std::vector<double> grad;
};

/// Smooth part F(b) = (1/n) sum_i A(eta_i) + lambda sum_{j>=1} b_j^2
/// - linear^T b, with its gradient, in one fused pass.
ValueGrad smooth_value_grad(const Matrix& x, std::span<const double> linear,
                            const FamilyKernel& family, double lambda,
                            std::span<const double> beta, std::vector<double>& eta_buf,
                            std::vector<double>& mean_buf) {
  const int n = x.rows();
  const int p = x.cols();
  std::fill(eta_buf.begin(), eta_buf.end(), 0.0);
  for (int j = 0; j < p; ++j) {
    const double b = beta[j];
    if (b == 0.0) continue;
    const auto xj = x.col(j);
    for (int i = 0; i < n; ++i) eta_buf[i] += xj[i] * b;
  }
  double value = 0.0;
  for (int i = 0; i < n; ++i) {
    value += family.a(eta_buf[i]);
    mean_buf[i] = family.a1(eta_buf[i]);
  }
  value /= n;

  ValueGrad out;
  out.grad.resize(static_cast<std::size_t>(p));
  for (int j = 0; j < p; ++j) {
    const auto xj = x.col(j);
    double g = 0.0;
    for (int i = 0; i < n; ++i) g += xj[i] * mean_buf[i];
    g /= n;
    g -= linear[j];
    if (j > 0) {
      g += 2.0 * lambda * beta[j];
      value += lambda * beta[j] * beta[j];
    }
    value -= linear[j] * beta[j];
    out.grad[j] = g;
  }
  if (!std::isfinite(value)) throw NumericError("prox_grad_solve: non-finite objective");
  out.value = value;
  return out;
}

double l1_part(const PenaltySpec& penalty, std::span<const double> beta) {
  double s = 0.0;
  for (int j = 0; j < penalty.size(); ++j) s += penalty.mu(j) * std::abs(beta[j]);
  return s;
}

}  // namespace

std::vector<double> prox_grad_solve(const Matrix& x, std::span<const double> linear,
                                    const FamilyKernel& family, const PenaltySpec& penalty,
                                    double tol, long max_iter) {
  const int n = x.rows();
  const int p = x.cols();
  if (linear.size() != static_cast<std::size_t>(p) || penalty.size() != p) {
    throw std::invalid_argument("prox_grad_solve: dimension mismatch");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("prox_grad_solve: tol must be > 0");

  const double lambda = penalty.lambda();
  const double norm_bound = op_norm_sq_bound(x);
  double lip;
  switch (family.id()) {
    case FamilyId::kGaussian: lip = norm_bound / n; break;
    case FamilyId::kBinomial: lip = norm_bound / (4.0 * n); break;
    // poisson curvature is unbounded; start from the beta = 0 estimate and
    // let backtracking raise it
    case FamilyId::kPoisson: lip = norm_bound / n; break;
    default: lip = norm_bound / n; break;
  }
  lip += 2.0 * lambda;
  lip = std::max(lip, 1e-12);

  std::vector<double> beta(static_cast<std::size_t>(p), 0.0);
  std::vector<double> beta_prev = beta;
  std::vector<double> y = beta;
  std::vector<double> candidate(static_cast<std::size_t>(p));
  std::vector<double> eta_buf(static_cast<std::size_t>(n));
  std::vector<double> mean_buf(static_cast<std::size_t>(n));

  double t_momentum = 1.0;
  double best_objective = std::numeric_limits<double>::infinity();

  for (long it = 0; it < max_iter; ++it) {
    const ValueGrad at_y = smooth_value_grad(x, linear, family, lambda, y, eta_buf, mean_buf);

    // backtracking on the quadratic upper bound
    ValueGrad at_candidate;
    while (true) {
      for (int j = 0; j < p; ++j) {
        candidate[j] = soft_threshold(y[j] - at_y.grad[j] / lip, penalty.mu(j) / lip);
      }
      at_candidate = smooth_value_grad(x, linear, family, lambda, candidate, eta_buf, mean_buf);
      double linearised = at_y.value;
      double sq = 0.0;
      for (int j = 0; j < p; ++j) {
        const double dj = candidate[j] - y[j];
        linearised += at_y.grad[j] * dj;
        sq += dj * dj;
      }
      if (at_candidate.value <= linearised + 0.5 * lip * sq + 1e-15 * std::abs(at_y.value)) break;
      lip *= 2.0;
      if (!std::isfinite(lip)) throw ConvergenceError("prox_grad_solve: step size collapsed");
    }

    // fixed-point residual at the candidate (gradient already in hand)
    double residual = 0.0;
    for (int j = 0; j < p; ++j) {
      const double mapped =
          soft_threshold(candidate[j] - at_candidate.grad[j] / lip, penalty.mu(j) / lip);
      residual = std::max(residual, std::abs(mapped - candidate[j]));
    }
    if (residual < tol) return candidate;

    const double objective = at_candidate.value + l1_part(penalty, candidate);
    beta_prev = beta;
    beta = candidate;
    if (objective > best_objective) {
      // momentum restart keeps the accelerated iteration monotone enough
      t_momentum = 1.0;
      y = beta;
    } else {
      best_objective = objective;
      const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_momentum * t_momentum));
      const double mix = (t_momentum - 1.0) / t_next;
      for (int j = 0; j < p; ++j) y[j] = beta[j] + mix * (beta[j] - beta_prev[j]);
      t_momentum = t_next;
    }
  }
  throw ConvergenceError("prox_grad_solve: iteration cap exceeded (max_iter = " +
                         std::to_string(max_iter) + ")");
}

std::vector<double> ista_solve(const Dataset& data, const FamilyKernel& family,
                               const PenaltySpec& penalty, double tol, long max_iter) {
  return prox_grad_solve(data.x(), data.w(), family, penalty, tol, max_iter);
}

double scalar_grid_solve(const std::function<double(double)>& u, double w, double mu,
                         double bounds, double grid_tol) {
  if (!(grid_tol > 0.0)) throw std::invalid_argument("scalar_grid_solve: grid_tol must be > 0");
  auto g = [&](double b) { return u(b) - w * b + mu * std::abs(b); };

  // expand each side until the objective stops improving outward
  double hi = std::fmax(1.0, std::abs(bounds));
  int doublings = 0;
  while (g(2.0 * hi) < g(hi)) {
    hi *= 2.0;
    if (++doublings > 200) throw DivergenceError("scalar_grid_solve: unbounded on the right");
  }
  double lo = -std::fmax(1.0, std::abs(bounds));
  doublings = 0;
  while (g(2.0 * lo) < g(lo)) {
    lo *= 2.0;
    if (++doublings > 200) throw DivergenceError("scalar_grid_solve: unbounded on the left");
  }

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto golden = [&](double a, double b) {
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double gc = g(c);
    double gd = g(d);
    while (b - a > grid_tol) {
      if (gc < gd) {
        b = d;
        d = c;
        gd = gc;
        c = b - inv_phi * (b - a);
        gc = g(c);
      } else {
        a = c;
        c = d;
        gc = gd;
        d = a + inv_phi * (b - a);
        gd = g(d);
      }
    }
    return 0.5 * (a + b);
  };

  const double left = golden(lo, 0.0);
  const double right = golden(0.0, hi);
  double best = 0.0;
  double best_value = g(0.0);
  if (g(left) < best_value) {
    best = left;
    best_value = g(left);
  }
  if (g(right) < best_value) {
    best = right;
  }
  return best;
}

}  // namespace natcd
