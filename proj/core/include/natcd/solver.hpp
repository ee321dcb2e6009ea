#pragma once

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "natcd/cache.hpp"
#include "natcd/config.hpp"
#include "natcd/dataset.hpp"
#include "natcd/derivatives.hpp"
#include "natcd/family.hpp"
#include "natcd/penalty.hpp"
#include "natcd/result.hpp"

namespace natcd {

/// Bracket for a monotone nondecreasing scalar function with
/// f(lo) <= 0 <= f(hi).
struct RootBracket {
  double lo;
  double hi;
};

/// Safeguarded Newton on a bracketed monotone function. F maps a point to
/// {value, derivative}. Newton steps are taken while they stay inside the
/// current bracket, bisection otherwise; stops at |f| < root_tol or bracket
/// width < root_tol.
template <class F>
double solve_root(RootBracket bracket, F&& f, double root_tol) {
  double lo = bracket.lo;
  double hi = bracket.hi;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const Deriv12 d = f(x);
    if (std::abs(d.first) < root_tol) return x;
    if (d.first > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    if (hi - lo < root_tol) return 0.5 * (lo + hi);
    double next = (d.second > 0.0) ? x - d.first / d.second : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  return x;
}

/// Mutable state of one coordinate descent run. The cache owns the
/// coefficient vector; `active` mirrors beta_j != 0.
struct FitState {
  FitState(const Dataset& data, std::vector<double> beta0);

  PredictorCache cache;
  std::vector<char> active;
  double last_cycle_max_delta = std::numeric_limits<double>::infinity();
  long outer_cycles = 0;
  long coordinate_updates = 0;

  std::span<const double> beta() const { return cache.beta(); }
};

/// Per-update hook. Receives the coordinate, the move, and both threshold
/// decisions (the exact rule's |w - w0| > mu and the approximate rule's
/// |w - w0~| > mu evaluated at the pre-update coefficient).
class UpdateObserver {
 public:
  virtual ~UpdateObserver() = default;
  virtual void on_update(int j, double beta_old, double beta_new, bool exact_threshold_active,
                         bool approx_threshold_active) = 0;
};

/// Exact generalized soft-thresholding update: beta_j = 0 when
/// |w_j - U_j'(0)| <= mu_j, otherwise the root of
/// U_j'(b) - w_j + sgn(w_j - w0_j) mu_j. Returns |delta| applied.
double coordinate_update_exact(FitState& state, const Dataset& data, const FamilyKernel& family,
                               const PenaltySpec& penalty, const FitConfig& config, int j,
                               UpdateObserver* observer = nullptr);

/// Quadratic-approximation step with the exact threshold. The raw step is
/// backtracked (and in the last resort replaced by the exact root) whenever
/// it would increase the one-coordinate penalised objective, which keeps
/// every update a descent step on all families.
double coordinate_update_linear(FitState& state, const Dataset& data, const FamilyKernel& family,
                                const PenaltySpec& penalty, const FitConfig& config, int j,
                                UpdateObserver* observer = nullptr);

/// Standard rule: same step as the linear update but with the linearised
/// threshold |w_j - U_j'(b) + U_j''(b) b| > mu_j. Implemented literally, for
/// comparison experiments; no descent guard.
double coordinate_update_glmnet(FitState& state, const Dataset& data, const FamilyKernel& family,
                                const PenaltySpec& penalty, const FitConfig& config, int j,
                                UpdateObserver* observer = nullptr);

/// Full solve: a complete cycle, then active-set cycles until stable,
/// repeated until a complete cycle moves every coefficient by less than eps.
/// A result with converged = false is returned when the cycle limits are
/// exhausted; bracketing failures surface as DivergenceError.
FitResult fit(const Dataset& data, const FamilyKernel& family, const PenaltySpec& penalty,
              const FitConfig& config, std::span<const double> beta_init,
              UpdateObserver* observer = nullptr);

/// Cold start at beta = 0.
FitResult fit(const Dataset& data, const FamilyKernel& family, const PenaltySpec& penalty,
              const FitConfig& config);

}  // namespace natcd
