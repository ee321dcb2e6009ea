#include "natcd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "natcd/errors.hpp"
#include "natcd/numerics.hpp"
#include "natcd/objective.hpp"

namespace natcd {

FitState::FitState(const Dataset& data, std::vector<double> beta0)
    : cache(data, std::move(beta0)), active(static_cast<std::size_t>(data.p()), 0) {
  for (int j = 0; j < data.p(); ++j) active[j] = cache.beta(j) != 0.0;
}

namespace {

double apply_update(FitState& state, const Dataset& data, int j, double next) {
  const double delta = next - state.cache.beta(j);
  if (delta != 0.0) state.cache.shift(data, j, delta);
  state.active[j] = state.cache.beta(j) != 0.0;
  ++state.coordinate_updates;
  return std::abs(delta);
}

/// Expands [center - s, center + s], s = max(1, |center|), doubling the step
/// on whichever side still has the wrong sign. Monotone f only.
template <class F>
RootBracket expand_bracket(F&& f, double center) {
  double step = std::fmax(1.0, std::abs(center));
  double lo = center - step;
  double hi = center + step;
  double step_lo = step;
  double step_hi = step;
  int doublings = 0;
  while (f(lo).first > 0.0) {
    if (++doublings > 200) {
      throw DivergenceError("root bracketing failed after 200 doublings (separated data?)");
    }
    step_lo *= 2.0;
    lo -= step_lo;
  }
  doublings = 0;
  while (f(hi).first < 0.0) {
    if (++doublings > 200) {
      throw DivergenceError("root bracketing failed after 200 doublings (separated data?)");
    }
    step_hi *= 2.0;
    hi += step_hi;
  }
  return {lo, hi};
}

double solve_exact_root(const FitState& state, const Dataset& data, const FamilyKernel& family,
                        const FitConfig& config, int j, double target, double lambda) {
  auto f = [&](double b) {
    Deriv12 d = u_deriv12_j(data, family, state.cache, j, b, lambda);
    return Deriv12{d.first - target, d.second};
  };
  const RootBracket bracket = expand_bracket(f, state.cache.beta(j));
  return solve_root(bracket, f, config.root_tol);
}

/// One-coordinate penalised objective along the slice, up to a constant.
double slice_objective(const FitState& state, const Dataset& data, const FamilyKernel& family,
                       int j, double b, double w_j, double mu_j, double lambda) {
  return u_value_j(data, family, state.cache, j, b, lambda) - w_j * b + mu_j * std::abs(b);
}

}  // namespace

double coordinate_update_exact(FitState& state, const Dataset& data, const FamilyKernel& family,
                               const PenaltySpec& penalty, const FitConfig& config, int j,
                               UpdateObserver* observer) {
  const double w_j = data.w(j);
  const double mu_j = penalty.mu(j);
  const double lambda = penalty.lambda();
  const double current = state.cache.beta(j);

  const double w0 = w0_j(data, family, state.cache, j);
  const double gap = w_j - w0;
  const bool above = std::abs(gap) > mu_j;

  double next = 0.0;
  if (above) {
    const double sigma = gap > 0.0 ? 1.0 : -1.0;
    next = solve_exact_root(state, data, family, config, j, w_j - sigma * mu_j, lambda);
  }

  if (observer) {
    const Deriv12 d = u_deriv12_j(data, family, state.cache, j, current, lambda);
    const bool approx = std::abs(w_j - d.first + d.second * current) > mu_j;
    observer->on_update(j, current, next, above, approx);
  }
  return apply_update(state, data, j, next);
}

double coordinate_update_linear(FitState& state, const Dataset& data, const FamilyKernel& family,
                                const PenaltySpec& penalty, const FitConfig& config, int j,
                                UpdateObserver* observer) {
  const double w_j = data.w(j);
  const double mu_j = penalty.mu(j);
  const double lambda = penalty.lambda();
  const double current = state.cache.beta(j);

  const double w0 = w0_j(data, family, state.cache, j);
  const double gap = w_j - w0;
  const bool above = std::abs(gap) > mu_j;

  double next = 0.0;
  bool have_derivs = false;
  Deriv12 d{0.0, 0.0};
  if (above) {
    const double sigma = gap > 0.0 ? 1.0 : -1.0;
    d = u_deriv12_j(data, family, state.cache, j, current, lambda);
    have_derivs = true;
    const double denom = std::fmax(d.second, kCurvatureFloor);
    next = current + (w_j - sigma * mu_j - d.first) / denom;

    // The raw step solves the local quadratic model; on the non-quadratic
    // families it can overshoot past the slice minimum. Halve it until the
    // slice objective stops increasing.
    const double h0 = slice_objective(state, data, family, j, current, w_j, mu_j, lambda);
    const double slack = 1e-15 * (1.0 + std::abs(h0));
    bool accepted = false;
    for (int halvings = 0; halvings < 64; ++halvings) {
      if (slice_objective(state, data, family, j, next, w_j, mu_j, lambda) <= h0 + slack) {
        accepted = true;
        break;
      }
      next = current + 0.5 * (next - current);
    }
    if (!accepted) {
      next = solve_exact_root(state, data, family, config, j, w_j - sigma * mu_j, lambda);
    }
  }

  if (observer) {
    if (!have_derivs) d = u_deriv12_j(data, family, state.cache, j, current, lambda);
    const bool approx = std::abs(w_j - d.first + d.second * current) > mu_j;
    observer->on_update(j, current, next, above, approx);
  }
  return apply_update(state, data, j, next);
}

double coordinate_update_glmnet(FitState& state, const Dataset& data, const FamilyKernel& family,
                                const PenaltySpec& penalty, const FitConfig& config, int j,
                                UpdateObserver* observer) {
  (void)config;
  const double w_j = data.w(j);
  const double mu_j = penalty.mu(j);
  const double lambda = penalty.lambda();
  const double current = state.cache.beta(j);

  const Deriv12 d = u_deriv12_j(data, family, state.cache, j, current, lambda);
  const double linearised_gap = w_j - (d.first - d.second * current);
  const bool above = std::abs(linearised_gap) > mu_j;

  double next = 0.0;
  if (above) {
    const double sigma = linearised_gap > 0.0 ? 1.0 : -1.0;
    const double denom = std::fmax(d.second, kCurvatureFloor);
    next = current + (w_j - sigma * mu_j - d.first) / denom;
  }

  if (observer) {
    const double w0 = w0_j(data, family, state.cache, j);
    const bool exact = std::abs(w_j - w0) > mu_j;
    observer->on_update(j, current, next, exact, above);
  }
  return apply_update(state, data, j, next);
}

FitResult fit(const Dataset& data, const FamilyKernel& family, const PenaltySpec& penalty,
              const FitConfig& config, std::span<const double> beta_init,
              UpdateObserver* observer) {
  config.validate();
  const int p = data.p();
  if (penalty.size() != p) throw std::invalid_argument("fit: penalty length does not match p");
  if (beta_init.size() != static_cast<std::size_t>(p)) {
    throw std::invalid_argument("fit: beta_init length does not match p");
  }
  if (!all_finite(beta_init)) throw std::invalid_argument("fit: non-finite initial coefficient");

  FitState state(data, std::vector<double>(beta_init.begin(), beta_init.end()));

  auto update = [&](int j) -> double {
    switch (config.update_rule) {
      case UpdateRule::kExact:
        return coordinate_update_exact(state, data, family, penalty, config, j, observer);
      case UpdateRule::kLinearApprox:
        return coordinate_update_linear(state, data, family, penalty, config, j, observer);
      case UpdateRule::kGlmnetStyle:
        return coordinate_update_glmnet(state, data, family, penalty, config, j, observer);
    }
    return 0.0;
  };

  auto complete_cycle = [&]() {
    double worst = 0.0;
    for (int j = 0; j < p; ++j) worst = std::fmax(worst, update(j));
    ++state.outer_cycles;
    return worst;
  };
  auto active_cycle = [&]() {
    double worst = 0.0;
    for (int j = 0; j < p; ++j) {
      if (state.active[j]) worst = std::fmax(worst, update(j));
    }
    return worst;
  };

  double complete_delta = complete_cycle();
  bool active_ok = true;  // vacuous until the first inner loop runs
  bool converged = complete_delta < config.eps;
  while (!converged && state.outer_cycles < config.max_outer_cycles) {
    active_ok = false;
    for (long a = 0; a < config.max_active_cycles; ++a) {
      if (active_cycle() < config.eps) {
        active_ok = true;
        break;
      }
    }
    complete_delta = complete_cycle();
    converged = active_ok && complete_delta < config.eps;
  }
  state.last_cycle_max_delta = complete_delta;

  state.cache.refresh(data);
  FitResult result;
  result.beta.assign(state.cache.beta().begin(), state.cache.beta().end());
  result.converged = converged;
  result.outer_cycles = state.outer_cycles;
  result.coordinate_updates = state.coordinate_updates;
  result.objective = score(data, family, penalty, result.beta);
  result.dual_u = smooth_gradient(data, family, state.cache, penalty.lambda());
  return result;
}

FitResult fit(const Dataset& data, const FamilyKernel& family, const PenaltySpec& penalty,
              const FitConfig& config) {
  const std::vector<double> zeros(static_cast<std::size_t>(data.p()), 0.0);
  return fit(data, family, penalty, config, zeros);
}

}  // namespace natcd
