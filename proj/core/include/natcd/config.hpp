#pragma once

#include <optional>
#include <string>

namespace natcd {

/// Coordinate update rule: exact generalized soft-thresholding, the quadratic
/// approximation step with the exact threshold, or the standard rule with the
/// linearised threshold.
enum class UpdateRule { kExact, kLinearApprox, kGlmnetStyle };

const char* to_string(UpdateRule rule);
std::optional<UpdateRule> update_rule_from_string(const std::string& name);

struct FitConfig {
  double eps = 1e-6;               // full-cycle max coefficient change threshold
  long max_outer_cycles = 10000;   // complete cycles
  long max_active_cycles = 100000; // active-set cycles per inner loop
  UpdateRule update_rule = UpdateRule::kLinearApprox;
  double root_tol = 1e-7;          // scalar root-finding tolerance

  /// root_tol follows eps down so root error never dominates the
  /// convergence test.
  static FitConfig with_eps(double eps);

  /// Throws std::invalid_argument when eps <= 0, root_tol <= 0, limits < 1,
  /// or root_tol > eps/10.
  void validate() const;
};

}  // namespace natcd
