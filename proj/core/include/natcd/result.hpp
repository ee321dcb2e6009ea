#pragma once

#include <limits>
#include <vector>

namespace natcd {

struct FitResult {
  std::vector<double> beta;
  double objective = std::numeric_limits<double>::quiet_NaN();
  /// Gradient of the smooth part at beta: u_hat of the dual box problem.
  std::vector<double> dual_u;
  long outer_cycles = 0;
  long coordinate_updates = 0;
  bool converged = false;
};

}  // namespace natcd
