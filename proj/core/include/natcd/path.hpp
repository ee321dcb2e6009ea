#pragma once

#include <string>
#include <vector>

#include "natcd/config.hpp"
#include "natcd/dataset.hpp"
#include "natcd/family.hpp"
#include "natcd/result.hpp"

namespace natcd {

/// Geometric grid of l1 penalties
///   values[k] = mu_max / m^(k/(m-1)),  k = 0..m-1,
/// with mu_max = max_{j>=1} |w_j|, so values.front() == mu_max (the smallest
/// intercept-only penalty) and values.back() == mu_max / m.
struct PathSpec {
  int m = 0;
  double mu_max = 0.0;
  std::vector<double> values;
};

/// Throws DegeneratePathError when every penalised w_j is zero.
PathSpec make_path(const Dataset& data, int m = 100);

enum class StartMode { kCold, kWarm };

const char* to_string(StartMode mode);

struct PathEntry {
  double mu = 0.0;
  FitResult result;
  double seconds = 0.0;
  bool failed = false;
  std::string error;
};

struct PathResult {
  StartMode start_mode = StartMode::kCold;
  std::vector<PathEntry> entries;
};

/// Runs one fit per grid value. Warm mode threads each solution into the
/// next initialisation (a failed fit does not poison the seed: the last
/// converged solution carries over). Cold mode initialises every fit at zero;
/// those fits are independent and run on `threads` workers when threads > 1.
/// Per-fit errors are captured in the entry, never aborting the path.
PathResult run_path(const Dataset& data, const FamilyKernel& family, double lambda,
                    const PathSpec& path, const FitConfig& config, StartMode start_mode,
                    int threads = 1);

/// Number of penalised coefficients with |beta_j| > threshold.
int model_size(const FitResult& result, double threshold = 1e-3);

}  // namespace natcd
