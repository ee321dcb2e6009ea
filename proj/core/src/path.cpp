#include "natcd/path.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "natcd/errors.hpp"
#include "natcd/penalty.hpp"
#include "natcd/solver.hpp"

namespace natcd {

const char* to_string(StartMode mode) {
  return mode == StartMode::kCold ? "cold" : "warm";
}

PathSpec make_path(const Dataset& data, int m) {
  if (m < 2) throw std::invalid_argument("make_path: m must be >= 2");
  if (data.p() < 2) throw std::invalid_argument("make_path: requires p >= 2");

  double mu_max = 0.0;
  for (int j = 1; j < data.p(); ++j) mu_max = std::fmax(mu_max, std::abs(data.w(j)));
  if (mu_max == 0.0) {
    throw DegeneratePathError("make_path: all penalised w_j are zero");
  }

  PathSpec spec;
  spec.m = m;
  spec.mu_max = mu_max;
  spec.values.resize(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    spec.values[k] = mu_max / std::pow(static_cast<double>(m),
                                       static_cast<double>(k) / (m - 1));
  }
  return spec;
}

namespace {

PathEntry run_single(const Dataset& data, const FamilyKernel& family, double lambda, double mu,
                     const FitConfig& config, std::span<const double> beta_init) {
  PathEntry entry;
  entry.mu = mu;
  const auto penalty = PenaltySpec::uniform(data.p(), mu, lambda);
  const auto start = std::chrono::steady_clock::now();
  try {
    entry.result = fit(data, family, penalty, config, beta_init);
  } catch (const std::exception& e) {
    entry.failed = true;
    entry.error = e.what();
  }
  entry.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return entry;
}

}  // namespace

PathResult run_path(const Dataset& data, const FamilyKernel& family, double lambda,
                    const PathSpec& path, const FitConfig& config, StartMode start_mode,
                    int threads) {
  config.validate();
  if (path.values.empty()) throw std::invalid_argument("run_path: empty path");

  PathResult out;
  out.start_mode = start_mode;
  out.entries.resize(path.values.size());

  const std::vector<double> zeros(static_cast<std::size_t>(data.p()), 0.0);

  if (start_mode == StartMode::kWarm) {
    std::vector<double> seed = zeros;
    for (std::size_t k = 0; k < path.values.size(); ++k) {
      out.entries[k] = run_single(data, family, lambda, path.values[k], config, seed);
      if (!out.entries[k].failed) seed = out.entries[k].result.beta;
    }
    return out;
  }

  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(path.values.size())));
  if (workers == 1) {
    for (std::size_t k = 0; k < path.values.size(); ++k) {
      out.entries[k] = run_single(data, family, lambda, path.values[k], config, zeros);
    }
    return out;
  }

  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t k = cursor.fetch_add(1);
      if (k >= path.values.size()) break;
      out.entries[k] = run_single(data, family, lambda, path.values[k], config, zeros);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

int model_size(const FitResult& result, double threshold) {
  if (!(threshold > 0.0)) throw std::invalid_argument("model_size: threshold must be > 0");
  int count = 0;
  for (std::size_t j = 1; j < result.beta.size(); ++j) {
    if (std::abs(result.beta[j]) > threshold) ++count;
  }
  return count;
}

}  // namespace natcd
