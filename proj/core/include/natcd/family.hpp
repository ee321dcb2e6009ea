#pragma once

#include <cmath>
#include <optional>
#include <string>

namespace natcd {

enum class FamilyId { kGaussian, kBinomial, kPoisson };

const char* to_string(FamilyId id);
std::optional<FamilyId> family_from_string(const std::string& name);

/// Curvature floor applied when A'' is used as an approximation denominator.
/// Extreme linear predictors make the binomial A'' underflow to zero, which
/// would break the quadratic-approximation step. Reported second derivatives
/// are never floored.
inline constexpr double kCurvatureFloor = 1e-10;

/// Log-partition function A of a canonical exponential family together with
/// its first two derivatives. A is convex, A' nondecreasing, A'' >= 0.
///
///   gaussian:  A(eta) = eta^2 / 2
///   binomial:  A(eta) = log(1 + e^eta)
///   poisson:   A(eta) = e^eta
///
/// Immutable and freely shareable across threads.
class FamilyKernel {
 public:
  static FamilyKernel gaussian() { return FamilyKernel(FamilyId::kGaussian); }
  static FamilyKernel binomial() { return FamilyKernel(FamilyId::kBinomial); }
  static FamilyKernel poisson() { return FamilyKernel(FamilyId::kPoisson); }
  static FamilyKernel from_id(FamilyId id) { return FamilyKernel(id); }

  FamilyId id() const { return id_; }

  double a(double eta) const {
    switch (id_) {
      case FamilyId::kGaussian: return 0.5 * eta * eta;
      case FamilyId::kBinomial: return softplus(eta);
      case FamilyId::kPoisson: return std::exp(eta);
    }
    return 0.0;
  }

  double a1(double eta) const {
    switch (id_) {
      case FamilyId::kGaussian: return eta;
      case FamilyId::kBinomial: return sigmoid(eta);
      case FamilyId::kPoisson: return std::exp(eta);
    }
    return 0.0;
  }

  double a2(double eta) const {
    switch (id_) {
      case FamilyId::kGaussian: return 1.0;
      case FamilyId::kBinomial: {
        // sigma(|eta|) * sigma(-|eta|) keeps precision when one factor is ~1
        const double s = sigmoid(-std::abs(eta));
        return (1.0 - s) * s;
      }
      case FamilyId::kPoisson: return std::exp(eta);
    }
    return 0.0;
  }

  struct Derivs {
    double first;
    double second;
  };

  Derivs a12(double eta) const {
    switch (id_) {
      case FamilyId::kGaussian: return {eta, 1.0};
      case FamilyId::kBinomial: {
        const double s = sigmoid(eta);
        const double sm = sigmoid(-std::abs(eta));
        return {s, (1.0 - sm) * sm};
      }
      case FamilyId::kPoisson: {
        const double e = std::exp(eta);
        return {e, e};
      }
    }
    return {0.0, 0.0};
  }

  /// Overflow-safe log(1 + e^eta) = max(eta, 0) + log1p(e^{-|eta|}).
  static double softplus(double eta) {
    return std::fmax(eta, 0.0) + std::log1p(std::exp(-std::abs(eta)));
  }

  static double sigmoid(double eta) {
    if (eta >= 0.0) {
      return 1.0 / (1.0 + std::exp(-eta));
    }
    const double e = std::exp(eta);
    return e / (1.0 + e);
  }

 private:
  explicit FamilyKernel(FamilyId id) : id_(id) {}
  FamilyId id_;
};

}  // namespace natcd
