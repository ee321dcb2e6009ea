#pragma once

#include <functional>
#include <span>
#include <vector>

#include "natcd/config.hpp"
#include "natcd/dataset.hpp"
#include "natcd/family.hpp"
#include "natcd/penalty.hpp"
#include "natcd/solver.hpp"

namespace natcd {

/// Optimality certificate for a candidate solution of the box-constrained
/// dual picture. u_hat is the gradient of the smooth part at beta;
/// at an exact optimum
///   |u_hat_j - w_j| <= mu_j                      (box)
///   u_hat_j = w_j - sgn(beta_j) mu_j  for beta_j != 0   (complementarity)
/// and all three violations below are zero. Values are stored as computed,
/// never clamped.
struct DualCertificate {
  std::vector<double> u_hat;
  double box_violation = 0.0;
  double complementarity_violation = 0.0;
  double stationarity_violation = 0.0;

  bool passes(double tau) const {
    return box_violation < tau && complementarity_violation < tau &&
           stationarity_violation < tau;
  }
};

DualCertificate certify(const Dataset& data, const FamilyKernel& family,
                        const PenaltySpec& penalty, std::span<const double> beta);

/// Certificate tolerance tied to the fit's own convergence setting.
inline double certificate_tolerance(const FitConfig& config) { return 100.0 * config.eps; }

/// Append-only log of per-update threshold decisions: the exact rule's
/// |w - w0| > mu against the linearised |w - w0~| > mu.
struct ThresholdAudit {
  struct Record {
    int j;
    bool exact_active;
    bool approx_active;
    bool agree;
  };
  std::vector<Record> records;

  void append(int j, bool exact_active, bool approx_active) {
    records.push_back({j, exact_active, approx_active, exact_active == approx_active});
  }
};

struct AuditSummary {
  long total = 0;
  long agreements = 0;
  long disagreements = 0;
};

/// A disagreement is not an error (the equivalence is only guaranteed at
/// scalar optima); it is surfaced for analysis.
AuditSummary threshold_audit_check(const ThresholdAudit& audit);

/// Observer that fills a ThresholdAudit during a fit.
class AuditingObserver final : public UpdateObserver {
 public:
  void on_update(int j, double, double, bool exact_threshold_active,
                 bool approx_threshold_active) override {
    audit_.append(j, exact_threshold_active, approx_threshold_active);
  }

  const ThresholdAudit& audit() const { return audit_; }

 private:
  ThresholdAudit audit_;
};

/// Re-audits every coordinate of a candidate solution in place: both
/// threshold decisions evaluated at the given beta.
ThresholdAudit audit_fixed_point(const Dataset& data, const FamilyKernel& family,
                                 const PenaltySpec& penalty, std::span<const double> beta);

/// Scalar form of the threshold-equivalence statement, for a verified scalar
/// optimum beta_hat of u(b) - w b + mu |b|: true iff
/// (|w - u'(0)| > mu) == (|w - u'(b) + u''(b) b| > mu).
bool scalar_prop1_check(const std::function<double(double)>& u_first,
                        const std::function<double(double)>& u_second, double w, double mu,
                        double beta_hat);

}  // namespace natcd
