#include "natcd/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "natcd/cache.hpp"
#include "natcd/derivatives.hpp"
#include "natcd/numerics.hpp"

namespace natcd {

DualCertificate certify(const Dataset& data, const FamilyKernel& family,
                        const PenaltySpec& penalty, std::span<const double> beta) {
  const int p = data.p();
  if (beta.size() != static_cast<std::size_t>(p)) {
    throw std::invalid_argument("certify: beta length does not match p");
  }
  if (!all_finite(beta)) throw std::invalid_argument("certify: non-finite coefficient");

  PredictorCache cache(data, std::vector<double>(beta.begin(), beta.end()));
  DualCertificate cert;
  cert.u_hat = smooth_gradient(data, family, cache, penalty.lambda());

  for (int j = 0; j < p; ++j) {
    const double residual = cert.u_hat[j] - data.w(j);
    const double mu_j = penalty.mu(j);
    cert.box_violation = std::fmax(cert.box_violation, std::abs(residual) - mu_j);
    if (beta[j] != 0.0) {
      // active coordinates sit on the box boundary: u_hat = w - sgn(beta) mu
      const double target = data.w(j) - (beta[j] > 0.0 ? mu_j : -mu_j);
      cert.complementarity_violation =
          std::fmax(cert.complementarity_violation, std::abs(cert.u_hat[j] - target));
    } else if (j > 0) {
      cert.stationarity_violation =
          std::fmax(cert.stationarity_violation, std::abs(residual) - mu_j);
    }
  }
  cert.box_violation = std::fmax(cert.box_violation, 0.0);
  cert.stationarity_violation = std::fmax(cert.stationarity_violation, 0.0);
  return cert;
}

AuditSummary threshold_audit_check(const ThresholdAudit& audit) {
  AuditSummary summary;
  summary.total = static_cast<long>(audit.records.size());
  for (const auto& r : audit.records) {
    if (r.agree) {
      ++summary.agreements;
    } else {
      ++summary.disagreements;
    }
  }
  return summary;
}

ThresholdAudit audit_fixed_point(const Dataset& data, const FamilyKernel& family,
                                 const PenaltySpec& penalty, std::span<const double> beta) {
  const int p = data.p();
  if (beta.size() != static_cast<std::size_t>(p)) {
    throw std::invalid_argument("audit_fixed_point: beta length does not match p");
  }
  PredictorCache cache(data, std::vector<double>(beta.begin(), beta.end()));
  ThresholdAudit audit;
  for (int j = 0; j < p; ++j) {
    const double w_j = data.w(j);
    const double mu_j = penalty.mu(j);
    const double w0 = w0_j(data, family, cache, j);
    const Deriv12 d = u_deriv12_j(data, family, cache, j, beta[j], penalty.lambda());
    const bool exact_active = std::abs(w_j - w0) > mu_j;
    const bool approx_active = std::abs(w_j - (d.first - d.second * beta[j])) > mu_j;
    audit.append(j, exact_active, approx_active);
  }
  return audit;
}

bool scalar_prop1_check(const std::function<double(double)>& u_first,
                        const std::function<double(double)>& u_second, double w, double mu,
                        double beta_hat) {
  const double w0 = u_first(0.0);
  const double w0_tilde = u_first(beta_hat) - u_second(beta_hat) * beta_hat;
  return (std::abs(w - w0) > mu) == (std::abs(w - w0_tilde) > mu);
}

}  // namespace natcd
