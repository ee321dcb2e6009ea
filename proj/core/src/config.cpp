#include "natcd/config.hpp"

#include <cmath>
#include <stdexcept>

namespace natcd {

const char* to_string(UpdateRule rule) {
  switch (rule) {
    case UpdateRule::kExact: return "exact";
    case UpdateRule::kLinearApprox: return "linear";
    case UpdateRule::kGlmnetStyle: return "glmnet";
  }
  return "?";
}

std::optional<UpdateRule> update_rule_from_string(const std::string& name) {
  if (name == "exact") return UpdateRule::kExact;
  if (name == "linear" || name == "linear-approx") return UpdateRule::kLinearApprox;
  if (name == "glmnet" || name == "glmnet-style") return UpdateRule::kGlmnetStyle;
  return std::nullopt;
}

FitConfig FitConfig::with_eps(double eps) {
  FitConfig config;
  config.eps = eps;
  config.root_tol = eps / 10.0;
  return config;
}

void FitConfig::validate() const {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("FitConfig: eps must be finite and > 0");
  }
  if (!(root_tol > 0.0) || !std::isfinite(root_tol)) {
    throw std::invalid_argument("FitConfig: root_tol must be finite and > 0");
  }
  if (root_tol > eps / 10.0) {
    throw std::invalid_argument("FitConfig: root_tol must be <= eps/10");
  }
  if (max_outer_cycles < 1 || max_active_cycles < 1) {
    throw std::invalid_argument("FitConfig: cycle limits must be >= 1");
  }
}

}  // namespace natcd
