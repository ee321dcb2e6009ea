#include "natcd/family.hpp"

namespace natcd {

const char* to_string(FamilyId id) {
  switch (id) {
    case FamilyId::kGaussian: return "gaussian";
    case FamilyId::kBinomial: return "binomial";
    case FamilyId::kPoisson: return "poisson";
  }
  return "?";
}

std::optional<FamilyId> family_from_string(const std::string& name) {
  if (name == "gaussian") return FamilyId::kGaussian;
  if (name == "binomial" || name == "logistic") return FamilyId::kBinomial;
  if (name == "poisson") return FamilyId::kPoisson;
  return std::nullopt;
}

}  // namespace natcd
