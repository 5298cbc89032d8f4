#include "rde/admissibility.hpp"

namespace rde {

std::string to_string(const AdmissibilityVerdict& verdict) {
  switch (verdict.kind) {
    case VerdictKind::AdmissibleRegular:
      return "AdmissibleRegular";
    case VerdictKind::AdmissibleSingular:
      return verdict.singular == SingularKind::AlphaZero ? "AdmissibleSingular(AlphaZero)"
                                                         : "AdmissibleSingular(AlphaOneMinusA)";
    case VerdictKind::NonAdmissible:
      return "NonAdmissible(" + std::to_string(verdict.step) + ")";
    case VerdictKind::Undecided:
      return "Undecided(" + std::to_string(verdict.step) + ")";
  }
  return "?";
}

}  // namespace rde
