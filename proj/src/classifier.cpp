#include "rde/classifier.hpp"

namespace rde {

std::string_view to_string(BehaviorClass kind) noexcept {
  switch (kind) {
    case BehaviorClass::TriviallyZero: return "TriviallyZero";
    case BehaviorClass::ConvergesToZero: return "ConvergesToZero";
    case BehaviorClass::ExactlyTwoPeriodic: return "ExactlyTwoPeriodic";
    case BehaviorClass::ConvergesToTwoPeriodic: return "ConvergesToTwoPeriodic";
    case BehaviorClass::FourPeriodic: return "FourPeriodic";
    case BehaviorClass::UnboundedEvenDivergesOddToZero: return "UnboundedEvenDivergesOddToZero";
    case BehaviorClass::UnboundedOddDivergesEvenToZero: return "UnboundedOddDivergesEvenToZero";
    case BehaviorClass::UnboundedAlternating: return "UnboundedAlternating";
    case BehaviorClass::UnboundedGeometric: return "UnboundedGeometric";
    case BehaviorClass::NotAdmissible: return "NotAdmissible";
  }
  return "?";
}

std::string_view to_string(Tendency t) noexcept {
  switch (t) {
    case Tendency::Zero: return "0";
    case Tendency::PlusInfinity: return "+inf";
    case Tendency::MinusInfinity: return "-inf";
  }
  return "?";
}

bool is_unbounded(BehaviorClass kind) noexcept {
  return kind == BehaviorClass::UnboundedEvenDivergesOddToZero ||
         kind == BehaviorClass::UnboundedOddDivergesEvenToZero || kind == BehaviorClass::UnboundedAlternating ||
         kind == BehaviorClass::UnboundedGeometric;
}

}  // namespace rde
