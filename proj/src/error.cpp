#include "rde/error.hpp"

namespace rde {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DegenerateParams: return "DegenerateParams";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::SingularDenominator: return "SingularDenominator";
    case Errc::NonFinite: return "NonFinite";
    case Errc::UnsupportedBranch: return "UnsupportedBranch";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NotInRange: return "NotInRange";
    case Errc::TailNotYetGeometric: return "TailNotYetGeometric";
    case Errc::OutOfHypothesis: return "OutOfHypothesis";
    case Errc::NotPeriodicPoint: return "NotPeriodicPoint";
    case Errc::NoPlottableData: return "NoPlottableData";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_domain_error(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument:
    case Errc::ParseError:
      return false;
    default:
      return true;
  }
}

}  // namespace rde
