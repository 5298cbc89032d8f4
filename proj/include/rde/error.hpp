#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rde {

enum class Errc {
  DegenerateParams,
  InvalidArgument,
  ParseError,
  SingularDenominator,
  NonFinite,
  UnsupportedBranch,
  NotAdmissible,
  NotRegular,
  NotInRange,
  TailNotYetGeometric,
  OutOfHypothesis,
  NotPeriodicPoint,
  NoPlottableData,
  ResourceLimit,
  IoError,
};

std::string_view to_string(Errc code) noexcept;

// True for errors describing the mathematics of the input (exit code 1 in the
// CLI); false for malformed input (exit code 2).
bool is_domain_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rde
