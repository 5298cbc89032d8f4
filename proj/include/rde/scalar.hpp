#pragma once

// Scalar abstraction shared by every module.
//
// All algorithms are templates over a `Scalar` type:
//   double    -- Float mode (binary64); non-finite results are detectable.
//   Rational  -- Exact mode (GMP rationals); closed under + - * and
//                division by a nonzero value.
// Mixing the two in one computation does not compile.

#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "rde/error.hpp"

namespace rde {

using Rational = mpq_class;

enum class Mode { Exact, Float };

template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <Scalar T>
inline constexpr Mode mode_of = std::same_as<T, Rational> ? Mode::Exact : Mode::Float;

template <Scalar T>
inline constexpr bool is_exact_v = mode_of<T> == Mode::Exact;

std::string_view to_string(Mode mode) noexcept;

// Canonical p/q.
Rational ratio(long num, long den);

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline int sign(double x) { return (x > 0.0) - (x < 0.0); }
inline int sign(const Rational& x) { return sgn(x); }

inline double magnitude(double x) { return std::fabs(x); }
inline Rational magnitude(const Rational& x) { return abs(x); }

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Rational&) { return true; }

inline double to_double(double x) { return x; }
// Correctly rounded (nearest, ties to even); saturates to +-inf.
double to_double(const Rational& x);

// Storage footprint: numerator bits + denominator bits (64 for doubles).
inline std::size_t bit_size(double) { return 64; }
std::size_t bit_size(const Rational& x);

// base^n by binary exponentiation; 0^0 = 1.
template <Scalar T>
T power(const T& base, std::uint64_t n) {
  T result(1);
  T b = base;
  while (n > 0) {
    if (n & 1U) result *= b;
    n >>= 1U;
    if (n > 0) b *= b;
  }
  return result;
}

// num / den. Throws SingularDenominator when den is exactly zero and, in
// Float mode, NonFinite when the quotient overflows or is NaN.
template <Scalar T>
T checked_quotient(const T& num, const T& den) {
  if (is_zero(den)) throw Error(Errc::SingularDenominator, "division by exact zero");
  T q = num / den;
  if constexpr (!is_exact_v<T>) {
    if (!std::isfinite(q)) throw Error(Errc::NonFinite, "quotient is not finite");
  }
  return q;
}

// Accepts "p/q", decimals ("-0.005") and scientific notation ("1e-4").
// Exact mode keeps the literal value; Float mode rounds it to nearest.
template <Scalar T>
T parse_scalar(std::string_view text);

template <>
Rational parse_scalar<Rational>(std::string_view text);
template <>
double parse_scalar<double>(std::string_view text);

// "p/q" (or "p") for rationals, %.17g for doubles.
std::string to_string(const Rational& x);
std::string to_string(double x);

}  // namespace rde
