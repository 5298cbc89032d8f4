#include "rde/scalar.hpp"

#include <cctype>
#include <cfloat>
#include <cstdio>
#include <cstring>
#include <limits>

namespace rde {

std::string_view to_string(Mode mode) noexcept {
  return mode == Mode::Exact ? "exact" : "float";
}

Rational ratio(long num, long den) {
  if (den == 0) throw Error(Errc::SingularDenominator, "ratio with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

double to_double(const Rational& x) {
  static const Rational max_finite(DBL_MAX);
  if (x > max_finite) return std::numeric_limits<double>::infinity();
  if (x < -max_finite) return -std::numeric_limits<double>::infinity();

  // mpq_get_d truncates toward zero; compare with the neighbour away from zero.
  const double truncated = x.get_d();
  if (Rational(truncated) == x) return truncated;
  const double away = std::nextafter(
      truncated, sgn(x) > 0 ? std::numeric_limits<double>::infinity()
                            : -std::numeric_limits<double>::infinity());
  const Rational gap_truncated = abs(x - Rational(truncated));
  const Rational gap_away = abs(Rational(away) - x);
  if (gap_away < gap_truncated) return away;
  if (gap_truncated < gap_away) return truncated;

  std::uint64_t bits = 0;
  static_assert(sizeof(bits) == sizeof(truncated));
  std::memcpy(&bits, &truncated, sizeof(bits));
  return (bits & 1U) == 0 ? truncated : away;
}

std::size_t bit_size(const Rational& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw Error(Errc::ParseError, "not a number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) bad_literal(whole);
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const mpz_class exp_value = parse_integer(s.substr(e + 1), whole);
    if (abs(exp_value) > 100000) bad_literal(whole);
    exponent = exp_value.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) bad_literal(whole);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
      bad_literal(whole);
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) bad_literal(whole);
    digits = std::string(s);
  }
  Rational value{mpz_class(digits, 10)};
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0)
    value /= Rational(scale);
  else
    value *= Rational(scale);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

template <>
Rational parse_scalar<Rational>(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) bad_literal(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(trim(s.substr(0, slash)), text);
    const std::string_view den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) bad_literal(text);
    const mpz_class den = parse_integer(den_text, text);
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  return parse_decimal(s, text);
}

template <>
double parse_scalar<double>(std::string_view text) {
  const double d = to_double(parse_scalar<Rational>(text));
  if (!std::isfinite(d)) throw Error(Errc::ParseError, "value out of binary64 range: '" + std::string(text) + "'");
  return d;
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace rde
