#pragma once

// Admissible / regular / singular initial data.
//
// The orbit of (x_{-1}, x_0) reaches a zero denominator when computing x_m
// exactly when D(m) = a^m (1 - a) + alpha (1 - a^m) = 0 (1 + alpha m = 0 for
// a = 1), i.e. when alpha equals forbidden_alpha(a, m). For a not in {0, 1, -1}
// and alpha != 1 - a this is a^m = alpha / (alpha + a - 1), which Exact mode
// decides by walking |a|^m monotonically past the target.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "rde/params.hpp"
#include "rde/riccati.hpp"

namespace rde {

enum class VerdictKind { AdmissibleRegular, AdmissibleSingular, NonAdmissible, Undecided };
enum class SingularKind { AlphaZero, AlphaOneMinusA };

struct AdmissibilityVerdict {
  VerdictKind kind = VerdictKind::AdmissibleRegular;
  SingularKind singular = SingularKind::AlphaZero;  // meaningful for AdmissibleSingular
  std::int64_t step = 0;  // blow-up step (NonAdmissible) or last n tested (Undecided)

  bool admissible() const {
    return kind == VerdictKind::AdmissibleRegular || kind == VerdictKind::AdmissibleSingular;
  }
  bool regular() const { return kind == VerdictKind::AdmissibleRegular; }

  friend bool operator==(const AdmissibilityVerdict&, const AdmissibilityVerdict&) = default;
};

std::string to_string(const AdmissibilityVerdict& verdict);

struct AdmissibilityOptions {
  std::int64_t n_cap = 10000;
  double float_tol = 1e-12;
};

// a^n (a - 1) / (1 - a^n), or -1/n for a = 1; empty when a^n = 1.
template <Scalar T>
std::optional<T> forbidden_alpha(const T& a, std::int64_t n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "forbidden_alpha needs n >= 1");
  if (is_one(a)) return T(T(-1) / detail::from_index<T>(static_cast<std::uint64_t>(n)));
  const T an = power(a, static_cast<std::uint64_t>(n));
  if (an == 1) return std::nullopt;
  return T(an * (a - 1) / (1 - an));
}

// Accumulation point of forbidden_alpha(a, n): 0 for |a| < 1, 1 - a for |a| > 1.
template <Scalar T>
T forbidden_limit(const T& a) {
  if (is_zero(a) || is_one(a) || a == -1)
    throw Error(Errc::UnsupportedBranch, "forbidden_limit needs a not in {-1, 0, 1}");
  if (magnitude(a) < 1) return T(0);
  return T(1 - a);
}

// Exact decision: the first m >= 1 with D(m) = 0, if any.
inline std::optional<std::int64_t> forbidden_index(const Rational& a, const Rational& alpha) {
  if (a == 1) {
    if (sgn(alpha) >= 0) return std::nullopt;
    const Rational m = -1 / alpha;
    if (m.get_den() != 1) return std::nullopt;
    if (!m.get_num().fits_slong_p()) return std::numeric_limits<std::int64_t>::max();
    return m.get_num().get_si();
  }
  if (sgn(a) == 0) return sgn(alpha) == 0 ? std::optional<std::int64_t>(1) : std::nullopt;
  if (alpha == 1 - a || sgn(alpha) == 0) return std::nullopt;
  if (a == -1) return alpha == 1 ? std::optional<std::int64_t>(1) : std::nullopt;

  const Rational target = alpha / (alpha + a - 1);
  const Rational target_mag = abs(target);
  const bool growing = abs(a) > 1;
  Rational t = a;
  std::int64_t n = 1;
  while (growing ? abs(t) < target_mag : abs(t) > target_mag) {
    t *= a;
    ++n;
  }
  if (t == target) return n;
  return std::nullopt;
}

namespace detail {

template <Scalar T>
std::optional<AdmissibilityVerdict> singular_verdict(const T& a, const T& alpha) {
  if (is_zero(alpha) && !is_zero(a))
    return AdmissibilityVerdict{VerdictKind::AdmissibleSingular, SingularKind::AlphaZero, 0};
  if (alpha == 1 - a)
    return AdmissibilityVerdict{VerdictKind::AdmissibleSingular, SingularKind::AlphaOneMinusA, 0};
  return std::nullopt;
}

inline bool float_close(double x, double y, double tol) {
  return std::fabs(x - y) <= tol * std::max(1.0, std::fabs(x));
}

inline AdmissibilityVerdict check_admissible_float(double a, double alpha, const AdmissibilityOptions& opts) {
  if (auto s = singular_verdict(a, alpha)) return *s;
  const auto non_admissible = [](std::int64_t m) {
    return AdmissibilityVerdict{VerdictKind::NonAdmissible, SingularKind::AlphaZero, m};
  };
  const AdmissibilityVerdict regular{VerdictKind::AdmissibleRegular, SingularKind::AlphaZero, 0};

  if (a == 0.0) return is_zero(alpha) ? non_admissible(1) : regular;
  if (a == -1.0) return float_close(alpha, 1.0, opts.float_tol) ? non_admissible(1) : regular;
  if (a == 1.0) {
    if (alpha >= 0.0) return regular;
    const double m = -1.0 / alpha;
    if (m >= 9007199254740992.0)
      return AdmissibilityVerdict{VerdictKind::Undecided, SingularKind::AlphaZero, opts.n_cap};
    const double nearest = std::max(1.0, std::round(m));
    if (float_close(alpha, -1.0 / nearest, opts.float_tol)) return non_admissible(static_cast<std::int64_t>(nearest));
    return regular;
  }

  double an = 1.0;
  std::int64_t n = 1;
  for (; n <= opts.n_cap; ++n) {
    an *= a;
    const double candidate = an * (a - 1.0) / (1.0 - an);
    if (float_close(alpha, candidate, opts.float_tol)) return non_admissible(n);
    const double mag = std::fabs(an);
    if (mag < 1e-300 || mag > 1e300) return regular;
  }
  if (float_close(alpha, forbidden_limit(a), opts.float_tol))
    return AdmissibilityVerdict{VerdictKind::Undecided, SingularKind::AlphaZero, opts.n_cap};
  return regular;
}

}  // namespace detail

template <Scalar T>
AdmissibilityVerdict check_admissible(const Params<T>& params, const SeedPair<T>& seed,
                                      const AdmissibilityOptions& opts = {}) {
  validate_params(params);
  validate_seed(seed);
  const T alpha = alpha_of(params, seed);
  if constexpr (is_exact_v<T>) {
    if (auto m = forbidden_index(params.a, alpha))
      return AdmissibilityVerdict{VerdictKind::NonAdmissible, SingularKind::AlphaZero, *m};
    if (auto s = detail::singular_verdict(params.a, alpha)) return *s;
    return AdmissibilityVerdict{VerdictKind::AdmissibleRegular, SingularKind::AlphaZero, 0};
  } else {
    return detail::check_admissible_float(params.a, alpha, opts);
  }
}

}  // namespace rde
