#pragma once

// Asymptotic classification of every orbit, dispatched on a:
//   a = -1        explicit powers of (alpha - 1): unbounded unless alpha in {0, 2}
//   |a| >= 1      zero limit unless alpha = 1 - a (exactly 2-periodic)
//   a = 0         x_{n+1} = 1/(b x_n), 2-periodic from x_0
//   0 < |a| < 1   2-periodic limit (regular), geometric blow-up (alpha = 0)
// Boundary values of a are matched exactly (bitwise in Float mode).

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "rde/admissibility.hpp"
#include "rde/limits.hpp"
#include "rde/params.hpp"

namespace rde {

enum class BehaviorClass {
  TriviallyZero,
  ConvergesToZero,
  ExactlyTwoPeriodic,
  ConvergesToTwoPeriodic,
  FourPeriodic,
  UnboundedEvenDivergesOddToZero,
  UnboundedOddDivergesEvenToZero,
  UnboundedAlternating,
  UnboundedGeometric,
  NotAdmissible,
};

std::string_view to_string(BehaviorClass kind) noexcept;

enum class Tendency { Zero, PlusInfinity, MinusInfinity };

std::string_view to_string(Tendency t) noexcept;

// Limit of x_{4k+r} as k -> infinity, indexed by r = 0..3.
using ResidueTendencies = std::array<Tendency, 4>;

template <Scalar T>
struct Behavior {
  BehaviorClass kind = BehaviorClass::NotAdmissible;
  AdmissibilityVerdict admissibility;
  T alpha{};
  // ExactlyTwoPeriodic: {p, q} = {odd-index value, even-index value}.
  // FourPeriodic: {x_1, x_2, x_3, x_4}.
  std::vector<T> cycle;
  std::int64_t periodic_from = -1;  // first index that follows the cycle
  std::optional<LimitCertificate> limit;         // ConvergesToTwoPeriodic
  std::optional<ResidueTendencies> tendencies;   // unbounded classes
};

struct ClassifyOptions {
  double tol = 1e-10;
  std::int64_t k_max = 1'000'000;
};

bool is_unbounded(BehaviorClass kind) noexcept;

namespace detail {

inline Tendency blow_up(int s) { return s > 0 ? Tendency::PlusInfinity : Tendency::MinusInfinity; }

// x_{2k} = x_0 / a^k, x_{2k-1} = x_{-1} / a^k.
inline ResidueTendencies geometric_tendencies(int sign_a, int sign_prev, int sign_zero) {
  const auto tend = [](int s) { return s == 0 ? Tendency::Zero : blow_up(s); };
  return {tend(sign_zero), tend(sign_prev * sign_a), tend(sign_zero * sign_a), tend(sign_prev)};
}

}  // namespace detail

template <Scalar T>
Behavior<T> classify(const Params<T>& params, const SeedPair<T>& seed, const ClassifyOptions& opts = {}) {
  validate_params(params);
  Behavior<T> out;
  out.admissibility = check_admissible(params, seed);
  out.alpha = alpha_of(params, seed);
  if (out.admissibility.kind == VerdictKind::NonAdmissible) {
    out.kind = BehaviorClass::NotAdmissible;
    return out;
  }

  const T& a = params.a;
  const T& alpha = out.alpha;
  const int s_prev = sign(seed.x_prev);
  const int s_zero = sign(seed.x_zero);

  const auto two_periodic = [&](T p, T q, std::int64_t from) {
    out.kind = BehaviorClass::ExactlyTwoPeriodic;
    out.cycle = {std::move(p), std::move(q)};
    out.periodic_from = from;
  };
  const auto unbounded = [&](BehaviorClass kind, ResidueTendencies t) {
    out.kind = kind;
    out.tendencies = t;
  };

  if (s_prev == 0 && s_zero == 0) {
    out.kind = BehaviorClass::TriviallyZero;
    return out;
  }

  if (a == -1) {
    using enum Tendency;
    if (alpha == 2) {
      two_periodic(seed.x_prev, seed.x_zero, -1);
    } else if (is_zero(alpha)) {
      out.kind = BehaviorClass::FourPeriodic;
      out.cycle = {T(-seed.x_prev), T(-seed.x_zero), seed.x_prev, seed.x_zero};
      out.periodic_from = -1;
    } else if (alpha > 2) {
      unbounded(BehaviorClass::UnboundedEvenDivergesOddToZero,
                {detail::blow_up(s_zero), Zero, detail::blow_up(s_zero), Zero});
    } else if (alpha > 1) {
      unbounded(BehaviorClass::UnboundedOddDivergesEvenToZero,
                {Zero, detail::blow_up(s_prev), Zero, detail::blow_up(s_prev)});
    } else if (alpha > 0) {
      unbounded(BehaviorClass::UnboundedAlternating,
                {Zero, detail::blow_up(-s_prev), Zero, detail::blow_up(s_prev)});
    } else {
      unbounded(BehaviorClass::UnboundedAlternating,
                {detail::blow_up(s_zero), Zero, detail::blow_up(-s_zero), Zero});
    }
    return out;
  }

  if (magnitude(a) >= 1) {
    if (alpha == 1 - a)
      two_periodic(seed.x_prev, seed.x_zero, -1);
    else
      out.kind = BehaviorClass::ConvergesToZero;
    return out;
  }

  if (is_zero(a)) {
    two_periodic(T(T(1) / (params.b * seed.x_zero)), seed.x_zero, 0);
    return out;
  }

  if (alpha == 1 - a) {
    two_periodic(seed.x_prev, seed.x_zero, -1);
  } else if (is_zero(alpha)) {
    unbounded(BehaviorClass::UnboundedGeometric, detail::geometric_tendencies(sign(a), s_prev, s_zero));
  } else {
    out.kind = BehaviorClass::ConvergesToTwoPeriodic;
    out.limit = limit_periodic_point(to_float(params), to_float(seed), opts.tol, opts.k_max);
  }
  return out;
}

}  // namespace rde
