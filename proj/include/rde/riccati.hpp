#pragma once

// First-order Moebius (Riccati) recurrence y_{n+1} = y_n / (a + b y_n) and
// the multipliers h(n) = x_{n+1} / x_{n-1}, g(n) = 1 - h(n) of the
// second-order equation, which depend on (a, alpha) only.

#include <cstdint>
#include <vector>

#include "rde/params.hpp"

namespace rde {

template <Scalar T>
struct CoefficientQuery {
  std::uint64_t n;
  T a;
  T alpha;
};

template <Scalar T>
struct RiccatiOrbit {
  T y0;
  std::vector<T> terms;  // y_1 .. y_N
};

inline bool is_one(double x) { return x == 1.0; }
inline bool is_one(const Rational& x) { return x == 1; }

namespace detail {

// Float mode with |a| > 1 evaluates the closed forms divided through by a^n so
// that a^n never overflows; a^-n underflowing to zero is the correct limit.
template <Scalar T>
bool use_scaled_form(const T& a) {
  if constexpr (is_exact_v<T>) {
    return false;
  } else {
    return std::fabs(a) > 1.0;
  }
}

template <Scalar T>
T from_index(std::uint64_t n) {
  if constexpr (is_exact_v<T>) {
    return T(static_cast<unsigned long>(n));
  } else {
    return static_cast<double>(n);
  }
}

}  // namespace detail

// D(n) = a^n (1 - a) + alpha (1 - a^n) = a^n (1 - a - alpha) + alpha   (a != 1)
// D(n) = 1 + alpha n                      (a == 1)
// h(n) = D(n) / D(n+1) and D(0) = 1 - a (or 1).
template <Scalar T>
T riccati_denominator(const T& a, const T& alpha, std::uint64_t n) {
  if (is_one(a)) return T(1 + alpha * detail::from_index<T>(n));
  return T(power(a, n) * (1 - a - alpha) + alpha);
}

template <Scalar T>
T riccati_step(const T& y, const Params<T>& params) {
  const T den = params.a + params.b * y;
  return checked_quotient(y, den);
}

template <Scalar T>
RiccatiOrbit<T> riccati_orbit(const T& y0, const Params<T>& params, std::uint64_t n_max) {
  RiccatiOrbit<T> orbit{y0, {}};
  orbit.terms.reserve(n_max);
  T y = y0;
  for (std::uint64_t n = 0; n < n_max; ++n) {
    y = riccati_step(y, params);
    orbit.terms.push_back(y);
  }
  return orbit;
}

// n-fold riccati_step in closed form.
template <Scalar T>
T riccati_closed(const T& y0, const Params<T>& params, std::uint64_t n) {
  const T& a = params.a;
  const T alpha = params.b * y0;
  if (is_one(a)) {
    return checked_quotient(y0, T(1 + alpha * detail::from_index<T>(n)));
  }
  const T c = 1 - a - alpha;
  if (detail::use_scaled_form(a)) {
    const T inv = T(1) / power(a, n);
    return checked_quotient(T(y0 * (1 - a) * inv), T(c + alpha * inv));
  }
  return checked_quotient(T(y0 * (1 - a)), T(power(a, n) * c + alpha));
}

// h(n); equals 1 / (a + b y_n) along the Riccati orbit with y_0 = alpha / b.
template <Scalar T>
T h_coeff(const CoefficientQuery<T>& q) {
  if (detail::use_scaled_form(q.a)) {
    const T inv = T(1) / power(q.a, q.n);
    const T c = 1 - q.a - q.alpha;
    return checked_quotient(T(c + q.alpha * inv), T(q.a * c + q.alpha * inv));
  }
  return checked_quotient(riccati_denominator(q.a, q.alpha, q.n),
                          riccati_denominator(q.a, q.alpha, q.n + 1));
}

// g(n) = (a + alpha - 1)(1 - a) a^n / D(n+1), so that h(n) = 1 - g(n).
template <Scalar T>
T g_coeff(const CoefficientQuery<T>& q) {
  if (is_one(q.a)) throw Error(Errc::UnsupportedBranch, "g(n) is defined for a != 1 only");
  const T lead = (q.a + q.alpha - 1) * (1 - q.a);
  if (detail::use_scaled_form(q.a)) {
    const T inv = T(1) / power(q.a, q.n);
    return checked_quotient(lead, T(q.a * (1 - q.a - q.alpha) + q.alpha * inv));
  }
  return checked_quotient(T(lead * power(q.a, q.n)), riccati_denominator(q.a, q.alpha, q.n + 1));
}

// Streams h(0), h(1), ... In Exact mode the powers of a are carried along
// instead of being recomputed for every index.
template <Scalar T>
class CoefficientSequence {
 public:
  CoefficientSequence(T a, T alpha) : a_(std::move(a)), alpha_(std::move(alpha)), a_pow_(1) {
    if constexpr (is_exact_v<T>) denominator_ = riccati_denominator(a_, alpha_, 0);
  }

  std::uint64_t index() const { return n_; }

  T next() {
    if constexpr (is_exact_v<T>) {
      T following;
      if (is_one(a_)) {
        following = 1 + alpha_ * detail::from_index<T>(n_ + 1);
      } else {
        a_pow_ *= a_;
        following = a_pow_ * (1 - a_) + alpha_ * (1 - a_pow_);
      }
      T h = checked_quotient(denominator_, following);
      denominator_ = std::move(following);
      ++n_;
      return h;
    } else {
      return h_coeff(CoefficientQuery<T>{n_++, a_, alpha_});
    }
  }

 private:
  T a_;
  T alpha_;
  T a_pow_;
  T denominator_{};
  std::uint64_t n_ = 0;
};

}  // namespace rde
