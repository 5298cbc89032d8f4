#pragma once

#include "rde/scalar.hpp"

namespace rde {

// Coefficients of x_{n+1} = x_{n-1} / (a + b x_n x_{n-1}).
template <Scalar T>
struct Params {
  T a;
  T b;
};

// Initial data (x_{-1}, x_0).
template <Scalar T>
struct SeedPair {
  T x_prev;
  T x_zero;
};

// Rejects non-finite coefficients and the degenerate pair (0, 0), for which
// every denominator vanishes.
template <Scalar T>
void validate_params(const Params<T>& params) {
  if (!is_finite(params.a) || !is_finite(params.b))
    throw Error(Errc::InvalidArgument, "parameters must be finite");
  if (is_zero(params.a) && is_zero(params.b))
    throw Error(Errc::DegenerateParams, "a = b = 0 makes every denominator zero");
}

template <Scalar T>
void validate_seed(const SeedPair<T>& seed) {
  if (!is_finite(seed.x_prev) || !is_finite(seed.x_zero))
    throw Error(Errc::InvalidArgument, "initial values must be finite");
}

template <Scalar T>
Params<T> make_params(T a, T b) {
  Params<T> p{std::move(a), std::move(b)};
  validate_params(p);
  return p;
}

// alpha = b x_{-1} x_0, the invariant that decides the fate of the orbit.
template <Scalar T>
T alpha_of(const Params<T>& params, const SeedPair<T>& seed) {
  return T(params.b * seed.x_prev * seed.x_zero);
}

inline Params<double> to_float(const Params<double>& p) { return p; }
inline Params<double> to_float(const Params<Rational>& p) { return {to_double(p.a), to_double(p.b)}; }
inline SeedPair<double> to_float(const SeedPair<double>& s) { return s; }
inline SeedPair<double> to_float(const SeedPair<Rational>& s) {
  return {to_double(s.x_prev), to_double(s.x_zero)};
}

}  // namespace rde
