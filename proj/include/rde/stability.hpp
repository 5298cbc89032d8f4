#pragma once

// Equilibria, the planar map F(x, y) = (y, x / (a + b x y)) whose orbits are
// the solutions, linearisation of F and F o F, and stability verdicts.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "rde/eigen_rational.hpp"
#include "rde/limits.hpp"
#include "rde/orbit.hpp"
#include "rde/params.hpp"

namespace rde {

template <Scalar T>
using Vector2 = Eigen::Matrix<T, 2, 1>;
template <Scalar T>
using Matrix2 = Eigen::Matrix<T, 2, 2>;

enum class StabilityTarget { ZeroEquilibrium, NonzeroPeriodic };
enum class Stability { AsymptoticallyStable, StableNotAsymptotically, Unstable };

struct StabilityVerdict {
  StabilityTarget target = StabilityTarget::ZeroEquilibrium;
  Stability verdict = Stability::Unstable;
  double p = 0.0;
  double q = 0.0;
  std::optional<std::pair<double, double>> eigenvalues;  // NonzeroPeriodic only
};

template <Scalar T>
Vector2<T> step_map(const Params<T>& params, const Vector2<T>& v) {
  const T den = params.a + params.b * v(0) * v(1);
  return Vector2<T>(v(1), checked_quotient(v(0), den));
}

template <Scalar T>
Matrix2<T> step_map_jacobian(const Params<T>& params, const Vector2<T>& v) {
  const T den = params.a + params.b * v(0) * v(1);
  if (is_zero(den)) throw Error(Errc::SingularDenominator, "F is undefined where a + b x y = 0");
  const T den2 = den * den;
  Matrix2<T> j;
  j(0, 0) = T(0);
  j(0, 1) = T(1);
  j(1, 0) = T(params.a / den2);
  j(1, 1) = T(-params.b * v(0) * v(0) / den2);
  return j;
}

// Chain rule: J(F o F)(v) = JF(F(v)) JF(v).
template <Scalar T>
Matrix2<T> period2_jacobian(const Params<T>& params, const T& p, const T& q) {
  const Vector2<T> v(p, q);
  const Matrix2<T> inner = step_map_jacobian(params, v);
  const Matrix2<T> outer = step_map_jacobian(params, step_map(params, v));
  Matrix2<T> j = outer * inner;
  return j;
}

namespace detail {

template <Scalar T>
void require_period2_point(const Params<T>& params, const T& p, const T& q, double tol) {
  if (is_zero(params.a)) throw Error(Errc::NotPeriodicPoint, "a = 0 has no isolated linearisation");
  const T residual = params.a + params.b * p * q - 1;
  bool ok;
  if constexpr (is_exact_v<T>) {
    ok = is_zero(residual);
  } else {
    ok = std::fabs(residual) <= tol * std::max(1.0, std::fabs(params.a) + std::fabs(params.b * p * q));
  }
  if (!ok) throw Error(Errc::NotPeriodicPoint, "a + b p q != 1 (residual " + to_string(residual) + ")");
}

inline std::optional<Rational> exact_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return std::nullopt;
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), x.get_den_mpz_t());
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace detail

// Eigenvalues (ascending) of J(F o F) at a 2-periodic point (a + b p q = 1).
// They equal {a^2, 1}: JF at the cycle has determinant -a per step.
template <Scalar T>
std::pair<T, T> period2_jacobian_eigs(const Params<T>& params, const T& p, const T& q, double tol = 1e-9) {
  detail::require_period2_point(params, p, q, tol);
  const Matrix2<T> j = period2_jacobian(params, p, q);
  if constexpr (is_exact_v<T>) {
    const Rational trace = j(0, 0) + j(1, 1);
    const Rational det = j(0, 0) * j(1, 1) - j(0, 1) * j(1, 0);
    const auto root = detail::exact_sqrt(Rational(trace * trace - 4 * det));
    if (!root) throw Error(Errc::NotPeriodicPoint, "eigenvalues are not rational");
    return {Rational((trace - *root) / 2), Rational((trace + *root) / 2)};
  } else {
    Eigen::EigenSolver<Eigen::Matrix2d> solver(j, /*computeEigenvectors=*/false);
    const auto ev = solver.eigenvalues();
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    if (std::fabs(ev(0).imag()) > tol * scale || std::fabs(ev(1).imag()) > tol * scale)
      throw Error(Errc::NotPeriodicPoint, "complex eigenvalues");
    const double lo = std::min(ev(0).real(), ev(1).real());
    const double hi = std::max(ev(0).real(), ev(1).real());
    return {lo, hi};
  }
}

// {0} plus x_+- = +-sqrt((1 - a)/b) when (1 - a) b > 0.
template <Scalar T>
std::vector<PeriodicPoint> equilibria(const Params<T>& params) {
  validate_params(params);
  std::vector<PeriodicPoint> out{PeriodicPoint{0.0, 0.0, 1, 0.0}};
  if (sign(T((1 - params.a) * params.b)) > 0) {
    const double x = std::sqrt(to_double(T((1 - params.a) / params.b)));
    const double err = std::numeric_limits<double>::epsilon() * x;
    out.push_back(PeriodicPoint{x, x, 1, err});
    out.push_back(PeriodicPoint{-x, -x, 1, err});
  }
  return out;
}

// Zero is asymptotically stable iff |a| > 1 or (a = 1, b != 0); stable only
// for (a, b) = (1, 0); unstable otherwise (|a| < 1, a = 0, a = -1).
template <Scalar T>
StabilityVerdict zero_stability(const Params<T>& params) {
  validate_params(params);
  StabilityVerdict v;
  v.target = StabilityTarget::ZeroEquilibrium;
  if (magnitude(params.a) > 1 || (is_one(params.a) && !is_zero(params.b)))
    v.verdict = Stability::AsymptoticallyStable;
  else if (is_one(params.a))
    v.verdict = Stability::StableNotAsymptotically;
  else
    v.verdict = Stability::Unstable;
  return v;
}

// Verdict for the nonzero 2-cycle (p, q): stable (not asymptotically, it sits
// in a curve of cycles) for |a| < 1, unstable for |a| >= 1.
template <Scalar T>
StabilityVerdict periodic_stability(const Params<T>& params, const T& p, const T& q, double tol = 1e-9) {
  validate_params(params);
  StabilityVerdict v;
  v.target = StabilityTarget::NonzeroPeriodic;
  v.p = to_double(p);
  v.q = to_double(q);
  if (is_zero(params.a)) {
    if (is_zero(T(params.b * p * q))) throw Error(Errc::NotPeriodicPoint, "a = 0 needs b p q != 0");
    v.eigenvalues = std::pair<double, double>{0.0, 1.0};
    v.verdict = Stability::StableNotAsymptotically;
    return v;
  }
  const auto [lo, hi] = period2_jacobian_eigs(params, p, q, tol);
  v.eigenvalues = std::pair<double, double>{to_double(lo), to_double(hi)};
  v.verdict = magnitude(params.a) < 1 ? Stability::StableNotAsymptotically : Stability::Unstable;
  return v;
}

struct ProbeRow {
  double delta = 0.0;
  double sup_distance = 0.0;    // max_n |x_n - (p or q)| over the computed orbit
  double final_distance = 0.0;  // same, restricted to the last two terms
  Termination termination = Termination::Completed;
};

// Empirical epsilon-delta table: not a proof of stability.
struct ProbeReport {
  std::vector<ProbeRow> rows;
  std::int64_t n_max = 0;
  bool shrinks_with_delta = true;  // sup-distance is monotone in |delta|
};

ProbeReport periodic_stability_probe(const Params<double>& params, double p, double q,
                                     std::span<const double> delta_grid, std::int64_t n_max,
                                     unsigned threads = 0);

}  // namespace rde
