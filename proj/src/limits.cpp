#include "rde/limits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rde/admissibility.hpp"
#include "rde/riccati.hpp"

namespace rde {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_contracting(double a) {
  if (!(a != 0.0 && std::fabs(a) < 1.0))
    throw Error(Errc::NotInRange, "needs 0 < |a| < 1, got a = " + to_string(a));
}

}  // namespace

double tail_bound(const Params<double>& params, double alpha, std::int64_t k_from) {
  const double a = params.a;
  require_contracting(a);
  if (alpha == 0.0) throw Error(Errc::NotRegular, "alpha = 0 orbits are unbounded");
  if (k_from < 0) throw Error(Errc::InvalidArgument, "k_from must be nonnegative");

  const double c = 1.0 - a - alpha;
  if (c == 0.0) return 0.0;

  const double abs_a = std::fabs(a);
  const double a2k = power(abs_a, 2 * static_cast<std::uint64_t>(k_from));
  // |D(n+1)| >= |alpha| - |a|^{n+1} |c| for n >= 2 k_from.
  const double d_min = (std::fabs(alpha) - a2k * abs_a * std::fabs(c)) * (1.0 - 1e-12);
  if (!(d_min > 0.0))
    throw Error(Errc::TailNotYetGeometric, "denominator not yet bounded away from 0 at k = " + std::to_string(k_from));
  const double scale = std::fabs(c) * std::fabs(1.0 - a) / d_min;
  if (scale * a2k > 0.5)
    throw Error(Errc::TailNotYetGeometric, "|g(n)| may exceed 1/2 at k = " + std::to_string(k_from));
  return 2.0 * scale * a2k / (1.0 - a * a) * (1.0 + 1e-12);
}

std::int64_t constant_sign_index(double a, double alpha, std::int64_t cap) {
  require_contracting(a);
  if (alpha == 0.0) throw Error(Errc::NotRegular, "alpha = 0 has no limiting sign");
  const double c = 1.0 - a - alpha;
  const int target = sign(alpha);
  std::int64_t settled = 0;
  double an = a;  // a^{n+1}
  for (std::int64_t n = 0; n <= cap; ++n, an *= a) {
    if (sign(an * c + alpha) != target) settled = n + 1;
    // |D(n+1) - alpha| only shrinks from here on.
    if (std::fabs(an * c) < std::fabs(alpha)) return settled;
  }
  throw Error(Errc::ResourceLimit, "sign of D(n) not settled by n = " + std::to_string(cap));
}

ProductBounds product_bounds(double a, double alpha) {
  if (!(a != 0.0 && std::fabs(a) < 1.0) || !(alpha > (1.0 - a) / 2.0))
    throw Error(Errc::OutOfHypothesis, "needs 0 < |a| < 1 and alpha > (1 - a)/2");

  const double c = 1.0 - a - alpha;
  const double one_minus_a2 = 1.0 - a * a;
  const double odd_exponent = 2.0 * std::fabs(c * a) / one_minus_a2;
  // For 0 < a and alpha < 1 - a the (1 + a) divisor is not justified; the
  // series is only bounded by (1 - a - alpha)(1 - a)/(alpha (1 - a^2)) < 2c/(1 - a^2).
  const double even_exponent = (a > 0.0 && c > 0.0) ? 2.0 * c / one_minus_a2
                                                     : 2.0 * std::fabs(c) / (one_minus_a2 * (1.0 + a));
  const double floor_factor = std::min(1.0, (1.0 - a) / alpha);

  ProductBounds b{};
  b.odd_upper = std::exp(odd_exponent);
  b.even_upper = std::exp(even_exponent);
  b.odd_lower = floor_factor * std::exp(-even_exponent);
  b.even_lower = floor_factor * std::exp(-odd_exponent);
  return b;
}

LimitCertificate limit_periodic_point(const Params<double>& params, const SeedPair<double>& seed, double tol,
                                      std::int64_t k_max) {
  validate_params(params);
  validate_seed(seed);
  require_contracting(params.a);
  if (!(tol > 0.0)) throw Error(Errc::InvalidArgument, "tol must be positive");

  const double a = params.a;
  const double b = params.b;
  const AdmissibilityVerdict verdict = check_admissible(params, seed);
  if (verdict.kind == VerdictKind::NonAdmissible)
    throw Error(Errc::NotAdmissible, "denominator vanishes at step " + std::to_string(verdict.step));
  if (verdict.kind == VerdictKind::AdmissibleSingular) {
    if (verdict.singular == SingularKind::AlphaZero)
      throw Error(Errc::NotRegular, "alpha = 0: the orbit is unbounded or zero");
    LimitCertificate cert;
    cert.point = {seed.x_prev, seed.x_zero, seed.x_prev == seed.x_zero ? 1 : 2, 0.0};
    return cert;
  }

  const double alpha = alpha_of(params, seed);
  CoefficientSequence<double> h(a, alpha);
  double even = 1.0;
  double odd = 1.0;
  for (std::int64_t k = 0; k <= k_max; ++k) {
    const double he = h.next();
    const double ho = h.next();
    even *= he;
    odd *= ho;
    if (std::max(std::fabs(he - 1.0), std::fabs(ho - 1.0)) >= tol / 4.0) continue;
    double tail = 0.0;
    try {
      tail = tail_bound(params, alpha, k + 1);
    } catch (const Error& e) {
      if (e.code() != Errc::TailNotYetGeometric) throw;
      continue;
    }
    if (tail >= tol / 2.0) continue;

    LimitCertificate cert;
    cert.truncation_index = k;
    cert.even_partial = even;
    cert.odd_partial = odd;
    cert.tail_bound = tail;

    const double p = seed.x_prev * even;
    const double q = seed.x_zero * odd;
    // Each factor carries a few roundings; allow 16 eps per factor.
    const double rounding = 16.0 * kEps * static_cast<double>(2 * k + 2);
    const double rel = std::expm1(tail) + rounding * std::exp(tail);
    cert.p_error = std::fabs(p) * rel;
    cert.q_error = std::fabs(q) * rel;
    cert.pq_error = std::fabs(p) * cert.q_error + std::fabs(q) * cert.p_error + cert.p_error * cert.q_error +
                    4.0 * kEps * std::fabs(p * q);

    // Absolute target: keep growing K while the tail still dominates.
    if (std::max({cert.p_error, cert.q_error, cert.pq_error}) > tol && std::expm1(tail) > rounding && k < k_max)
      continue;

    const bool on_equilibrium = (1.0 - a) * b > 0.0 && std::fabs(p - q) <= cert.p_error + cert.q_error;
    cert.point = {p, q, on_equilibrium ? 1 : 2, std::max({cert.p_error, cert.q_error, cert.pq_error})};
    return cert;
  }
  throw Error(Errc::TailNotYetGeometric, "tail not certified within k_max = " + std::to_string(k_max));
}

}  // namespace rde
