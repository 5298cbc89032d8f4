#pragma once

// Limits of regular orbits for 0 < |a| < 1.
//
// Such orbits converge to a 2-cycle (p, q) with p = x_{-1} prod_i h(2i) and
// q = x_0 prod_i h(2i+1). The infinite products have no known closed form;
// they are evaluated as a finite product times a certified tail.

#include <cstdint>

#include "rde/params.hpp"

namespace rde {

struct PeriodicPoint {
  double p = 0.0;
  double q = 0.0;
  int period = 1;             // 1, 2 or 4
  double error_bound = 0.0;   // covers p, q and p*q
};

struct LimitCertificate {
  PeriodicPoint point;
  std::int64_t truncation_index = 0;  // K: finite products run over i = 0..K
  double even_partial = 1.0;          // P_K
  double odd_partial = 1.0;           // Q_K
  double tail_bound = 0.0;            // B: |log prod_{i>K} h(2i [+1])| <= B
  double p_error = 0.0;
  double q_error = 0.0;
  double pq_error = 0.0;
};

struct ProductBounds {
  double odd_upper;
  double even_upper;
  double odd_lower;
  double even_lower;
};

// B >= |log prod_{i>=k_from} h(2i)| and |log prod_{i>=k_from} h(2i+1)|.
// Uses |g(n)| <= C |a|^n for n >= 2 k_from with C from a lower bound on
// |D(n+1)|, and |log(1 - g)| <= 2|g| once |g| <= 1/2. Throws
// TailNotYetGeometric when either estimate is not yet available at k_from.
double tail_bound(const Params<double>& params, double alpha, std::int64_t k_from);

// Smallest N with sign D(n+1) = sign(alpha) for every n >= N (0 < |a| < 1,
// alpha != 0). From there on g(2k) and g(2k+1) each keep one sign, so both
// partial products are eventually monotone. Throws ResourceLimit if the sign
// has not settled by n = cap.
std::int64_t constant_sign_index(double a, double alpha, std::int64_t cap = 100000);

// Bounds on every partial product prod_{i<=k} h(2i+1) (odd) and
// prod_{i<=k} h(2i) (even); requires 0 < |a| < 1 and alpha > (1 - a)/2.
ProductBounds product_bounds(double a, double alpha);

// Certified (p, q): grows K until the tail bound is below tol/2 and the last
// factors are within tol/4 of 1, then further while the absolute error bound
// exceeds tol and the tail dominates rounding. Singular alpha = 1 - a returns
// the seed.
LimitCertificate limit_periodic_point(const Params<double>& params, const SeedPair<double>& seed,
                                      double tol, std::int64_t k_max = 1'000'000);

}  // namespace rde
