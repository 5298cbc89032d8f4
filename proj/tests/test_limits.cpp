#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rde/limits.hpp"
#include "rde/orbit.hpp"

using namespace rde;

TEST(TailBound, PinnedWhenAlphaIsOneMinusA) {
  for (std::int64_t k : {1, 5, 100}) EXPECT_EQ(tail_bound(Params<double>{0.3, 1.0}, 0.7, k), 0.0);
}

TEST(TailBound, DominatesDirectSum) {
  const Params<double> params{0.5, 1.0};
  double prev = INFINITY;
  for (std::int64_t k = 1; k <= 30; ++k) {
    const double bound = tail_bound(params, 1.0, k);
    EXPECT_LT(bound, prev);
    prev = bound;
    double even = 0, odd = 0;
    for (std::int64_t i = k; i < k + 2000; ++i) {
      even += std::log(h_coeff(CoefficientQuery<double>{static_cast<std::uint64_t>(2 * i), 0.5, 1.0}));
      odd += std::log(h_coeff(CoefficientQuery<double>{static_cast<std::uint64_t>(2 * i + 1), 0.5, 1.0}));
    }
    EXPECT_LE(std::fabs(even), bound);
    EXPECT_LE(std::fabs(odd), bound);
  }
}

TEST(TailBound, Errors) {
  EXPECT_THROW(tail_bound(Params<double>{1.5, 1.0}, 1.0, 3), Error);
  EXPECT_THROW(tail_bound(Params<double>{0.5, 1.0}, 0.0, 3), Error);
  try {
    // D(n) passes near zero early: alpha close to forbidden values.
    tail_bound(Params<double>{0.9, 1.0}, -0.01, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TailNotYetGeometric);
  }
}

TEST(ProductBounds, Examples) {
  const auto pinned = product_bounds(0.25, 0.75);
  EXPECT_EQ(pinned.odd_upper, 1.0);
  EXPECT_EQ(pinned.even_upper, 1.0);
  EXPECT_EQ(pinned.odd_lower, 1.0);
  EXPECT_EQ(pinned.even_lower, 1.0);
  EXPECT_DOUBLE_EQ(product_bounds(0.5, 1.0).odd_upper, std::exp(2.0 / 3.0));
  EXPECT_DOUBLE_EQ(product_bounds(-0.5, 1.0).even_upper, std::exp(8.0 / 3.0));
  EXPECT_THROW(product_bounds(0.5, 0.2), Error);
  EXPECT_THROW(product_bounds(1.5, 2.0), Error);
}

namespace {

void expect_contained(double a, double alpha, std::int64_t k_max) {
  const auto bounds = product_bounds(a, alpha);
  CoefficientSequence<double> h(a, alpha);
  double even = 1, odd = 1;
  for (std::int64_t k = 0; k <= k_max; ++k) {
    even *= h.next();
    odd *= h.next();
    ASSERT_LE(even, bounds.even_upper) << "a=" << a << " alpha=" << alpha << " k=" << k;
    ASSERT_LE(odd, bounds.odd_upper) << "a=" << a << " alpha=" << alpha << " k=" << k;
    ASSERT_GE(even, bounds.even_lower) << "a=" << a << " alpha=" << alpha << " k=" << k;
    ASSERT_GE(odd, bounds.odd_lower) << "a=" << a << " alpha=" << alpha << " k=" << k;
  }
}

}  // namespace

TEST(ProductBounds, ContainPartialProducts) {
  oracle::Gen gen(61);
  for (int i = 0; i < 200; ++i) {
    const double a = gen.coin() ? gen.real(0.01, 0.99) : gen.real(-0.99, -0.01);
    const double alpha = (1 - a) / 2 + gen.real(1e-6, 3.0);
    expect_contained(a, alpha, 2000);
  }
}

// 0 < a < 1 with (1 - a)/2 < alpha < 1 - a: even products overshoot the
// exponent with the (1 + a) divisor, e.g. by 3% at the first pair below.
TEST(ProductBounds, PositiveASmallAlpha) {
  expect_contained(0.65032, 0.17648, 10000);
  oracle::Gen gen(62);
  for (int i = 0; i < 300; ++i) {
    const double a = gen.real(0.01, 0.99);
    expect_contained(a, gen.real((1 - a) / 2, 1 - a), 3000);
  }
}

TEST(Limit, Examples) {
  const auto c = limit_periodic_point(Params<double>{0.5, 1.0}, SeedPair<double>{1.0, 1.0}, 1e-10);
  EXPECT_LE(std::fabs(c.point.p * c.point.q - 0.5), std::max(c.pq_error, 1e-10));
  const auto o = iterate(Params<double>{0.5, 1.0}, SeedPair<double>{1.0, 1.0}, 100000);
  EXPECT_NEAR(c.point.p, o[99999], 1e-9);
  EXPECT_NEAR(c.point.q, o[100000], 1e-9);

  const auto m = limit_periodic_point(Params<double>{-0.5, 1.0}, SeedPair<double>{1.0, 1.0}, 1e-10);
  EXPECT_LE(std::fabs(m.point.p * m.point.q - 1.5), std::max(m.pq_error, 1e-10));
}

TEST(Limit, Errors) {
  EXPECT_THROW(limit_periodic_point(Params<double>{2.0, 1.0}, SeedPair<double>{1.0, 1.0}, 1e-10), Error);
  EXPECT_THROW(limit_periodic_point(Params<double>{0.5, 1.0}, SeedPair<double>{0.0, 1.0}, 1e-10), Error);
  EXPECT_THROW(limit_periodic_point(Params<double>{0.5, 1.0}, SeedPair<double>{1.0, 1.0}, 0.0), Error);
  const auto s = limit_periodic_point(Params<double>{0.5, 1.0}, SeedPair<double>{1.0, 0.5}, 1e-10);
  EXPECT_EQ(s.point.p, 1.0);
  EXPECT_EQ(s.point.q, 0.5);
}

// |p - x_{2K+1}| <= |x_{-1}| P_K (e^B - 1) and |pq - (1 - a)/b| <= err.
TEST(Limit, CertificateHolds) {
  oracle::Gen gen(63);
  for (int i = 0; i < 100; ++i) {
    const double a = gen.coin() ? gen.real(0.05, 0.95) : gen.real(-0.95, -0.05);
    const double b = gen.coin() ? gen.real(0.5, 2.0) : gen.real(-2.0, -0.5);
    const SeedPair<double> seed{gen.real(0.2, 2.0), gen.real(0.2, 2.0) * (gen.coin() ? 1 : -1)};
    const Params<double> params{a, b};
    if (!check_admissible(params, seed).regular()) continue;
    const auto c = limit_periodic_point(params, seed, 1e-10);
    EXPECT_LE(std::fabs(c.point.p * c.point.q - (1 - a) / b), std::max(c.pq_error, 1e-10));
    EXPECT_LE(c.pq_error, 1e-9);
    EXPECT_LE(c.p_error, 1e-9 * std::fabs(c.point.p));
    EXPECT_LE(c.q_error, 1e-9 * std::fabs(c.point.q));
    const auto o = iterate(params, seed, 2 * c.truncation_index + 1);
    const double x = o[2 * c.truncation_index + 1];
    EXPECT_LE(std::fabs(c.point.p - x), std::fabs(seed.x_prev) * std::fabs(c.even_partial) * std::expm1(c.tail_bound) +
                                            1e-12 * std::fabs(x));
  }
}

TEST(ConstantSign, MatchesScan) {
  oracle::Gen gen(64);
  for (int i = 0; i < 200; ++i) {
    const double a = gen.real(0.05, 0.98) * (gen.coin() ? 1 : -1);
    const double alpha = gen.coin() ? gen.real(-3.0, -1e-3) : gen.real(1e-3, 1 - a);
    const auto n0 = constant_sign_index(a, alpha);
    for (std::int64_t n = n0; n < n0 + 400; ++n) {
      const double d = riccati_denominator(a, alpha, static_cast<std::uint64_t>(n + 1));
      ASSERT_EQ(sign(d), sign(alpha)) << "a=" << a << " alpha=" << alpha << " n=" << n;
    }
    if (n0 > 0) {
      EXPECT_NE(sign(riccati_denominator(a, alpha, static_cast<std::uint64_t>(n0))), sign(alpha));
    }
  }
  EXPECT_EQ(constant_sign_index(0.5, 1.0), 0);
  EXPECT_THROW(constant_sign_index(0.9999999, -1e-300, 1000), Error);
}
