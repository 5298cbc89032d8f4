// End-to-end acceptance checks. One line per criterion:
//   [PASS] 03 limit product ... (1.2 s)
// Usage: acceptance [--only N]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "rde/classifier.hpp"
#include "rde/limits.hpp"
#include "rde/orbit.hpp"
#include "rde/stability.hpp"
#include "rde/sweep.hpp"

using namespace rde;
using Q = Rational;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit;  // seconds, 0 = none
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Admissible (a, b, seed) with a drawn from |a| < 1, |a| = 1 or |a| > 1 in
// turn and b from {-1, 0, 1}.
struct Case {
  Params<Q> params;
  SeedPair<Q> seed;
};

std::vector<Case> oracle_corpus() {
  oracle::Gen gen(1001);
  std::vector<Case> out;
  while (out.size() < 1000) {
    Q a;
    switch (out.size() % 3) {
      case 0: a = gen.rational_in(Q(-1), Q(1), static_cast<long>(gen.integer(2, 9))); break;
      case 1: a = gen.coin() ? Q(1) : Q(-1); break;
      default: {
        a = Q(gen.integer(10, 40), gen.integer(1, 9));
        if (a <= 1) continue;
        if (gen.coin()) a = -a;
      }
    }
    a.canonicalize();
    const Q b(gen.integer(-1, 1));
    if (a == 0 && b == 0) continue;
    const SeedPair<Q> seed{gen.rational(5, 4), gen.rational(5, 4)};
    if (!check_admissible(Params<Q>{a, b}, seed).admissible()) continue;
    out.push_back({{a, b}, seed});
  }
  return out;
}

Outcome oracle_exact() {
  const auto corpus = oracle_corpus();
  std::size_t compared = 0;
  for (const auto& c : corpus) {
    const auto orbit = iterate(c.params, c.seed, 100);
    if (orbit.termination() != Termination::Completed)
      return {false, "admissible seed hit a zero denominator: a=" + to_string(c.params.a)};
    const auto cf = closed_form_terms(c.params, c.seed, 100);
    for (std::int64_t n = -1; n <= 100; ++n) {
      if (cf[static_cast<std::size_t>(n + 1)] != orbit[n])
        return {false, "mismatch at a=" + to_string(c.params.a) + " b=" + to_string(c.params.b) +
                           " n=" + std::to_string(n)};
      ++compared;
    }
  }
  return {true, std::to_string(corpus.size()) + " cases, " + std::to_string(compared) + " terms equal"};
}

Outcome oracle_float() {
  const auto corpus = oracle_corpus();
  double worst = 0;
  std::size_t compared = 0;
  for (const auto& c : corpus) {
    const Params<double> p = to_float(c.params);
    const SeedPair<double> s = to_float(c.seed);
    const auto orbit = iterate(p, s, 200);
    const auto cf = closed_form_terms(p, s, 200);
    for (std::int64_t n = -1; n <= orbit.last_index(); ++n) {
      const double x = orbit[n];
      if (std::fabs(x) < 1e-280 || !std::isfinite(x)) continue;
      worst = std::max(worst, oracle::rel_err(cf[static_cast<std::size_t>(n + 1)], x));
      ++compared;
    }
  }
  return {worst <= 1e-9, std::to_string(compared) + " terms, max rel err " + fmt("%.3g", worst) + " (limit 1e-9)"};
}

Outcome limit_product() {
  oracle::Gen gen(1003);
  int done = 0;
  double worst_excess = -1;
  double worst_err = 0;
  double worst_rel = 0;
  std::int64_t worst_k = 0;
  std::string failure;
  while (done < 100) {
    const double a = gen.real(0.01, 0.99) * (gen.coin() ? 1 : -1);
    const double b = gen.real(0.25, 4.0) * (gen.coin() ? 1 : -1);
    const SeedPair<double> seed{gen.real(0.1, 3.0) * (gen.coin() ? 1 : -1), gen.real(0.1, 3.0) * (gen.coin() ? 1 : -1)};
    const Params<double> params{a, b};
    if (!check_admissible(params, seed).regular()) continue;
    ++done;
    try {
      const auto c = limit_periodic_point(params, seed, 1e-10, 5000);
      const double dev = std::fabs(c.point.p * c.point.q - (1 - a) / b);
      worst_excess = std::max(worst_excess, dev - std::max(c.pq_error, 1e-10));
      worst_err = std::max(worst_err, c.pq_error);
      worst_rel = std::max({worst_rel, c.p_error / std::fabs(c.point.p), c.q_error / std::fabs(c.point.q)});
      worst_k = std::max(worst_k, c.truncation_index);
    } catch (const Error& e) {
      if (failure.empty()) failure = std::string(e.what()) + " at a=" + fmt("%.17g", a);
    }
  }
  const bool pass = failure.empty() && worst_excess <= 0 && worst_err <= 1e-10 && worst_k <= 5000;
  // err is the certified bound on p q; p and q themselves carry relative bounds
  // (|q| reaches 1e54 for some a < 0, alpha < 0 seeds).
  std::string detail = "100 seeds, max pq err " + fmt("%.3g", worst_err) + ", max rel p/q err " +
                       fmt("%.3g", worst_rel) + ", max K " + std::to_string(worst_k) +
                       ", max |pq - (1-a)/b| - max(err,1e-10) = " + fmt("%.3g", worst_excess);
  if (!failure.empty()) detail += "; " + failure;
  return {pass, detail};
}

Outcome dalembert() {
  oracle::Gen gen(1004);
  int done = 0;
  double worst = 0;
  while (done < 50) {
    const double a = gen.real(1.1, 4.0) * (gen.coin() ? 1 : -1);
    const double b = gen.real(0.25, 4.0) * (gen.coin() ? 1 : -1);
    const SeedPair<double> seed{gen.real(0.1, 3.0) * (gen.coin() ? 1 : -1), gen.real(0.1, 3.0) * (gen.coin() ? 1 : -1)};
    const Params<double> params{a, b};
    if (!check_admissible(params, seed).regular()) continue;
    ++done;
    const auto o = iterate(params, seed, 501);
    if (o.termination() != Termination::Completed) return {false, "orbit failed at a=" + fmt("%.17g", a)};
    worst = std::max(worst, std::fabs(std::fabs(o[501] / o[499]) - 1.0 / std::fabs(a)));
  }
  return {worst <= 1e-6, "50 cases, max | |x501/x499| - 1/|a| | = " + fmt("%.3g", worst) + " (limit 1e-6)"};
}

Outcome a_one_decay() {
  oracle::Gen gen(1005);
  int done = 0;
  double worst = 0;
  while (done < 20) {
    const double b = gen.real(0.25, 4.0) * (gen.coin() ? 1 : -1);
    const SeedPair<double> seed{gen.real(0.2, 2.0) * (gen.coin() ? 1 : -1), gen.real(0.2, 2.0) * (gen.coin() ? 1 : -1)};
    const Params<double> params{1.0, b};
    if (!check_admissible(params, seed).regular()) continue;
    ++done;
    const auto o = iterate(params, seed, 10000);
    if (o.termination() != Termination::Completed) return {false, "orbit failed"};
    const double y = o[10000] * o[9999];
    worst = std::max(worst, std::fabs(1e4 * b * y - 1.0));
  }
  return {worst <= 0.05, "20 cases, max |n b y_n - 1| at n=1e4 = " + fmt("%.3g", worst) + " (limit 0.05)"};
}

Outcome minus_one_taxonomy() {
  struct Rep {
    const char* region;
    Q x_prev, x_zero;
  };
  // b = 1, so alpha = x_prev x_zero.
  const std::vector<Rep> reps{{"alpha>2", 1, 3},        {"alpha=2", 1, 2}, {"1<alpha<2", -1, Q(-3, 2)},
                              {"0<alpha<1", 1, Q(1, 2)}, {"alpha=0", 0, 2}, {"alpha<0", 1, Q(-1, 2)}};
  std::ostringstream detail;
  bool pass = true;
  for (const auto& r : reps) {
    const Params<Q> params{-1, 1};
    const SeedPair<Q> seed{r.x_prev, r.x_zero};
    const auto beh = classify(params, seed);
    bool ok = true;
    if (beh.tendencies) {
      const auto o = iterate(to_float(params), to_float(seed), 2000);
      ok = o.termination() == Termination::Completed;
      for (std::int64_t n = 1997; ok && n <= 2000; ++n) {
        const Tendency t = (*beh.tendencies)[static_cast<std::size_t>(n % 4)];
        if (t == Tendency::Zero)
          ok = std::fabs(o[n]) < 1e-6;
        else
          ok = o[n] * (t == Tendency::PlusInfinity ? 1 : -1) > 1e6;
      }
    } else if (!beh.cycle.empty()) {
      const auto o = iterate(params, seed, 2000);
      const auto period = static_cast<std::int64_t>(beh.cycle.size());
      ok = o.termination() == Termination::Completed;
      for (std::int64_t n = period - 1; ok && n <= 2000; ++n) ok = o[n] == o[n - period];
      // cycle = {x_1, .., x_4} for period 4, {p, q} = {x_{-1}, x_0} for period 2.
      const std::int64_t first = period == 4 ? 1 : -1;
      for (std::int64_t i = 0; ok && i < period; ++i) ok = o[first + i] == beh.cycle[static_cast<std::size_t>(i)];
    } else {
      ok = false;
    }
    pass = pass && ok;
    detail << r.region << "=" << to_string(beh.kind) << (ok ? "" : "(MISMATCH)") << " ";
  }
  return {pass, detail.str()};
}

Outcome product_bounds_hold() {
  oracle::Gen gen(1007);
  std::int64_t violations = 0;
  std::string first;
  for (int i = 0; i < 200; ++i) {
    double a = 0;
    while (a == 0) a = gen.real(-0.99, 0.99);
    const double alpha = (1 - a) / 2 + gen.real(1e-6, 3.0);
    const auto bounds = product_bounds(a, alpha);
    CoefficientSequence<double> h(a, alpha);
    double even = 1, odd = 1;
    for (int k = 0; k <= 10000; ++k) {
      even *= h.next();
      odd *= h.next();
      const bool bad = even > bounds.even_upper || odd > bounds.odd_upper || even < bounds.even_lower ||
                       odd < bounds.odd_lower;
      if (bad) {
        ++violations;
        if (first.empty()) first = " first at a=" + fmt("%.6g", a) + " alpha=" + fmt("%.6g", alpha);
      }
    }
  }
  return {violations == 0, "200 (a, alpha) pairs, k <= 1e4, violations " + std::to_string(violations) + first};
}

Outcome eigenvalues() {
  oracle::Gen gen(1008);
  double dev_a = 0, dev_a2 = 0, dev_one = 0, dev_fd = 0;
  for (int i = 0; i < 100; ++i) {
    const double a = gen.real(0.05, 0.95) * (gen.coin() ? 1 : -1);
    const double b = gen.real(0.5, 2.0) * (gen.coin() ? 1 : -1);
    const double p = gen.real(0.3, 2.0) * (gen.coin() ? 1 : -1);
    const double q = (1 - a) / (b * p);
    const Params<double> params{a, b};
    const auto [lo, hi] = period2_jacobian_eigs(params, p, q);
    // The eigenvalue different from 1.
    const double other = std::fabs(lo - 1) > std::fabs(hi - 1) ? lo : hi;
    const double unit = other == lo ? hi : lo;
    dev_a = std::max(dev_a, std::fabs(other - a));
    dev_a2 = std::max(dev_a2, std::fabs(other - a * a));
    dev_one = std::max(dev_one, std::fabs(unit - 1));

    const auto f2 = [&](double u, double v) { return step_map(params, step_map(params, Vector2<double>(u, v))); };
    const double h = 1e-6;
    Eigen::Matrix2d fd;
    fd.col(0) = (f2(p + h, q) - f2(p - h, q)) / (2 * h);
    fd.col(1) = (f2(p, q + h) - f2(p, q - h)) / (2 * h);
    const Eigen::Matrix2d an = period2_jacobian(params, p, q);
    dev_fd = std::max(dev_fd, (fd - an).cwiseAbs().maxCoeff() / std::max(1.0, an.cwiseAbs().maxCoeff()));
  }
  const bool claim = dev_a <= 1e-9 && dev_one <= 1e-9;
  const bool fd_ok = dev_fd <= 1e-6;
  return {claim && fd_ok, "100 points; max |lambda - a| = " + fmt("%.3g", dev_a) + " (claim {a,1} " +
                              (claim ? "holds" : "FAILS") + "), max |lambda - a^2| = " + fmt("%.3g", dev_a2) +
                              ", max |mu - 1| = " + fmt("%.3g", dev_one) + ", finite-difference Jacobian dev " +
                              fmt("%.3g", dev_fd) + (fd_ok ? " ok" : " FAILS")};
}

Outcome zero_table() {
  struct Row {
    const char* regime;
    Params<Q> params;
    Stability want;
  };
  const std::vector<Row> rows{{"|a|>1", {Q(5, 2), 1}, Stability::AsymptoticallyStable},
                              {"|a|>1", {-3, Q(1, 2)}, Stability::AsymptoticallyStable},
                              {"a=1,b!=0", {1, -2}, Stability::AsymptoticallyStable},
                              {"a=1,b=0", {1, 0}, Stability::StableNotAsymptotically},
                              {"|a|<1", {Q(1, 2), 1}, Stability::Unstable},
                              {"|a|<1", {Q(-1, 3), 1}, Stability::Unstable},
                              {"a=-1", {-1, 1}, Stability::Unstable}};
  bool pass = true;
  std::string bad;
  for (const auto& r : rows) {
    if (zero_stability(r.params).verdict != r.want) {
      pass = false;
      bad += std::string(" ") + r.regime;
    }
  }
  return {pass, pass ? "five regimes reproduced" : "mismatch in" + bad};
}

Outcome bifurcation() {
  SweepConfig fig1;
  fig1.a_min = 0;
  fig1.a_max = 4;
  fig1.step = Q(1, 200);
  fig1.b = -1;
  fig1.seed = {1, 2};
  const auto samples = sweep(fig1);

  const auto exact = iterate(Params<Q>{3, -1}, SeedPair<Q>{1, 2}, 400);
  std::size_t at3 = 0;
  bool alternating = true;
  for (const auto& s : samples) {
    if (s.a != 3.0) continue;
    ++at3;
    const Q want = s.n % 2 == 0 ? Q(2) : Q(1);
    alternating = alternating && s.flag == SampleFlag::Ok && *s.x == to_double(want) && exact[s.n] == want;
  }
  bool exact_periodic = exact.termination() == Termination::Completed;
  for (std::int64_t n = 1; exact_periodic && n <= 400; ++n) exact_periodic = exact[n] == exact[n - 2];

  SweepConfig fig2;
  fig2.a_min = Q(-1001, 1000);
  fig2.a_max = Q(-999, 1000);
  fig2.step = Q(1, 10000);
  fig2.b = -1;
  fig2.seed = {1, -2};
  fig2.iters = 1600;
  fig2.keep_from = 1500;
  double left = 0, right = 0;
  bool left_ok = true, right_ok = true;
  for (const auto& s : sweep(fig2)) {
    auto& side = s.a < -1.0 ? left : right;
    auto& ok = s.a < -1.0 ? left_ok : right_ok;
    if (s.flag != SampleFlag::Ok) {
      ok = false;
      continue;
    }
    side = std::max(side, std::fabs(*s.x));
  }
  const bool bounded = left_ok && right_ok && left <= 100 && right <= 100;
  return {at3 == 51 && alternating && exact_periodic && bounded,
          "fig1: " + std::to_string(samples.size()) + " samples, a=3 column " + std::to_string(at3) +
              (alternating ? " alternates 2,1" : " does NOT alternate") +
              (exact_periodic ? ", exact orbit 2-periodic" : ", exact orbit not periodic") +
              "; fig2 window [-1.001,-0.999]: max|x| left " + fmt("%.3g", left) + ", right " + fmt("%.3g", right) +
              (bounded ? " (bounded <= 100)" : " (UNBOUNDED)")};
}

Outcome admissibility_sound() {
  oracle::Gen gen(1011);
  int constructed = 0, hits = 0, fp = 0, fn = 0, wrong_step = 0;
  for (int i = 0; i < 500; ++i) {
    Q a;
    switch (i % 4) {
      case 0: a = gen.rational_in(Q(-1), Q(1), static_cast<long>(gen.integer(2, 7))); break;
      case 1: a = gen.pick(std::vector<Q>{Q(1), Q(-1), Q(0)}); break;
      default: a = Q(gen.integer(-15, 15), gen.integer(1, 5)); a.canonicalize();
    }
    const Q b = gen.nonzero_rational(3, 2);
    const Q x0 = gen.nonzero_rational(4, 3);
    Q xm1 = gen.rational(4, 3);
    if (i % 10 == 0) {
      for (;;) {
        const auto n = gen.integer(1, 40);
        if (auto fa = forbidden_alpha(a, n)) {
          xm1 = *fa / (b * x0);
          break;
        }
        a = Q(gen.integer(2, 9), gen.integer(1, 3));
      }
      ++constructed;
    }
    const Params<Q> params{a, b};
    const SeedPair<Q> seed{xm1, x0};
    const auto v = check_admissible(params, seed);
    // The denominators a + b x_n x_{n-1} only depend on y_n = x_n x_{n-1};
    // iterating y keeps the exact numbers small over 500 steps.
    const auto m = oracle::riccati_zero_step(a, b, xm1 * x0, 500);
    if (i % 25 == 0) {
      const auto direct = iterate(params, seed, 60);
      const std::int64_t direct_m = direct.termination() == Termination::SingularAt ? direct.failure_step() : 0;
      if (direct_m != (m <= 60 ? m : 0)) ++wrong_step;
    }
    const bool says = v.kind == VerdictKind::NonAdmissible && v.step <= 500;
    if (m != 0) ++hits;
    if (says && m == 0) ++fp;
    if (!says && m != 0) ++fn;
    if (says && m != 0 && v.step != m) ++wrong_step;
  }
  return {fp == 0 && fn == 0 && wrong_step == 0 && constructed >= 50,
          "500 seeds (" + std::to_string(constructed) + " constructed), " + std::to_string(hits) +
              " hit a zero denominator; false positives " + std::to_string(fp) + ", false negatives " +
              std::to_string(fn) + ", wrong steps " + std::to_string(wrong_step)};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence (exact)", 60, oracle_exact},
      {2, "oracle equivalence (float)", 10, oracle_float},
      {3, "limit product pq = (1-a)/b", 30, limit_product},
      {4, "ratio test for |a| > 1", 0, dalembert},
      {5, "a = 1 decay rate", 0, a_one_decay},
      {6, "a = -1 taxonomy", 0, minus_one_taxonomy},
      {7, "product bounds", 0, product_bounds_hold},
      {8, "period-2 eigenvalues", 0, eigenvalues},
      {9, "zero stability table", 0, zero_table},
      {10, "bifurcation reproduction", 120, bifurcation},
      {11, "admissibility soundness", 0, admissibility_sound},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs > c.time_limit) {
      out.pass = false;
      out.detail += "; over time limit " + fmt("%.0f s", c.time_limit);
    }
    std::printf("[%s] %02d %s: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), secs);
    failed += !out.pass;
  }
  return failed == 0 ? 0 : 1;
}
