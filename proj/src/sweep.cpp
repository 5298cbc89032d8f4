#include "rde/sweep.hpp"

#include <cstdio>

#include "rde/orbit.hpp"
#include "rde/parallel.hpp"

namespace rde {

void validate_config(const SweepConfig& cfg) {
  if (cfg.a_min > cfg.a_max) throw Error(Errc::InvalidArgument, "a_min must not exceed a_max");
  if (sgn(cfg.step) <= 0) throw Error(Errc::InvalidArgument, "step must be positive");
  if (cfg.iters <= 0) throw Error(Errc::InvalidArgument, "iters must be positive");
  if (cfg.keep_from < 0 || cfg.keep_from >= cfg.iters)
    throw Error(Errc::InvalidArgument, "keep_from must lie in [0, iters)");
}

std::int64_t grid_size(const SweepConfig& cfg) {
  const Rational span = (cfg.a_max - cfg.a_min) / cfg.step;
  mpz_class count;
  mpz_fdiv_q(count.get_mpz_t(), span.get_num_mpz_t(), span.get_den_mpz_t());
  if (!count.fits_slong_p() || count >= 100'000'000)
    throw Error(Errc::ResourceLimit, "grid has too many points");
  return count.get_si() + 1;
}

double grid_point(const SweepConfig& cfg, std::int64_t k) {
  return to_double(Rational(cfg.a_min + Rational(static_cast<long>(k)) * cfg.step));
}

std::string_view to_string(SampleFlag flag) noexcept {
  switch (flag) {
    case SampleFlag::Ok: return "ok";
    case SampleFlag::Singular: return "singular";
    case SampleFlag::NonFinite: return "non_finite";
  }
  return "?";
}

std::vector<BifurcationSample> sweep(const SweepConfig& cfg) {
  validate_config(cfg);
  const std::int64_t count = grid_size(cfg);
  const double b = to_double(cfg.b);
  const SeedPair<double> seed = to_float(cfg.seed);

  auto columns = parallel_map(static_cast<std::size_t>(count), cfg.threads, [&](std::size_t k) {
    const double a = grid_point(cfg, static_cast<std::int64_t>(k));
    std::vector<BifurcationSample> col;
    if (a == 0.0 && b == 0.0) {
      col.push_back({a, 1, std::nullopt, SampleFlag::Singular});
      return col;
    }
    const Orbit<double> orbit = iterate(Params<double>{a, b}, seed, cfg.iters);
    for (std::int64_t n = cfg.keep_from; n <= orbit.last_index(); ++n)
      col.push_back({a, n, orbit[n], SampleFlag::Ok});
    if (orbit.termination() != Termination::Completed) {
      const SampleFlag flag =
          orbit.termination() == Termination::SingularAt ? SampleFlag::Singular : SampleFlag::NonFinite;
      col.push_back({a, orbit.failure_step(), std::nullopt, flag});
    }
    return col;
  });

  std::vector<BifurcationSample> out;
  for (auto& col : columns) out.insert(out.end(), col.begin(), col.end());
  return out;
}

void emit_csv(std::ostream& out, const std::vector<BifurcationSample>& samples) {
  out << "a,n,x,flag\n";
  char a_buf[32], x_buf[32];
  for (const auto& s : samples) {
    std::snprintf(a_buf, sizeof a_buf, "%.17g", s.a);
    out << a_buf << ',' << s.n << ',';
    if (s.x) {
      std::snprintf(x_buf, sizeof x_buf, "%.17g", *s.x);
      out << x_buf;
    }
    out << ',' << to_string(s.flag) << '\n';
  }
  if (!out) throw Error(Errc::IoError, "CSV write failed");
}

}  // namespace rde
