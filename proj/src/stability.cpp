#include "rde/stability.hpp"

#include <numeric>

#include "rde/parallel.hpp"

namespace rde {

ProbeReport periodic_stability_probe(const Params<double>& params, double p, double q,
                                     std::span<const double> delta_grid, std::int64_t n_max, unsigned threads) {
  validate_params(params);
  const double a = params.a;
  if (!(a != 0.0 && std::fabs(a) < 1.0))
    throw Error(Errc::NotPeriodicPoint, "probe needs 0 < |a| < 1");
  const double bpq = params.b * p * q;
  if (bpq == 0.0 || std::fabs(bpq - (1.0 - a)) > 1e-9 * std::max(1.0, std::fabs(1.0 - a)))
    throw Error(Errc::NotPeriodicPoint, "b p q != 1 - a");
  if (n_max < 1) throw Error(Errc::InvalidArgument, "n_max must be positive");

  ProbeReport report;
  report.n_max = n_max;
  report.rows = parallel_map(delta_grid.size(), threads, [&](std::size_t i) {
    const double delta = delta_grid[i];
    const Orbit<double> orbit = iterate(params, SeedPair<double>{p + delta, q + delta}, n_max);
    ProbeRow row;
    row.delta = delta;
    row.termination = orbit.termination();
    if (orbit.termination() != Termination::Completed) {
      row.sup_distance = row.final_distance = std::numeric_limits<double>::infinity();
      return row;
    }
    for (std::int64_t n = -1; n <= orbit.last_index(); ++n) {
      const double target = (n % 2 == 0) ? q : p;
      const double d = std::fabs(orbit[n] - target);
      row.sup_distance = std::max(row.sup_distance, d);
      if (n >= orbit.last_index() - 1) row.final_distance = std::max(row.final_distance, d);
    }
    return row;
  });

  std::vector<std::size_t> order(report.rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return std::fabs(report.rows[l].delta) < std::fabs(report.rows[r].delta);
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (report.rows[order[k]].sup_distance < report.rows[order[k - 1]].sup_distance)
      report.shrinks_with_delta = false;
  }
  return report;
}

}  // namespace rde
