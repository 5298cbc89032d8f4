#pragma once

// CSV and JSON renderings of orbits, verdicts and classifications. Exact
// scalars are written as "p/q" strings, floats as JSON numbers.

#include <optional>
#include <ostream>

#include <json.hpp>

#include "rde/classifier.hpp"
#include "rde/orbit.hpp"
#include "rde/stability.hpp"

namespace rde {

using Json = nlohmann::ordered_json;

inline Json to_json(double x) {
  if (!std::isfinite(x)) return Json(to_string(x));
  return Json(x);
}
inline Json to_json(const Rational& x) { return Json(to_string(x)); }

std::string_view to_string(Termination t) noexcept;

Json to_json(const AdmissibilityVerdict& v);
Json to_json(const LimitCertificate& c);
Json to_json(const PeriodicPoint& p);
Json to_json(const StabilityVerdict& v);
Json to_json(const ProbeReport& r);

template <Scalar T>
Json params_json(const Params<T>& params) {
  return Json{{"a", to_json(params.a)}, {"b", to_json(params.b)}};
}

template <Scalar T>
Json seed_json(const SeedPair<T>& seed) {
  return Json{{"x_prev", to_json(seed.x_prev)}, {"x_zero", to_json(seed.x_zero)}};
}

template <Scalar T>
void write_orbit_csv(std::ostream& out, const Orbit<T>& orbit) {
  out << "n,x\n";
  for (std::int64_t n = -1; n <= orbit.last_index(); ++n) out << n << ',' << to_string(orbit[n]) << '\n';
}

template <Scalar T>
Json orbit_json(const Orbit<T>& orbit) {
  Json terms = Json::array();
  for (const T& x : orbit.storage()) terms.push_back(to_json(x));
  Json term{{"kind", to_string(orbit.termination())}};
  if (orbit.termination() != Termination::Completed) term["step"] = orbit.failure_step();
  return Json{{"mode", to_string(mode_of<T>)},
              {"params", params_json(orbit.params())},
              {"seed", seed_json(orbit.seed())},
              {"termination", term},
              {"first_index", -1},
              {"terms", terms}};
}

template <Scalar T>
Json classify_report(const Params<T>& params, const SeedPair<T>& seed, const Behavior<T>& behavior) {
  Json b{{"class", to_string(behavior.kind)}};
  if (!behavior.cycle.empty()) {
    Json cycle = Json::array();
    for (const T& c : behavior.cycle) cycle.push_back(to_json(c));
    b["cycle"] = cycle;
    b["periodic_from"] = behavior.periodic_from;
  }
  if (behavior.limit) b["limit"] = to_json(*behavior.limit);
  if (behavior.tendencies) {
    Json t = Json::array();
    for (Tendency x : *behavior.tendencies) t.push_back(to_string(x));
    b["tendency_mod4"] = t;
  }

  Json cert{{"pq_product", nullptr}, {"tail_bound", nullptr}, {"eigenvalues", nullptr}};
  const bool two_cycle =
      behavior.kind == BehaviorClass::ExactlyTwoPeriodic || behavior.kind == BehaviorClass::ConvergesToTwoPeriodic;
  if (two_cycle && !is_zero(params.b)) {
    const double target = to_double(T((1 - params.a) / params.b));
    if (behavior.limit) {
      const auto& pt = behavior.limit->point;
      cert["pq_product"] = Json{{"value", pt.p * pt.q}, {"target", target}, {"error", behavior.limit->pq_error}};
      cert["tail_bound"] = behavior.limit->tail_bound;
    } else {
      const T pq = behavior.cycle[0] * behavior.cycle[1];
      cert["pq_product"] = Json{{"value", to_json(pq)}, {"target", target}, {"error", 0.0}};
    }
    if (!is_zero(params.a)) {
      try {
        if (behavior.limit) {
          const auto [lo, hi] = period2_jacobian_eigs(to_float(params), behavior.limit->point.p,
                                                      behavior.limit->point.q, 1e-6);
          cert["eigenvalues"] = Json::array({lo, hi});
        } else {
          const auto [lo, hi] = period2_jacobian_eigs(params, behavior.cycle[0], behavior.cycle[1]);
          cert["eigenvalues"] = Json::array({to_json(lo), to_json(hi)});
        }
      } catch (const Error&) {
        // left null: eigenvalues not available in closed form
      }
    }
  }

  return Json{{"mode", to_string(mode_of<T>)},
              {"params", params_json(params)},
              {"seed", seed_json(seed)},
              {"alpha", to_json(behavior.alpha)},
              {"admissibility", to_json(behavior.admissibility)},
              {"behavior", b},
              {"certificates", cert}};
}

}  // namespace rde
