#include "rde/report.hpp"

namespace rde {

std::string_view to_string(Termination t) noexcept {
  switch (t) {
    case Termination::Completed: return "Completed";
    case Termination::SingularAt: return "SingularAt";
    case Termination::NonFiniteAt: return "NonFiniteAt";
  }
  return "?";
}

Json to_json(const AdmissibilityVerdict& v) {
  Json j{{"verdict", to_string(v)}, {"admissible", v.admissible()}, {"regular", v.regular()}};
  if (v.kind == VerdictKind::NonAdmissible || v.kind == VerdictKind::Undecided) j["step"] = v.step;
  return j;
}

Json to_json(const PeriodicPoint& p) {
  return Json{{"p", p.p}, {"q", p.q}, {"period", p.period}, {"error_bound", p.error_bound}};
}

Json to_json(const LimitCertificate& c) {
  return Json{{"point", to_json(c.point)},       {"truncation_index", c.truncation_index},
              {"even_partial", c.even_partial},  {"odd_partial", c.odd_partial},
              {"tail_bound", c.tail_bound},      {"p_error", c.p_error},
              {"q_error", c.q_error},            {"pq_error", c.pq_error}};
}

Json to_json(const StabilityVerdict& v) {
  static constexpr const char* verdicts[] = {"AsymptoticallyStable", "StableNotAsymptotically", "Unstable"};
  Json j{{"target", v.target == StabilityTarget::ZeroEquilibrium ? "ZeroEquilibrium" : "NonzeroPeriodic"},
         {"verdict", verdicts[static_cast<int>(v.verdict)]}};
  if (v.target == StabilityTarget::NonzeroPeriodic) {
    j["p"] = v.p;
    j["q"] = v.q;
  }
  if (v.eigenvalues) j["eigenvalues"] = Json::array({v.eigenvalues->first, v.eigenvalues->second});
  return j;
}

Json to_json(const ProbeReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"delta", row.delta},
                        {"sup_distance", to_json(row.sup_distance)},
                        {"final_distance", to_json(row.final_distance)},
                        {"termination", to_string(row.termination)}});
  return Json{{"kind", "empirical probe, not a proof"},
              {"n_max", r.n_max},
              {"shrinks_with_delta", r.shrinks_with_delta},
              {"rows", rows}};
}

}  // namespace rde
