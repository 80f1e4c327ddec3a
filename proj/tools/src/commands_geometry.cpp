#include "commands.hpp"
#include "inputs.hpp"
#include "s2s2/kkr.hpp"
#include "s2s2/quat_geom.hpp"

namespace s2s2::cli {

namespace {

Json point_json(const geom::S2Point& p) { return Json::array({p.x(), p.y(), p.z()}); }

Json product_json(const geom::ProductPoint& p) {
  return {{"first", point_json(p.first)}, {"second", point_json(p.second)}};
}

Json action_json(const geom::ActionReport& r) {
  return {{"action", r.action},
          {"orders", r.orders},
          {"order_ok", r.order_ok},
          {"max_order_error", r.max_order_error},
          {"commutes", r.commutes},
          {"max_commutator_error", r.max_commutator_error},
          {"min_displacement", r.min_displacement},
          {"worst_point", product_json(r.worst_point)},
          {"worst_element", r.worst_element},
          {"certified_lower_bound", r.certified_lower_bound},
          {"lipschitz", r.lipschitz},
          {"lipschitz_exact", r.lipschitz_exact},
          {"covering_radius", r.covering_radius},
          {"free", r.free},
          {"samples", r.samples},
          {"seed", r.seed}};
}

kkr::SolveOptions solve_options(const Settings& s) {
  kkr::SolveOptions o;
  o.grid = s.grid;
  return o;
}

}  // namespace

Report run_verify_actions(const VerifyArgs& a, const Settings& s) {
  Report rep("verify-actions", "free-actions", s);
  if (a.grid < 4) throw MalformedInput("--grid must be at least 4");
  geom::VerifyOptions opts{a.samples, s.seed, a.grid};
  rep.inputs() = {{"action", a.action}, {"samples", a.samples}, {"displacement_grid", a.grid}};
  std::vector<const geom::RegisteredAction*> chosen;
  if (a.action == "all") {
    for (const auto& act : geom::registered_actions())
      if (act.name != "identity") chosen.push_back(&act);
  } else {
    try {
      chosen.push_back(&geom::find_action(a.action));
    } catch (const Error& e) {
      throw MalformedInput(e.what());
    }
  }
  Json reports = Json::array();
  for (const auto* act : chosen) {
    auto r = geom::verify_action(*act, opts);
    reports.push_back(action_json(r));
    rep.claim(act->name + ".free", r.free, r.lipschitz_exact ? "computed" : "assumption");
    rep.claim(act->name + ".certified_lower_bound", r.certified_lower_bound,
              r.lipschitz_exact ? "computed" : "assumption");
  }
  rep.results()["actions"] = reports;
  return rep;
}

Report run_cover_check(const CoverArgs& a, const Settings& s) {
  Report rep("cover-check", "covering-map", s);
  rep.inputs() = {{"samples", a.samples}};
  auto r = geom::covering_check(a.samples, s.seed, s.tolerance);
  rep.results() = {{"samples", r.samples},
                   {"seed", r.seed},
                   {"max_c0_error", r.max_c0_error},
                   {"max_sign_error", r.max_sign_error},
                   {"max_lift_error", r.max_lift_error},
                   {"max_injectivity_error", r.max_injectivity_error},
                   {"lift_order", r.lift_order},
                   {"lift_fourth_power_identity", r.lift_fourth_power_identity},
                   {"boundary_commutation_error", geom::boundary_commutation_error(1000, s.seed)}};
  rep.claim("max_lift_error", r.max_lift_error, "computed");
  rep.claim("lift_order", r.lift_order, "computed");
  return rep;
}

Report run_kkr(const KkrArgs& a, const Settings& s) {
  const auto opts = solve_options(s);
  if (a.table) {
    Report rep("kkr --table", "kkr-distinction", s);
    auto t = kkr::distinguish_quotients(opts);
    Json rows = Json::array();
    for (const auto& r : t.rows) {
      Json q = Json::object();
      const char* classes[] = {"x", "y", "x+y"};
      for (std::size_t i = 0; i < r.q_values.size(); ++i)
        q[classes[i]] = r.q_values[i] ? Json(*r.q_values[i]) : Json(nullptr);
      rows.push_back({{"quotient", r.quotient}, {"v2_nonzero", r.v2_nonzero}, {"v2_source", r.v2_source},
                      {"v2_class", r.v2_class}, {"q", q}});
      rep.claim(r.quotient + ".v2_nonzero", r.v2_nonzero, r.v2_source == "ring" ? "computed" : "reference");
    }
    rep.results() = {{"rows", rows}, {"pairwise_distinct", t.pairwise_distinct}};
    rep.claim("pairwise_distinct", t.pairwise_distinct, "computed");
    return rep;
  }
  if (a.quotient.empty() || a.cls.empty()) throw MalformedInput("kkr needs --quotient and --class, or --table");
  if (!(a.eps > 0 && a.eps < 1)) throw MalformedInput("--eps must lie in (0, 1)");
  Report rep("kkr", "kkr/" + a.quotient, s);
  kkr::ImmersedSphere sphere;
  try {
    sphere = kkr::immersion(kkr::parse_quotient(a.quotient), a.cls, a.eps);
  } catch (const Error& e) {
    throw MalformedInput(e.what());
  }
  rep.inputs() = {{"quotient", a.quotient}, {"class", a.cls}, {"eps", a.eps}};
  auto r = kkr::double_points(sphere, opts);
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json j = {{"parameter", point_json(w.parameter)},
              {"partner", point_json(w.partner)},
              {"residual", w.residual},
              {"min_singular_value", w.min_singular_value}};
    j["disc"] = w.disc ? Json{{"r", w.disc->r}, {"t", w.disc->t}} : Json(nullptr);
    witnesses.push_back(j);
  }
  const int q = kkr::q_kkr(sphere, opts);
  rep.results() = {{"quotient", r.quotient},
                   {"class", r.cls},
                   {"description", sphere.description},
                   {"euler_number", r.euler_number},
                   {"double_points", r.count},
                   {"witnesses", witnesses},
                   {"grid", r.grid},
                   {"candidates", r.candidates},
                   {"discarded", r.discarded},
                   {"q", q}};
  rep.claim("euler_number", r.euler_number, "reference");
  rep.claim("double_points", r.count, "computed");
  rep.claim("q", q, "computed");
  return rep;
}

}  // namespace s2s2::cli
