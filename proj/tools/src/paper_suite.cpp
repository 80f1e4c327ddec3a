#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "inputs.hpp"
#include "s2s2/ahss.hpp"
#include "s2s2/catalog.hpp"
#include "s2s2/gamma_quadratic.hpp"
#include "s2s2/kkr.hpp"
#include "s2s2/quat_geom.hpp"
#include "s2s2_cli/cli.hpp"

namespace s2s2::cli {

namespace {

using homalg::FiniteAbelianGroup;
using linalg::IntMatrix;
using Evaluator = std::function<Json(const Settings&)>;

const FiniteAbelianGroup& z4() {
  static const FiniteAbelianGroup g = FiniteAbelianGroup::cyclic(4);
  return g;
}

const FiniteAbelianGroup& z2z2() {
  static const FiniteAbelianGroup g({2, 2});
  return g;
}

Json cohomology_list(const homalg::GroupModule& m, const std::vector<int>& degrees) {
  Json out = Json::array();
  for (int n : degrees) out.push_back(homalg::group_cohomology(z4(), m, static_cast<std::size_t>(n)).to_string());
  return out;
}

std::string ring_element_name(const homalg::GroupRingElement& a) {
  if (a == homalg::GroupRingElement{-1, 1, 0, 0}) return "t-1";
  if (a == homalg::GroupRingElement{1, 1, 1, 1}) return "N";
  std::ostringstream os;
  for (long c : a) os << c << ' ';
  return os.str();
}

ahss::BordismInput z4_bordism() {
  auto r = ring::build_ring(catalog::z4_group_ring());
  return ahss::BordismInput{z4(), r, r.parse_class("x"), r.parse_class("u"), {-1}};
}

std::string pq(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

gamma::GammaModule rp2xrp2_gamma() { return gamma::gamma_functor(z2z2(), catalog::rp2xrp2_pi2(), {-1, -1}); }

kkr::SolveOptions solve(const Settings& s) {
  kkr::SolveOptions o;
  o.grid = s.grid;
  return o;
}

std::size_t count(kkr::Quotient q, const std::string& cls, const Settings& s) {
  return kkr::double_points(kkr::immersion(q, cls), solve(s)).count;
}

int q_of(kkr::Quotient q, const std::string& cls, const Settings& s) {
  return kkr::q_kkr(kkr::immersion(q, cls), solve(s));
}

const std::map<std::string, Evaluator>& evaluators() {
  static const std::map<std::string, Evaluator> m = {
      {"resolution.z4.shape",
       [](const Settings&) {
         auto res = homalg::resolution(z4(), 2);
         return Json{{"ranks", res->ranks},
                     {"boundaries",
                      {ring_element_name(res->boundaries[1][0][0]), ring_element_name(res->boundaries[2][0][0])}}};
       }},
      {"homalg.z4.pi2.h0", [](const Settings&) { return cohomology_list(catalog::z4_pi2(), {0})[0]; }},
      {"homalg.z4.pi2.odd", [](const Settings&) { return cohomology_list(catalog::z4_pi2(), {1, 3, 5}); }},
      {"homalg.z4.pi2.even", [](const Settings&) { return cohomology_list(catalog::z4_pi2(), {2, 4, 6}); }},
      {"homalg.z4.pi3.pattern",
       [](const Settings&) { return cohomology_list(catalog::z4_pi3(), {1, 2, 3, 4, 5, 6}); }},
      {"homalg.rp2xrp2.pi2.h2",
       [](const Settings&) { return Json(homalg::group_cohomology(z2z2(), catalog::rp2xrp2_pi2(), 2).to_string()); }},
      {"homalg.z4.twisted-z.homology",
       [](const Settings&) {
         auto m = homalg::GroupModule::twisted_integers(z4(), {-1});
         Json out = Json::array();
         for (std::size_t p = 0; p <= 6; ++p) out.push_back(homalg::group_homology(z4(), m, p).to_string());
         return out;
       }},
      {"homalg.z4.f2.h2",
       [](const Settings&) {
         return Json(homalg::group_homology(z4(), homalg::GroupModule::trivial_cyclic(z4(), 2), 2).to_string());
       }},
      {"ring.wx.top",
       [](const Settings&) {
         auto r = ring::build_ring(catalog::rp2_twisted_rp2_wx_ring());
         return Json{{"top_dimension", r.dimension(4)}, {"poincare_duality", r.poincare_duality()}};
       }},
      {"ring.z4.dimensions", [](const Settings&) { return Json(ring::build_ring(catalog::z4_group_ring()).dimensions()); }},
      {"ring.z4.x-squared",
       [](const Settings&) {
         auto r = ring::build_ring(catalog::z4_group_ring());
         return Json(r.to_string(r.cup(r.parse_class("x"), r.parse_class("x"))));
       }},
      {"ring.wx.relation",
       [](const Settings&) {
         auto r = ring::build_ring(catalog::rp2_twisted_rp2_wx_ring());
         return Json(r.to_string(r.parse_class("w^2*x + w^3")));
       }},
      {"ring.z4.sq1-u",
       [](const Settings&) {
         auto r = ring::build_ring(catalog::z4_group_ring());
         return Json(r.to_string(r.sq(1, r.parse_class("u"))));
       }},
      {"ring.rp2xrp2.wu",
       [](const Settings&) {
         auto r = ring::build_ring(catalog::rp2xrp2_ring());
         return Json{{"v1", r.to_string(r.wu_class(1))}, {"v2", r.to_string(r.wu_class(2))}};
       }},
      {"ring.rp2-twisted-rp2.wu",
       [](const Settings&) {
         auto r = ring::build_ring(catalog::rp2_twisted_rp2_ring());
         return Json(r.to_string(r.wu_class(2)));
       }},
      {"ring.degree4.isomorphic",
       [](const Settings&) {
         return Json(ring::ring_isomorphic(ring::build_ring(catalog::rp2xrp2_ring()),
                                           ring::build_ring(catalog::rp2_twisted_rp2_wx_ring()))
                         .isomorphic);
       }},
      {"ring.degree3.isomorphic",
       [](const Settings&) {
         return Json(ring::ring_isomorphic(ring::build_ring(catalog::rp2xrp2_ring()).truncated(3),
                                           ring::build_ring(catalog::rp2_twisted_rp2_wx_ring()).truncated(3))
                         .isomorphic);
       }},
      {"gamma.rp2xrp2.action",
       [](const Settings&) {
         auto gm = rp2xrp2_gamma();
         Json out = Json::object();
         const char* names[] = {"t", "u"};
         for (std::size_t i = 0; i < gm.actions.size(); ++i) {
           const auto& a = gm.actions[i];
           if (!(a == IntMatrix::diagonal({a(0, 0), a(1, 1), a(2, 2)}))) {
             out[names[i]] = "not diagonal";
             continue;
           }
           out[names[i]] = {a(0, 0).get_si(), a(1, 1).get_si(), a(2, 2).get_si()};
         }
         return out;
       }},
      {"gamma.rp2xrp2.coinvariants",
       [](const Settings&) { return Json(gamma::twisted_coinvariants(rp2xrp2_gamma()).to_string()); }},
      {"gamma.s2xrp2.torsion",
       [](const Settings&) {
         auto gm = gamma::gamma_functor(FiniteAbelianGroup::cyclic(2), catalog::s2xrp2_pi2(), {-1});
         auto rep = gamma::torsion_orbit_count(gm, {});
         return Json{{"torsion", rep.torsion.to_string()}, {"generators", rep.torsion_generators}};
       }},
      {"gamma.rp2xrp2.orbits-with-swap",
       [](const Settings&) {
         return Json(gamma::torsion_orbit_count(rp2xrp2_gamma(), {{"swap", IntMatrix{{0, 1}, {1, 0}}}}).orbit_count());
       }},
      {"gamma.rp2-twisted-rp2.orbits",
       [](const Settings&) { return Json(gamma::torsion_orbit_count(rp2xrp2_gamma(), {}).orbit_count()); }},
      {"ahss.z4.e2.row0",
       [](const Settings&) {
         auto page = ahss::e2_page(z4_bordism(), 4);
         Json out = Json::array();
         for (int p = 0; p <= 4; ++p) out.push_back(page.find(p, 0)->value->to_string());
         return out;
       }},
      {"ahss.z4.e2.entries",
       [](const Settings&) {
         auto page = ahss::e2_page(z4_bordism(), 4);
         return Json{{pq(0, 4), page.find(0, 4)->value->to_string()}, {pq(2, 2), page.find(2, 2)->value->to_string()}};
       }},
      {"ahss.z4.d-hat",
       [](const Settings&) {
         auto in = z4_bordism();
         Json out = Json::object();
         for (const char* a : {"x", "u", "x*u", "u^2"}) out[a] = in.ring.to_string(ahss::d2_dual(in.ring.parse_class(a), in));
         return out;
       }},
      {"ahss.z4.d-hat.rank-from-degree-2",
       [](const Settings&) { return Json(linalg::f2_rank(ahss::d2_dual_matrix(z4_bordism(), 2))); }},
      {"ahss.z4.e3.entries",
       [](const Settings&) {
         auto page = ahss::e3_page(z4_bordism(), 5);
         Json out = Json::object();
         for (auto [p, q] : {std::pair{3, 1}, {0, 4}, {2, 2}, {4, 0}}) {
           const auto* e = page.find(p, q);
           out[pq(p, q)] = e && e->value ? Json(e->value->to_string()) : Json(nullptr);
         }
         return out;
       }},
      {"ahss.z4.e3.line5",
       [](const Settings&) {
         auto page = ahss::e3_page(z4_bordism(), 5);
         Json out = Json::array();
         for (const auto& e : page.entries)
           if (e.p + e.q == 5 && (!e.value || !e.value->is_trivial()))
             out.push_back({pq(e.p, e.q), e.value ? Json(e.value->to_string()) : Json(nullptr)});
         return out;
       }},
      {"ahss.z4.answer",
       [](const Settings&) {
         auto ans = ahss::bordism_answer(z4_bordism());
         Json summands = Json::array();
         Json flagged = Json::array();
         for (const auto& s : ans.summands) {
           summands.push_back({pq(s.p, s.q), s.value.to_string()});
           if (s.assumption_dependent) flagged.push_back(pq(s.p, s.q));
         }
         return Json{{"total", ans.total.to_string()}, {"summands", summands}, {"assumption_dependent", flagged}};
       }},
      {"cli.bordism.z4",
       [](const Settings&) {
         std::istringstream in;
         std::ostringstream out, err;
         int code = run({"bordism", "--group", "Z4", "--format", "json"}, in, out, err);
         if (code != 0) return Json("exit " + std::to_string(code));
         Json rep = Json::parse(out.str());
         Json summands = Json::array();
         for (const auto& s : rep["results"]["summands"])
           summands.push_back({pq(s["p"].get<int>(), s["q"].get<int>()), s["group"]});
         return summands;
       }},
      {"geom.disc-map.boundaries",
       [](const Settings& s) {
         double e0 = 0, e1 = 0;
         for (int k = 0; k <= 100; ++k) {
           const double t = k / 100.0;
           e0 = std::max(e0, geom::distance(geom::v_map({0, t}), geom::Quaternion::j()));
           geom::Quaternion circle{std::cos(2 * M_PI * t), std::sin(2 * M_PI * t), 0, 0};
           e1 = std::max(e1, geom::distance(geom::v_map({1, t}), circle));
         }
         return Json{{"centre_is_j", e0 <= s.tolerance}, {"boundary_is_circle", e1 <= s.tolerance}};
       }},
      {"geom.twist-factor.ends",
       [](const Settings& s) {
         double e0 = 0, e1 = 0;
         for (int k = 0; k <= 100; ++k) {
           const double t = k / 100.0;
           e0 = std::max(e0, geom::distance(geom::twist_factor({0, t}), geom::Quaternion::one()));
           e1 = std::max(e1, geom::distance(geom::twist_factor({1, t}), -geom::Quaternion::one()));
         }
         return Json{{"r0_is_one", e0 <= s.tolerance}, {"r1_is_minus_one", e1 <= s.tolerance}};
       }},
      {"geom.psi.lower-hemisphere",
       [](const Settings& s) {
         std::mt19937_64 rng(s.seed);
         double err = 0;
         for (int k = 0; k < 1000; ++k) {
           geom::S2Point a = geom::random_s2(rng), d = geom::random_s2(rng);
           if (d.z() > 0) d = -d;
           geom::ProductPoint want{-a, geom::half_turn(d)};
           err = std::max(err, geom::distance(geom::psi({a, d}, geom::Hemisphere::Lower), want));
         }
         return Json(err <= s.tolerance);
       }},
      {"geom.sigma",
       [](const Settings& s) {
         auto r = geom::verify_action(geom::find_action("sigma"), {1000, s.seed, 48});
         return Json{{"order", r.orders.at(0)}, {"order_ok", r.order_ok}, {"free", r.free}};
       }},
      {"geom.z2xz2",
       [](const Settings& s) {
         auto r = geom::verify_action(geom::find_action("z2xz2"), {1000, s.seed, 48});
         return Json{{"orders", r.orders}, {"order_ok", r.order_ok}, {"commutes", r.commutes}, {"free", r.free}};
       }},
      {"geom.psi.free",
       [](const Settings& s) {
         auto r = geom::verify_action(geom::find_action("psi"), {1000, s.seed, 48});
         return Json{{"order_ok", r.order_ok}, {"free", r.free}};
       }},
      {"geom.cover.lift",
       [](const Settings& s) {
         auto r = geom::covering_check(10000, s.seed, s.tolerance);
         return Json(r.max_lift_error <= s.tolerance);
       }},
      {"geom.self-intersection",
       [](const Settings&) {
         bool graphs = true;
         for (long k = -5; k <= 5; ++k) graphs = graphs && geom::homological_self_intersection(1, k) == 2 * k;
         return Json{{"diagonal", geom::homological_self_intersection(1, 1)}, {"graph_of_degree_k_is_2k", graphs}};
       }},
      {"kkr.rp4rp4.y.witness",
       [](const Settings& s) {
         auto r = kkr::double_points(kkr::immersion(kkr::Quotient::RP4SumRP4, "y"), solve(s));
         bool quarter = false, three_quarter = false;
         for (const auto& w : r.witnesses) {
           if (!w.disc || std::abs(w.disc->r - 0.5) > 1e-8) continue;
           quarter = quarter || std::abs(w.disc->t - 0.25) <= 1e-8;
           three_quarter = three_quarter || std::abs(w.disc->t - 0.75) <= 1e-8;
         }
         return Json{{"count", r.count}, {"at_half_quarter", quarter}, {"at_half_three_quarter", three_quarter}};
       }},
      {"kkr.fiber-class.embedded",
       [](const Settings& s) {
         Json out = Json::object();
         for (auto q : kkr::all_quotients()) out[kkr::to_string(q)] = count(q, "x", s);
         return out;
       }},
      {"kkr.s2xrp2.folded-sphere",
       [](const Settings& s) { return Json(count(kkr::Quotient::S2xRP2, "y", s)); }},
      {"kkr.s2xrp2.q",
       [](const Settings& s) {
         return Json{q_of(kkr::Quotient::S2xRP2, "x", s), q_of(kkr::Quotient::S2xRP2, "y", s),
                     q_of(kkr::Quotient::S2xRP2, "x+y", s)};
       }},
      {"kkr.s2xtrp2.q",
       [](const Settings& s) {
         return Json{q_of(kkr::Quotient::S2TwistedRP2, "x", s), q_of(kkr::Quotient::S2TwistedRP2, "y", s),
                     q_of(kkr::Quotient::S2TwistedRP2, "x+y", s)};
       }},
      {"kkr.rp4rp4.q-y", [](const Settings& s) { return Json(q_of(kkr::Quotient::RP4SumRP4, "y", s)); }},
      {"kkr.table.distinct",
       [](const Settings& s) { return Json(kkr::distinguish_quotients(solve(s)).pairwise_distinct); }},
      {"kkr.v2",
       [](const Settings& s) {
         Json out = Json::object();
         for (const auto& r : kkr::distinguish_quotients(solve(s)).rows) out[r.quotient] = r.v2_nonzero;
         return out;
       }},
  };
  return m;
}

}  // namespace

Report run_paper_suite(const SuiteArgs& a, const Settings& s, bool& all_passed) {
  Report rep("paper-suite", "reference-values", s);
  const std::string path = a.reference.empty() ? default_data_dir() + "/reference_values.json" : a.reference;
  Json data;
  try {
    data = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("reference file: ") + e.what());
  }
  if (!data.contains("checks") || !data["checks"].is_array()) throw MalformedInput("reference file has no checks");
  rep.inputs() = {{"reference", path}};
  Json rows = Json::array();
  std::size_t passed = 0;
  std::map<std::string, bool> seen;
  for (const auto& c : data["checks"]) {
    const std::string id = c.value("id", "");
    Json row = {{"id", id}, {"topic", c.value("topic", "")}, {"claim", c.value("claim", "")}, {"expected", c["expected"]}};
    seen[id] = true;
    auto it = evaluators().find(id);
    bool ok = false;
    if (it == evaluators().end()) {
      row["observed"] = nullptr;
      row["error"] = "no evaluator for this id";
    } else {
      try {
        row["observed"] = it->second(s);
        ok = row["observed"] == c["expected"];
      } catch (const std::exception& e) {
        row["observed"] = nullptr;
        row["error"] = e.what();
      }
    }
    row["status"] = ok ? "pass" : "FAIL";
    rep.claim(id, row["observed"], "computed");
    if (ok) ++passed;
    rows.push_back(row);
  }
  Json unchecked = Json::array();
  for (const auto& [id, f] : evaluators())
    if (!seen.count(id)) unchecked.push_back(id);
  all_passed = passed == rows.size() && unchecked.empty();
  rep.results() = {{"checks", rows},
                   {"passed", passed},
                   {"failed", rows.size() - passed},
                   {"evaluators_without_reference", unchecked}};
  return rep;
}

}  // namespace s2s2::cli
