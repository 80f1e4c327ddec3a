#include <istream>
#include <iterator>
#include <sstream>

#include "commands.hpp"
#include "inputs.hpp"
#include "s2s2/ahss.hpp"
#include "s2s2/exact_linalg.hpp"
#include "s2s2/gamma_quadratic.hpp"

namespace s2s2::cli {

using linalg::AbelianInvariants;

namespace {

Json invariants_json(const AbelianInvariants& a) {
  Json t = Json::array();
  for (const auto& x : a.torsion) t.push_back(x.get_si());
  return {{"group", a.to_string()}, {"free_rank", a.free_rank}, {"torsion", t}};
}

std::vector<int> orientation_or_default(const std::string& text, const homalg::FiniteAbelianGroup& g) {
  if (text.empty()) return std::vector<int>(g.generator_count(), 1);
  auto w = parse_int_list(text);
  if (w.size() != g.generator_count()) throw MalformedInput("--orientation needs one sign per group generator");
  for (int x : w)
    if (x != 1 && x != -1) throw MalformedInput("--orientation entries must be 1 or -1");
  return w;
}

ring::F2Class class_of_degree(const ring::GradedF2Algebra& r, const std::string& text, int degree,
                              const std::string& what) {
  ring::F2Class c;
  try {
    c = r.parse_class(text);
  } catch (const PresentationError& e) {
    throw MalformedInput(what + ": " + e.what());
  }
  if (c.is_zero()) return r.zero(degree);
  if (c.degree != degree) throw MalformedInput(what + " must have degree " + std::to_string(degree));
  return c;
}

ring::F2Class any_class(const ring::GradedF2Algebra& r, const std::string& text, const std::string& what) {
  if (text.empty()) throw MalformedInput(what + " is required");
  try {
    return r.parse_class(text);
  } catch (const PresentationError& e) {
    throw MalformedInput(what + ": " + e.what());
  }
}

Json homalg_rows(const HomalgArgs& a, bool cohomology, Report& rep) {
  auto g = parse_group(a.group);
  auto w = orientation_or_default(a.orientation, g);
  auto m = load_module(a.module, g, w);
  if (a.max_degree < 0 || a.max_degree > 12) throw MalformedInput("--max-degree must be in 0..12");
  rep.inputs() = {{"group", g.to_string()}, {"module", a.module}, {"orientation", w}, {"max_degree", a.max_degree}};
  Json rows = Json::array();
  for (int n = 0; n <= a.max_degree; ++n) {
    const auto h = cohomology ? homalg::group_cohomology(g, m, static_cast<std::size_t>(n))
                              : homalg::group_homology(g, m, static_cast<std::size_t>(n));
    Json row = {{"degree", n}};
    row.update(invariants_json(h));
    rows.push_back(row);
    rep.claim((cohomology ? "H^" : "H_") + std::to_string(n), h.to_string(), "computed");
  }
  auto res = homalg::resolution(g, static_cast<std::size_t>(a.max_degree) + 1);
  rep.results()["resolution_ranks"] = res->ranks;
  return rows;
}

}  // namespace

Report run_snf(const SnfArgs& a, std::istream& in, const Settings& s) {
  Report rep("snf", "exact-linalg/smith-normal-form", s);
  std::string text = a.matrix;
  if (text.empty()) text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  auto m = parse_matrix(text);
  auto r = linalg::smith_normal_form(m);
  rep.inputs() = {{"matrix", matrix_json(m)}};
  Json diag = Json::array();
  for (const auto& d : r.diagonal()) diag.push_back(d.get_str());
  rep.results() = {{"d", matrix_json(r.d)},
                   {"u", matrix_json(r.u)},
                   {"v", matrix_json(r.v)},
                   {"diagonal", diag},
                   {"rank", r.rank()},
                   {"cokernel", invariants_json(linalg::cokernel_invariants(m))}};
  rep.claim("diagonal", diag, "computed");
  rep.claim("cokernel", linalg::cokernel_invariants(m).to_string(), "computed");
  return rep;
}

Report run_group_cohomology(const HomalgArgs& a, const Settings& s) {
  Report rep("group-cohomology", "group-cohomology", s);
  rep.results()["cohomology"] = homalg_rows(a, true, rep);
  return rep;
}

Report run_group_homology(const HomalgArgs& a, const Settings& s) {
  Report rep("group-homology", "group-homology", s);
  rep.results()["homology"] = homalg_rows(a, false, rep);
  return rep;
}

Report run_ring(const RingArgs& a, const Settings& s) {
  Report rep("ring " + a.action, "cohomology-rings", s);
  auto r = load_ring(a.ring);
  rep.inputs() = {{"ring", a.ring}, {"presentation", r.presentation().to_text()}};
  if (a.action == "build") {
    Json degrees = Json::array();
    for (int d = 0; d <= r.top_degree(); ++d) {
      Json basis = Json::array();
      for (const auto& mono : r.basis(d)) basis.push_back(r.monomial_name(mono));
      degrees.push_back({{"degree", d}, {"dimension", r.dimension(d)}, {"basis", basis}});
    }
    rep.results()["degrees"] = degrees;
    rep.claim("dimensions", r.dimensions(), "computed");
    if (r.has_fundamental_class()) {
      rep.results()["poincare_duality"] = r.poincare_duality();
      rep.claim("poincare_duality", r.poincare_duality(), "computed");
    }
  } else if (a.action == "cup") {
    auto x = any_class(r, a.a, "--a");
    auto y = any_class(r, a.b, "--b");
    rep.inputs()["a"] = a.a;
    rep.inputs()["b"] = a.b;
    try {
      auto c = r.cup(x, y);
      rep.results()["product"] = r.to_string(c);
      rep.results()["degree"] = c.degree;
      rep.claim("a*b", r.to_string(c), "computed");
    } catch (const DegreeOverflow& e) {
      throw MalformedInput(e.what());
    }
  } else if (a.action == "sq") {
    auto x = any_class(r, a.a, "--a");
    if (a.square < 0) throw MalformedInput("--i must be non-negative");
    rep.inputs()["i"] = a.square;
    rep.inputs()["a"] = a.a;
    auto c = r.sq(a.square, x);
    rep.results()["value"] = r.to_string(c);
    rep.results()["degree"] = c.degree;
    rep.claim("Sq^" + std::to_string(a.square) + "(a)", r.to_string(c), "computed");
  } else if (a.action == "wu") {
    if (!r.has_fundamental_class()) throw MalformedInput("wu classes need a fundamental class in the presentation");
    Json wu = Json::object();
    for (int k = 0; 2 * k <= r.top_degree(); ++k) {
      try {
        auto v = r.wu_class(k);
        wu["v" + std::to_string(k)] = r.to_string(v);
        rep.claim("v" + std::to_string(k), r.to_string(v), "computed");
      } catch (const SingularPairing& e) {
        throw MalformedInput(e.what());
      }
    }
    rep.results()["wu_classes"] = wu;
  } else if (a.action == "iso") {
    if (a.other.empty()) throw MalformedInput("ring iso needs --other");
    auto o = load_ring(a.other);
    rep.inputs()["other"] = a.other;
    rep.inputs()["truncate"] = a.truncate;
    auto lhs = a.truncate >= 0 ? r.truncated(a.truncate) : r;
    auto rhs = a.truncate >= 0 ? o.truncated(a.truncate) : o;
    auto res = ring::ring_isomorphic(lhs, rhs);
    Json images = Json::array();
    for (const auto& im : res.generator_images) images.push_back(rhs.to_string(im));
    rep.results() = {{"isomorphic", res.isomorphic}, {"generator_images", images}, {"reason", res.reason}};
    rep.claim("isomorphic", res.isomorphic, "computed");
  } else {
    throw MalformedInput("unknown ring action " + a.action);
  }
  return rep;
}

Report run_gamma(const GammaArgs& a, const Settings& s) {
  Report rep("gamma " + a.action, "quadratic-functor", s);
  auto g = parse_group(a.group);
  auto w = orientation_or_default(a.orientation, g);
  auto m = load_module(a.module, g, std::vector<int>(g.generator_count(), 1));
  gamma::GammaModule gm;
  try {
    gm = gamma::gamma_functor(g, m, w);
  } catch (const Error& e) {
    throw MalformedInput(e.what());
  }
  rep.inputs() = {{"group", g.to_string()}, {"module", a.module}, {"orientation", w}};
  Json actions = Json::array();
  for (const auto& x : gm.actions) actions.push_back(matrix_json(x));
  rep.results()["labels"] = gm.labels;
  rep.results()["induced_actions"] = actions;
  auto co = gamma::twisted_coinvariants(gm);
  rep.results()["coinvariants"] = invariants_json(co);
  rep.claim("coinvariants", co.to_string(), "computed");
  if (a.action == "orbits") {
    std::vector<gamma::Symmetry> syms;
    for (const auto& text : a.symmetries) {
      auto eq = text.find('=');
      std::string name = eq == std::string::npos ? text : text.substr(0, eq);
      std::string mat = eq == std::string::npos ? text : text.substr(eq + 1);
      syms.push_back({name, parse_matrix(mat)});
    }
    rep.inputs()["symmetries"] = a.symmetries;
    gamma::PolarizationOrbitReport orb;
    try {
      orb = gamma::torsion_orbit_count(gm, syms);
    } catch (const SymmetryNotInduced& e) {
      throw MalformedInput(e.what());
    }
    Json orbits = Json::array();
    for (const auto& o : orb.orbits) orbits.push_back(o.size());
    rep.results()["torsion"] = invariants_json(orb.torsion);
    rep.results()["torsion_generators"] = orb.torsion_generators;
    rep.results()["orbit_sizes"] = orbits;
    rep.results()["orbit_count"] = orb.orbit_count();
    rep.claim("orbit_count", orb.orbit_count(), "computed");
  } else if (a.action != "coinvariants") {
    throw MalformedInput("unknown gamma action " + a.action);
  }
  return rep;
}

namespace {

Json entry_json(const ahss::PageEntry& e) {
  return {{"p", e.p},
          {"q", e.q},
          {"coefficient", e.coefficient.to_string()},
          {"value", e.value ? Json(e.value->to_string()) : Json(nullptr)},
          {"basis", e.basis},
          {"flags", e.flags}};
}

Json page_json(const ahss::SpectralPage& page) {
  Json entries = Json::array();
  for (const auto& e : page.entries) entries.push_back(entry_json(e));
  Json diffs = Json::array();
  for (const auto& d : page.differentials)
    diffs.push_back({{"source", {d.source_p, d.source_q}},
                     {"target", {d.target_p, d.target_q}},
                     {"rank", d.rank ? Json(*d.rank) : Json(nullptr)},
                     {"provenance", d.provenance},
                     {"note", d.note}});
  Json audit = Json::array();
  for (const auto& d : page.d3_audit)
    audit.push_back({{"source", {d.source_p, d.source_q}},
                     {"target", {d.target_p, d.target_q}},
                     {"source_group", d.source},
                     {"target_group", d.target}});
  return {{"page", page.page}, {"entries", entries}, {"differentials", diffs}, {"d3_audit", audit}};
}

ahss::BordismInput bordism_input(const BordismArgs& a, Json& inputs) {
  auto g = parse_group(a.group);
  std::string ring = a.ring, w1 = a.w1, w2 = a.w2, orient = a.orientation;
  if (g.cyclic_orders() == std::vector<int>{4}) {
    if (ring.empty()) ring = "z4";
    if (w1.empty()) w1 = "x";
    if (w2.empty()) w2 = "u";
    if (orient.empty()) orient = "-1";
  } else if (g.order() == 1) {
    if (ring.empty()) ring = "trivial";
  }
  if (ring.empty()) throw MalformedInput("bordism needs --ring for group " + g.to_string());
  if (w1.empty()) w1 = "0";
  if (w2.empty()) w2 = "0";
  auto r = load_ring(ring);
  ahss::BordismInput in{g, r, class_of_degree(r, w1, 1, "--w1"), class_of_degree(r, w2, 2, "--w2"),
                        orientation_or_default(orient, g)};
  if (!a.coefficients.empty()) {
    in.coefficient_row.clear();
    std::string list = a.coefficients;
    for (char& c : list)
      if (c == ',') c = ' ';
    std::istringstream is(list);
    std::string tok;
    while (is >> tok) {
      try {
        in.coefficient_row.push_back(ahss::Coefficient::parse(tok));
      } catch (const Error& e) {
        throw MalformedInput(e.what());
      }
    }
  }
  in.assume_e40_survives = !a.no_e40_assumption;
  try {
    in.validate();
  } catch (const Error& e) {
    throw MalformedInput(e.what());
  }
  Json row = Json::array();
  for (const auto& c : in.coefficient_row) row.push_back(c.to_string());
  inputs = {{"group", g.to_string()}, {"ring", ring},           {"w1", w1},
            {"w2", w2},               {"orientation", in.orientation}, {"coefficient_row", row},
            {"assume_e40_survives", in.assume_e40_survives}};
  return in;
}

}  // namespace

Report run_bordism(const BordismArgs& a, const Settings& s) {
  const bool z4 = parse_group(a.group).cyclic_orders() == std::vector<int>{4};
  Report rep("bordism " + a.action, z4 ? "z4-quotient/bordism" : "bordism", s);
  auto in = bordism_input(a, rep.inputs());
  try {
    if (a.action == "e2" || a.action == "e3") {
      if (a.max_total_degree < 0 || a.max_total_degree > 6) throw MalformedInput("--max-total-degree must be in 0..6");
      auto page = a.action == "e2" ? ahss::e2_page(in, a.max_total_degree)
                                   : ahss::e3_page(in, std::min(a.max_total_degree, 5));
      rep.results() = page_json(page);
      Json dhat = Json::object();
      for (int k = 0; k + 2 <= in.ring.top_degree(); ++k)
        for (std::size_t i = 0; i < in.ring.dimension(k); ++i) {
          auto b = in.ring.basis_element(k, i);
          dhat[in.ring.to_string(b)] = in.ring.to_string(ahss::d2_dual(b, in));
        }
      rep.results()["d_hat"] = dhat;
      for (const auto& e : page.entries)
        if (e.value)
          rep.claim("E" + std::to_string(page.page) + "(" + std::to_string(e.p) + "," + std::to_string(e.q) + ")",
                    e.value->to_string(), e.flags.empty() ? "computed" : "assumption");
    } else if (a.action == "answer") {
      auto ans = ahss::bordism_answer(in);
      Json summands = Json::array();
      for (const auto& sm : ans.summands) {
        summands.push_back({{"p", sm.p}, {"q", sm.q}, {"group", sm.value.to_string()},
                            {"assumption_dependent", sm.assumption_dependent}});
        rep.claim("summand(" + std::to_string(sm.p) + "," + std::to_string(sm.q) + ")", sm.value.to_string(),
                  sm.assumption_dependent ? "assumption" : "computed");
      }
      rep.results() = {{"total", ans.total.to_string()},
                       {"complete", ans.complete},
                       {"assumptions", ans.assumptions},
                       {"summands", summands}};
      rep.claim("total", ans.total.to_string(), ans.assumptions.empty() ? "computed" : "assumption");
    } else {
      throw MalformedInput("unknown bordism action " + a.action);
    }
  } catch (const InconsistentPresentation& e) {
    throw MalformedInput(e.what());
  } catch (const DegreeOverflow& e) {
    throw MalformedInput(e.what());
  }
  return rep;
}

}  // namespace s2s2::cli
