#include "s2s2_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "inputs.hpp"

#ifndef S2S2_DATA_DIR
#define S2S2_DATA_DIR "data"
#endif

namespace s2s2::cli {

std::string default_data_dir() { return S2S2_DATA_DIR; }

namespace {

bool is_verification_failure(const Error& e) {
  return dynamic_cast<const FixedPointFound*>(&e) || dynamic_cast<const OrderFailed*>(&e) ||
         dynamic_cast<const IdentityViolated*>(&e) || dynamic_cast<const SolverDiverged*>(&e) ||
         dynamic_cast<const NonTransverseDoublePoint*>(&e) || dynamic_cast<const ClosedFormMismatch*>(&e);
}

int emit(const std::string& text, const Settings& s, std::ostream& out, std::ostream& err) {
  if (s.out.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream f(s.out);
  if (!f) {
    err << "error: cannot write " << s.out << "\n";
    return kMalformed;
  }
  f << text;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& input, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numerical checks for free quotients of S^2 x S^2", "s2s2"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", s.seed, "Random seed for sampled checks");
  app.add_option("--grid", s.grid, "Grid resolution for root finding")->check(CLI::Range(8, 100000));
  app.add_option("--tolerance", s.tolerance, "Tolerance for numerical identities")->check(CLI::PositiveNumber);
  app.add_option("--out", s.out, "Write the report to a file");

  SnfArgs snf;
  auto* c_snf = app.add_subcommand("snf", "Smith normal form of an integer matrix (stdin if --matrix is absent)");
  c_snf->add_option("--matrix", snf.matrix, "Rows separated by ';'");

  HomalgArgs coh, hom;
  const std::string module_help = "Coefficient module: Z, Zw, Z/n, z4-pi2, z4-pi3, rp2xrp2-pi2, s2xrp2-pi2 or a JSON file";
  auto* c_coh = app.add_subcommand("group-cohomology", "Cohomology of a finite abelian group");
  auto* c_hom = app.add_subcommand("group-homology", "Homology of a finite abelian group");
  for (auto [cmd, a] : {std::pair{c_coh, &coh}, std::pair{c_hom, &hom}}) {
    cmd->add_option("--group", a->group, "Group, e.g. Z4 or Z2xZ2");
    cmd->add_option("--module", a->module, module_help);
    cmd->add_option("--orientation", a->orientation, "Signs of the orientation character, e.g. -1,1");
    cmd->add_option("--max-degree", a->max_degree, "Highest degree");
  }

  RingArgs ring;
  auto* c_ring = app.add_subcommand("ring", "Cohomology rings over F2");
  c_ring->add_option("action", ring.action, "build, cup, sq, wu or iso")
      ->check(CLI::IsMember({"build", "cup", "sq", "wu", "iso"}));
  c_ring->add_option("--ring", ring.ring, "Catalog ring name or presentation file");
  c_ring->add_option("--other", ring.other, "Second ring for iso");
  c_ring->add_option("--a", ring.a, "Class, e.g. t*u + u^2");
  c_ring->add_option("--b", ring.b, "Second class for cup");
  c_ring->add_option("--i", ring.square, "Steenrod square index");
  c_ring->add_option("--truncate", ring.truncate, "Compare truncations at this degree");

  GammaArgs gam;
  auto* c_gamma = app.add_subcommand("gamma", "Quadratic functor, twisted coinvariants and torsion orbits");
  c_gamma->add_option("action", gam.action, "coinvariants or orbits")->check(CLI::IsMember({"coinvariants", "orbits"}));
  c_gamma->add_option("--group", gam.group, "Group");
  c_gamma->add_option("--module", gam.module, module_help);
  c_gamma->add_option("--orientation", gam.orientation, "Orientation character");
  c_gamma->add_option("--symmetry", gam.symmetries, "name=matrix, repeatable");

  BordismArgs bor;
  auto* c_bor = app.add_subcommand("bordism", "Spectral sequence for 4-dimensional TopSpin bordism");
  c_bor->add_option("action", bor.action, "e2, e3 or answer")->check(CLI::IsMember({"e2", "e3", "answer"}));
  c_bor->add_option("--group", bor.group, "Group");
  c_bor->add_option("--ring", bor.ring, "F2 cohomology ring of the group");
  c_bor->add_option("--w1", bor.w1, "Degree-1 class");
  c_bor->add_option("--w2", bor.w2, "Degree-2 class");
  c_bor->add_option("--orientation", bor.orientation, "Orientation character");
  c_bor->add_option("--coefficients", bor.coefficients, "Coefficient row, e.g. Zw,Z/2,Z/2,0,Zw");
  c_bor->add_flag("--no-e40-assumption", bor.no_e40_assumption, "Do not assume E^3_{4,0} survives");
  c_bor->add_option("--max-total-degree", bor.max_total_degree, "Largest p+q shown on pages");

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify-actions", "Order and freeness of the registered group actions");
  c_ver->add_option("--action", ver.action, "Action name or 'all'");
  c_ver->add_option("--samples", ver.samples, "Random samples");
  c_ver->add_option("--displacement-grid", ver.grid, "Grid per sphere factor for the displacement bound");

  CoverArgs cov;
  auto* c_cov = app.add_subcommand("cover-check", "Identities of the double cover S^3 -> C0");
  c_cov->add_option("--samples", cov.samples, "Random samples");

  KkrArgs kk;
  auto* c_kkr = app.add_subcommand("kkr", "Double points of immersed spheres and the quadratic function");
  c_kkr->add_option("--quotient", kk.quotient, "s2xrp2, s2xtrp2 or rp4rp4");
  c_kkr->add_option("--class", kk.cls, "x, y or x+y");
  c_kkr->add_option("--eps", kk.eps, "Isotopy size for the twisted diagonal");
  c_kkr->add_flag("--table", kk.table, "Distinction table for all three quotients");

  SuiteArgs suite;
  auto* c_suite = app.add_subcommand("paper-suite", "Run every reference check and compare with stored values");
  c_suite->add_option("--reference", suite.reference, "Reference values file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  }

  try {
    bool passed = true;
    Report rep = [&]() {
      if (*c_snf) return run_snf(snf, input, s);
      if (*c_coh) return run_group_cohomology(coh, s);
      if (*c_hom) return run_group_homology(hom, s);
      if (*c_ring) return run_ring(ring, s);
      if (*c_gamma) return run_gamma(gam, s);
      if (*c_bor) return run_bordism(bor, s);
      if (*c_ver) return run_verify_actions(ver, s);
      if (*c_cov) return run_cover_check(cov, s);
      if (*c_kkr) return run_kkr(kk, s);
      return run_paper_suite(suite, s, passed);
    }();
    int code = emit(rep.render(s.format), s, out, err);
    if (code != kOk) return code;
    return passed ? kOk : kMismatch;
  } catch (const Error& e) {
    const bool failure = is_verification_failure(e);
    Json doc = {{"command", app.get_subcommands().front()->get_name()},
                {"error", {{"kind", failure ? "verification-failed" : "malformed-input"}, {"message", e.what()}}}};
    if (auto* fp = dynamic_cast<const FixedPointFound*>(&e)) doc["error"]["witness"] = fp->witness();
    err << "error: " << e.what() << "\n";
    emit(s.format == "json" ? doc.dump(2) + "\n" : render_text(doc), s, out, err);
    return failure ? kMismatch : kMalformed;
  }
}

}  // namespace s2s2::cli
