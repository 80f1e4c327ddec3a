#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "report.hpp"

namespace s2s2::cli {

struct SnfArgs {
  std::string matrix;
};

struct HomalgArgs {
  std::string group = "Z4";
  std::string module = "Z";
  std::string orientation;
  int max_degree = 6;
};

struct RingArgs {
  std::string action = "build";
  std::string ring = "rp2xrp2";
  std::string other;
  std::string a;
  std::string b;
  int square = 1;
  int truncate = -1;
};

struct GammaArgs {
  std::string action = "coinvariants";
  std::string group = "Z2xZ2";
  std::string module = "rp2xrp2-pi2";
  std::string orientation = "-1,-1";
  std::vector<std::string> symmetries;
};

struct BordismArgs {
  std::string action = "answer";
  std::string group = "Z4";
  std::string ring;
  std::string w1;
  std::string w2;
  std::string orientation;
  std::string coefficients;
  bool no_e40_assumption = false;
  int max_total_degree = 5;
};

struct VerifyArgs {
  std::string action = "all";
  std::size_t samples = 10000;
  std::size_t grid = 48;
};

struct CoverArgs {
  std::size_t samples = 10000;
};

struct KkrArgs {
  std::string quotient;
  std::string cls;
  double eps = 0.1;
  bool table = false;
};

struct SuiteArgs {
  std::string reference;
};

Report run_snf(const SnfArgs& a, std::istream& in, const Settings& s);
Report run_group_cohomology(const HomalgArgs& a, const Settings& s);
Report run_group_homology(const HomalgArgs& a, const Settings& s);
Report run_ring(const RingArgs& a, const Settings& s);
Report run_gamma(const GammaArgs& a, const Settings& s);
Report run_bordism(const BordismArgs& a, const Settings& s);
Report run_verify_actions(const VerifyArgs& a, const Settings& s);
Report run_cover_check(const CoverArgs& a, const Settings& s);
Report run_kkr(const KkrArgs& a, const Settings& s);
/// Sets `all_passed`; a report is produced even when checks fail.
Report run_paper_suite(const SuiteArgs& a, const Settings& s, bool& all_passed);

}  // namespace s2s2::cli
