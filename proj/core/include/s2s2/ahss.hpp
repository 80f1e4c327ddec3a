#pragma once

// Atiyah-Hirzebruch spectral sequence for 4-dimensional TopSpin bordism of
// a finite abelian fundamental group with twisted normal data.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "s2s2/exact_linalg.hpp"
#include "s2s2/f2_ring.hpp"
#include "s2s2/group_homalg.hpp"

namespace s2s2::ahss {

using linalg::AbelianInvariants;

/// Coefficient group Omega_q: zero, Z (optionally twisted by w1) or Z/2.
struct Coefficient {
  enum class Kind { Zero, Integers, Mod2 };
  Kind kind = Kind::Zero;
  bool twisted = false;

  static Coefficient zero() { return {Kind::Zero, false}; }
  static Coefficient integers(bool twisted) { return {Kind::Integers, twisted}; }
  static Coefficient mod2() { return {Kind::Mod2, false}; }
  /// "0", "Z", "Zw" (twisted by w1), "Z/2".
  static Coefficient parse(const std::string& text);
  std::string to_string() const;
};

/// Z (twisted), Z/2, Z/2, 0, Z (twisted).
std::vector<Coefficient> default_coefficient_row();

struct BordismInput {
  homalg::FiniteAbelianGroup group;
  /// F2-cohomology ring of the group, truncated high enough for the differentials.
  ring::GradedF2Algebra ring;
  ring::F2Class w1;
  ring::F2Class w2;
  /// Orientation character on the group generators (+1/-1), matching w1.
  std::vector<int> orientation;
  std::vector<Coefficient> coefficient_row = default_coefficient_row();
  /// Whether E^3_{4,0} is taken to survive to E^infinity.
  bool assume_e40_survives = true;

  void validate() const;
};

struct PageEntry {
  int p = 0;
  int q = 0;
  Coefficient coefficient;
  /// Known value, absent when the entry could not be determined.
  std::optional<AbelianInvariants> value;
  /// For F2 entries: representatives, written in the basis dual to ring monomials.
  std::vector<std::string> basis;
  std::vector<std::string> flags;
};

struct Differential {
  int source_p = 0, source_q = 0, target_p = 0, target_q = 0;
  /// Rank of d2 over F2; absent when not computed.
  std::optional<std::size_t> rank;
  /// "reference", "computed" or "not computed".
  std::string provenance;
  std::string note;
};

struct D3Audit {
  int source_p = 0, source_q = 0, target_p = 0, target_q = 0;
  std::string source;
  std::string target;
};

struct SpectralPage {
  int page = 2;
  int max_total_degree = 0;
  std::vector<PageEntry> entries;
  std::vector<Differential> differentials;
  std::vector<D3Audit> d3_audit;

  const PageEntry* find(int p, int q) const;
};

/// Sq^2 a + (Sq^1 a) w1 + a w2; throws DegreeOverflow past the ring's top degree.
ring::F2Class d2_dual(const ring::F2Class& alpha, const BordismInput& in);

/// Matrix of d2_dual from degree k to degree k+2 (columns are source basis elements).
linalg::F2Matrix d2_dual_matrix(const BordismInput& in, int k);

SpectralPage e2_page(const BordismInput& in, int max_total_degree);
/// E^3 on total degrees up to max_total_degree (at most 5).
SpectralPage e3_page(const BordismInput& in, int max_total_degree = 5);

struct Summand {
  int p = 0;
  int q = 0;
  AbelianInvariants value;
  bool assumption_dependent = false;
};

struct BordismReport {
  AbelianInvariants total;
  std::vector<Summand> summands;
  std::vector<std::string> assumptions;
  std::vector<D3Audit> d3_audit;
  /// True when every entry on the total-degree-4 line was determined.
  bool complete = true;
};

/// Direct sum of the E^3 entries of total degree 4.
BordismReport bordism_answer(const BordismInput& in);

}  // namespace s2s2::ahss
