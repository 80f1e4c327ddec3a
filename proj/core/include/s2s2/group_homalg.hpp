#pragma once

// (Co)homology of finite abelian groups with twisted coefficients, computed
// from explicit free resolutions of Z over Z[pi].

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "s2s2/exact_linalg.hpp"

namespace s2s2::homalg {

using linalg::AbelianInvariants;
using linalg::Integer;
using linalg::IntMatrix;

/// Product of cyclic groups Z/n1 x Z/n2 x ...; empty list is the trivial group.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<int> cyclic_orders);

  static FiniteAbelianGroup trivial() { return FiniteAbelianGroup{}; }
  static FiniteAbelianGroup cyclic(int n) { return FiniteAbelianGroup({n}); }
  /// Parses "1", "Z4", "Z2xZ2", "Z2^2".
  static FiniteAbelianGroup parse(const std::string& text);

  const std::vector<int>& cyclic_orders() const noexcept { return orders_; }
  std::size_t generator_count() const noexcept { return orders_.size(); }
  std::size_t order() const;

  /// Exponent vector of the element with the given mixed-radix index.
  std::vector<int> element(std::size_t index) const;
  std::size_t index(const std::vector<int>& exponents) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;

  std::string to_string() const;
  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<int> orders_;
};

/// Element of Z[pi]: coefficient per group element index.
using GroupRingElement = std::vector<long>;

/// A Z[pi]-module: Z^rank (or (Z/modulus)^rank) with one action matrix per
/// group generator, twisted by an orientation character.
struct GroupModule {
  std::size_t rank = 0;
  std::vector<IntMatrix> actions;
  /// w(g_i) in {+1, -1} for each generator.
  std::vector<int> weight;
  /// 0 for integral coefficients, otherwise coefficients in Z/modulus.
  Integer modulus = 0;

  static GroupModule trivial_integers(const FiniteAbelianGroup& g);
  static GroupModule twisted_integers(const FiniteAbelianGroup& g, std::vector<int> weight);
  static GroupModule trivial_cyclic(const FiniteAbelianGroup& g, long modulus);
  static GroupModule from_actions(std::vector<IntMatrix> actions, std::vector<int> weight = {});

  /// Twisted action w(g) * A_g of an arbitrary group element.
  IntMatrix element_action(const FiniteAbelianGroup& g, std::size_t element) const;
  /// Action of a group ring element.
  IntMatrix ring_action(const FiniteAbelianGroup& g, const GroupRingElement& a) const;

  /// Checks shape, invertibility, commutativity and generator orders.
  void validate(const FiniteAbelianGroup& g) const;
};

/// Free resolution F_length -> ... -> F_0 -> Z.
struct ResolutionSegment {
  FiniteAbelianGroup group;
  std::vector<std::size_t> ranks;
  /// boundaries[k] is d_k : F_k -> F_{k-1} as a ranks[k-1] x ranks[k] matrix
  /// of group ring elements (boundaries[0] is unused and empty).
  std::vector<std::vector<std::vector<GroupRingElement>>> boundaries;

  std::size_t length() const { return ranks.empty() ? 0 : ranks.size() - 1; }
  /// d_k in the regular representation: (ranks[k-1]|pi|) x (ranks[k]|pi|).
  IntMatrix regular_boundary(std::size_t k) const;
};

/// Periodic resolution for cyclic groups, tensor products for products.
/// Cached per (group, length); the segment is checked for d^2 = 0 and
/// exactness on construction.
std::shared_ptr<const ResolutionSegment> resolution(const FiniteAbelianGroup& g, std::size_t length);

/// Regular representation of a group ring element (left multiplication).
IntMatrix regular_matrix(const FiniteAbelianGroup& g, const GroupRingElement& a);

/// Coboundary delta^k : Hom(F_{k-1}, M) -> Hom(F_k, M) as an integer matrix.
IntMatrix cochain_differential(const ResolutionSegment& res, const GroupModule& m, std::size_t k);
/// Boundary d_k : F_k (x) M -> F_{k-1} (x) M as an integer matrix.
IntMatrix chain_differential(const ResolutionSegment& res, const GroupModule& m, std::size_t k);

AbelianInvariants group_cohomology(const FiniteAbelianGroup& g, const GroupModule& m, std::size_t n);
AbelianInvariants group_homology(const FiniteAbelianGroup& g, const GroupModule& m, std::size_t n);

}  // namespace s2s2::homalg
