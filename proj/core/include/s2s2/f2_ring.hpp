#pragma once

// Finite-dimensional graded commutative F2-algebras given by generators and
// relations, with cup products, Steenrod squares and Wu classes.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "s2s2/exact_linalg.hpp"

namespace s2s2::ring {

/// Exponent vector, one entry per generator.
using Monomial = std::vector<int>;
/// A polynomial over F2 is a set of monomials.
using Polynomial = std::vector<Monomial>;

struct Generator {
  std::string name;
  int degree = 1;
};

/// Input to build_ring. Polynomials are written like "t^2*u + u^3".
struct Presentation {
  std::vector<Generator> generators;
  std::vector<std::string> relations;
  /// Sq^1 of generators of degree >= 2; missing entries mean Sq^1 g = 0.
  std::map<std::string, std::string> sq1;
  int top_degree = 4;
  /// Monomial naming the fundamental class, e.g. "t^2*u^2".
  std::optional<std::string> fundamental;

  /// Line format: "gen <name> <deg>", "rel <poly>", "sq1 <gen> <poly>",
  /// "top <d>", "fundamental <monomial>"; '#' starts a comment.
  static Presentation parse(const std::string& text);
  std::string to_text() const;
};

/// Homogeneous class: coordinates over the monomial basis of its degree.
struct F2Class {
  int degree = 0;
  std::vector<std::uint8_t> coords;

  bool is_zero() const;
  friend bool operator==(const F2Class&, const F2Class&) = default;
};

class GradedF2Algebra {
 public:
  /// Enumerates monomials degree by degree and reduces modulo the relation ideal.
  explicit GradedF2Algebra(Presentation p);

  const Presentation& presentation() const noexcept { return pres_; }
  const std::vector<Generator>& generators() const noexcept { return pres_.generators; }
  int top_degree() const noexcept { return pres_.top_degree; }
  bool has_fundamental_class() const noexcept { return fundamental_.has_value(); }
  const F2Class& fundamental_class() const;

  std::size_t dimension(int degree) const;
  std::vector<std::size_t> dimensions() const;
  /// Standard monomials spanning the given degree.
  const std::vector<Monomial>& basis(int degree) const;
  std::string monomial_name(const Monomial& m) const;

  F2Class zero(int degree) const;
  F2Class one() const;
  F2Class generator(std::size_t index) const;
  F2Class generator(const std::string& name) const;
  F2Class basis_element(int degree, std::size_t index) const;
  /// Normal form of a homogeneous polynomial; degrees above the top give zero.
  F2Class reduce(const Polynomial& p) const;
  Polynomial parse_polynomial(const std::string& text) const;
  F2Class parse_class(const std::string& text) const;
  std::string to_string(const F2Class& c) const;

  F2Class add(const F2Class& a, const F2Class& b) const;
  /// Throws DegreeOverflow when deg a + deg b exceeds the top degree.
  F2Class cup(const F2Class& a, const F2Class& b) const;
  /// Product that silently vanishes above the top degree.
  F2Class multiply(const F2Class& a, const F2Class& b) const;
  F2Class power(const F2Class& a, int n) const;

  /// Steenrod square via the Cartan formula from the values on generators.
  F2Class sq(int i, const F2Class& a) const;

  /// <c, [M]> for a top-degree class.
  int evaluate(const F2Class& c) const;
  /// Gram matrix of (y, z) -> <y z, [M]> on degree k x degree top-k.
  linalg::F2Matrix pairing_matrix(int k) const;
  /// True if every pairing matrix is square and invertible.
  bool poincare_duality() const;
  /// Unique v_k with <v_k y, [M]> = <Sq^k y, [M]> for all y; throws SingularPairing.
  F2Class wu_class(int k) const;

  /// Same presentation with top degree k and no fundamental class.
  GradedF2Algebra truncated(int k) const;

 private:
  struct DegreeData {
    std::vector<Monomial> monomials;                    // all monomials of this degree
    std::map<Monomial, std::size_t> monomial_index;
    linalg::F2Matrix relations_rref;                    // rows span the relation space
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> standard;                  // non-pivot monomial columns
    std::vector<Monomial> basis;
  };

  int monomial_degree(const Monomial& m) const;
  Polynomial lift(const F2Class& c) const;
  F2Class sq_generator(int i, std::size_t g) const;
  F2Class sq_monomial(int i, const Monomial& m) const;

  Presentation pres_;
  std::vector<DegreeData> degrees_;
  std::vector<Polynomial> sq1_;
  std::optional<F2Class> fundamental_;
};

GradedF2Algebra build_ring(const Presentation& p);
GradedF2Algebra build_ring(const std::string& presentation_text);

struct IsomorphismResult {
  bool isomorphic = false;
  /// Images of the first ring's generators in the second ring, when isomorphic.
  std::vector<F2Class> generator_images;
  std::string reason;
};

/// Exhaustive search over degree-preserving images of generators.
IsomorphismResult ring_isomorphic(const GradedF2Algebra& a, const GradedF2Algebra& b);

}  // namespace s2s2::ring
