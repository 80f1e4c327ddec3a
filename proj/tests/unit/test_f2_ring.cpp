#include "doctest.h"
#include "s2s2/catalog.hpp"
#include "s2s2/error.hpp"
#include "s2s2/f2_ring.hpp"

using namespace s2s2;
using namespace s2s2::ring;

namespace {

GradedF2Algebra rp2xrp2() { return build_ring(catalog::rp2xrp2_ring()); }
GradedF2Algebra twisted() { return build_ring(catalog::rp2_twisted_rp2_ring()); }
GradedF2Algebra wx() { return build_ring(catalog::rp2_twisted_rp2_wx_ring()); }
GradedF2Algebra z4() { return build_ring(catalog::z4_group_ring()); }

// Nonzero degree-1 classes whose cube vanishes; an isomorphism invariant of the ring up to degree 3.
int degree_one_classes_with_zero_cube(const GradedF2Algebra& r) {
  const std::size_t n = r.dimension(1);
  int count = 0;
  for (std::size_t mask = 1; mask < (1u << n); ++mask) {
    F2Class c = r.zero(1);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) c = r.add(c, r.basis_element(1, i));
    if (r.multiply(r.multiply(c, c), c).is_zero()) ++count;
  }
  return count;
}

std::vector<F2Class> all_basis(const GradedF2Algebra& r) {
  std::vector<F2Class> out;
  for (int d = 0; d <= r.top_degree(); ++d)
    for (std::size_t i = 0; i < r.dimension(d); ++i) out.push_back(r.basis_element(d, i));
  return out;
}

}  // namespace

TEST_CASE("dimensions") {
  // Monomials t^a u^b with a, b <= 2 and a + b = d.
  std::vector<std::size_t> expected;
  for (int d = 0; d <= 4; ++d) {
    std::size_t n = 0;
    for (int a = 0; a <= 2; ++a)
      if (d - a >= 0 && d - a <= 2) ++n;
    expected.push_back(n);
  }
  CHECK(rp2xrp2().dimensions() == expected);
  CHECK(expected == std::vector<std::size_t>{1, 2, 3, 2, 1});
  CHECK(wx().dimension(4) == 1);
  CHECK(wx().poincare_duality());
  CHECK(z4().dimensions() == std::vector<std::size_t>(7, 1));
}

TEST_CASE("presentation errors") {
  CHECK_THROWS_AS(build_ring("gen x 1\nrel 1\ntop 2\n"), InconsistentPresentation);
  CHECK_THROWS_AS(build_ring("gen x 1\nrel x^2 + x\ntop 2\n"), PresentationError);
  CHECK_THROWS_AS(build_ring("gen x one\n"), PresentationError);
  CHECK_THROWS_AS(build_ring("gen x 1\nrel y^2\n"), PresentationError);
  CHECK_THROWS_AS(build_ring("gen x 1\nsq1 x 0\ntop 3\n"), InconsistentPresentation);
  CHECK_THROWS_AS(build_ring("gen x 1\ngen y 1\ntop 2\nfundamental x^2\n"), InconsistentPresentation);
}

TEST_CASE("presentation text round trip") {
  auto p = Presentation::parse(catalog::rp2_twisted_rp2_wx_ring());
  auto q = Presentation::parse(p.to_text());
  CHECK(build_ring(q).dimensions() == build_ring(p).dimensions());
  CHECK(ring_isomorphic(build_ring(p), build_ring(q)).isomorphic);
}

TEST_CASE("cup products") {
  auto r = z4();
  CHECK(r.cup(r.parse_class("x"), r.parse_class("x")).is_zero());
  auto a = rp2xrp2();
  CHECK(a.cup(a.parse_class("t^2"), a.parse_class("u^2")) == a.fundamental_class());
  CHECK_THROWS_AS(a.cup(a.parse_class("t^2"), a.parse_class("t*u^2")), DegreeOverflow);
  auto b = wx();
  CHECK(b.cup(b.parse_class("w^2"), b.parse_class("w + x")).is_zero());
}

TEST_CASE("cup product is commutative and bilinear") {
  for (const auto& r : {rp2xrp2(), twisted(), wx(), z4()}) {
    auto basis = all_basis(r);
    for (const auto& a : basis)
      for (const auto& b : basis) {
        if (a.degree + b.degree > r.top_degree()) continue;
        REQUIRE(r.cup(a, b) == r.cup(b, a));
        for (const auto& c : basis)
          if (c.degree == b.degree) REQUIRE(r.cup(a, r.add(b, c)) == r.add(r.cup(a, b), r.cup(a, c)));
      }
  }
}

TEST_CASE("Steenrod squares on examples") {
  auto r = z4();
  auto u = r.parse_class("u");
  CHECK(r.sq(1, r.parse_class("x")).is_zero());
  CHECK(r.sq(1, u).is_zero());
  auto u2 = r.parse_class("u^2");
  // Cartan by hand: Sq^2(u u) = u Sq^2 u + Sq^1 u Sq^1 u + Sq^2 u u = 2 u^3 + 0 = 0.
  CHECK(r.sq(2, u2).is_zero());
  CHECK(r.sq(1, u2).is_zero());
  CHECK(r.sq(2, u) == u2);
  CHECK(r.sq(0, u) == u);
}

TEST_CASE("Steenrod squares vanish above the degree and square at the degree") {
  for (const auto& r : {rp2xrp2(), twisted(), wx(), z4()})
    for (const auto& a : all_basis(r)) {
      for (int i = a.degree + 1; i <= a.degree + 3; ++i) REQUIRE(r.sq(i, a).is_zero());
      REQUIRE(r.sq(a.degree, a) == r.multiply(a, a));
      REQUIRE(r.sq(0, a) == a);
    }
}

TEST_CASE("Cartan formula holds on all basis pairs") {
  for (const auto& r : {rp2xrp2(), twisted(), wx()}) {
    auto basis = all_basis(r);
    for (const auto& a : basis)
      for (const auto& b : basis) {
        if (a.degree + b.degree > 4) continue;
        const auto ab = r.cup(a, b);
        for (int n = 0; n <= 4 - ab.degree; ++n) {
          F2Class expansion = r.zero(ab.degree + n);
          for (int i = 0; i <= n; ++i) expansion = r.add(expansion, r.multiply(r.sq(i, a), r.sq(n - i, b)));
          REQUIRE(r.sq(n, ab) == expansion);
        }
      }
  }
}

TEST_CASE("Wu classes") {
  auto a = rp2xrp2();
  CHECK(a.wu_class(1) == a.parse_class("t + u"));
  CHECK(a.wu_class(2) == a.parse_class("t*u"));
  auto b = twisted();
  CHECK(b.wu_class(2) == b.parse_class("t*u + u^2"));
  auto s4 = build_ring(catalog::s4_ring());
  CHECK(s4.wu_class(1).is_zero());
  CHECK(s4.wu_class(2).is_zero());
  auto c = wx();
  CHECK(c.wu_class(1) == c.parse_class("w"));
  CHECK(c.wu_class(2) == c.parse_class("w*x"));
}

TEST_CASE("Wu classes satisfy their defining identity") {
  for (const auto& r : {rp2xrp2(), twisted(), wx()})
    for (int k = 1; k <= 2; ++k) {
      const auto v = r.wu_class(k);
      for (std::size_t i = 0; i < r.dimension(4 - k); ++i) {
        const auto y = r.basis_element(4 - k, i);
        REQUIRE(r.evaluate(r.cup(v, y)) == r.evaluate(r.sq(k, y)));
      }
    }
}

TEST_CASE("Wu classes do not depend on generator order") {
  auto swapped = build_ring("gen u 1\ngen t 1\nrel u^3\nrel t^3 + t*u^2\ntop 4\nfundamental t^2*u^2\n");
  CHECK(swapped.wu_class(1) == swapped.parse_class("t + u"));
  CHECK(swapped.wu_class(2) == swapped.parse_class("t*u + u^2"));
}

TEST_CASE("degree-2 pairing is symmetric and invertible") {
  for (const auto& r : {rp2xrp2(), twisted(), wx()}) {
    auto p = r.pairing_matrix(2);
    CHECK(p == p.transpose());
    CHECK(linalg::f2_rank(p) == p.rows());
  }
}

TEST_CASE("v2 takes one of the two normal forms up to swapping the generators") {
  for (const auto& r : {rp2xrp2(), twisted()}) {
    auto v2 = r.wu_class(2);
    bool matches = false;
    for (const char* form : {"t*u", "t*u + u^2", "t*u + t^2"}) matches = matches || v2 == r.parse_class(form);
    CHECK(matches);
  }
}

TEST_CASE("ring isomorphism") {
  auto a = rp2xrp2();
  auto self = ring_isomorphic(a, a);
  CHECK(self.isomorphic);
  REQUIRE(self.generator_images.size() == 2);
  CHECK(ring_isomorphic(twisted(), wx()).isomorphic);
  CHECK_FALSE(ring_isomorphic(a, twisted()).isomorphic);
  CHECK_FALSE(ring_isomorphic(a, wx()).isomorphic);
}

TEST_CASE("degree-3 truncations are distinguished by degree-one cubes") {
  auto a3 = rp2xrp2().truncated(3), b3 = wx().truncated(3);
  // t and u cube to zero in the product ring; only x does in the twisted ring.
  CHECK(degree_one_classes_with_zero_cube(a3) == 2);
  CHECK(degree_one_classes_with_zero_cube(b3) == 1);
  CHECK_FALSE(ring_isomorphic(a3, b3).isomorphic);
}

TEST_CASE("the twisted ring has a degree-one class with nonzero cube") {
  auto b = twisted();
  CHECK_FALSE(b.power(b.parse_class("t"), 3).is_zero());
  auto a = rp2xrp2();
  CHECK(a.power(a.parse_class("t"), 3).is_zero());
  CHECK(a.power(a.parse_class("u"), 3).is_zero());
  CHECK_FALSE(a.power(a.parse_class("t + u"), 3).is_zero());
}
