#include "doctest.h"
#include "s2s2/ahss.hpp"
#include "s2s2/catalog.hpp"
#include "s2s2/error.hpp"

using namespace s2s2;
using namespace s2s2::ahss;
using homalg::FiniteAbelianGroup;

namespace {

BordismInput z4_input() {
  auto r = ring::build_ring(catalog::z4_group_ring());
  return BordismInput{FiniteAbelianGroup::cyclic(4), r, r.parse_class("x"), r.parse_class("u"), {-1}};
}

BordismInput trivial_input(std::vector<Coefficient> row) {
  auto r = ring::build_ring(catalog::trivial_group_ring());
  BordismInput in{FiniteAbelianGroup::trivial(), r, r.zero(1), r.zero(2), {}};
  in.coefficient_row = std::move(row);
  return in;
}

std::string value(const SpectralPage& page, int p, int q) {
  const auto* e = page.find(p, q);
  if (!e) return "missing";
  return e->value ? e->value->to_string() : "undetermined";
}

}  // namespace

TEST_CASE("coefficients parse") {
  CHECK(Coefficient::parse("Zw").twisted);
  CHECK(Coefficient::parse("Z/2").kind == Coefficient::Kind::Mod2);
  CHECK(Coefficient::parse("0").kind == Coefficient::Kind::Zero);
  CHECK_THROWS_AS(Coefficient::parse("Q"), Error);
  CHECK(default_coefficient_row().size() == 5);
}

TEST_CASE("E2 page for Z/4") {
  auto page = e2_page(z4_input(), 6);
  for (int p = 0; p <= 6; ++p) CHECK(value(page, p, 0) == (p % 2 ? "0" : "Z/2"));
  CHECK(value(page, 0, 4) == "Z/2");
  CHECK(value(page, 2, 2) == "Z/2");
  for (int p = 0; p <= 3; ++p) CHECK(value(page, p, 3) == "0");
}

TEST_CASE("d-hat on the Z/4 ring") {
  auto in = z4_input();
  const auto& r = in.ring;
  CHECK(d2_dual(r.parse_class("x"), in) == r.parse_class("x*u"));
  CHECK_FALSE(d2_dual(r.parse_class("x"), in).is_zero());
  CHECK(d2_dual(r.parse_class("u"), in).is_zero());
  CHECK(d2_dual(r.parse_class("x*u"), in).is_zero());
  CHECK(d2_dual(r.parse_class("u^2"), in) == r.parse_class("u^3"));
  CHECK(linalg::f2_rank(d2_dual_matrix(in, 2)) == 0);
}

TEST_CASE("d-hat is linear and its matrix has the rank of its transpose") {
  auto in = z4_input();
  const auto& r = in.ring;
  for (int k = 0; k + 2 <= r.top_degree(); ++k) {
    for (std::size_t i = 0; i < r.dimension(k); ++i)
      for (std::size_t j = 0; j < r.dimension(k); ++j) {
        auto a = r.basis_element(k, i), b = r.basis_element(k, j);
        CHECK(d2_dual(r.add(a, b), in) == r.add(d2_dual(a, in), d2_dual(b, in)));
      }
    auto m = d2_dual_matrix(in, k);
    CHECK(linalg::f2_rank(m) == linalg::f2_rank(m.transpose()));
  }
  auto rp = ring::build_ring(catalog::rp2xrp2_ring());
  // Linearity on a two-dimensional degree, using the ring machinery only.
  for (std::size_t i = 0; i < rp.dimension(1); ++i)
    for (std::size_t j = 0; j < rp.dimension(1); ++j) {
      auto a = rp.basis_element(1, i), b = rp.basis_element(1, j);
      auto f = [&](const ring::F2Class& c) {
        return rp.add(rp.add(rp.sq(2, c), rp.multiply(rp.sq(1, c), rp.parse_class("t"))),
                      rp.multiply(c, rp.parse_class("u^2")));
      };
      CHECK(f(rp.add(a, b)) == rp.add(f(a), f(b)));
    }
}

TEST_CASE("E3 page for Z/4") {
  auto in = z4_input();
  auto e2 = e2_page(in, 5);
  auto e3 = e3_page(in, 5);
  CHECK(value(e3, 3, 1) == "0");
  CHECK(value(e3, 0, 4) == "Z/2");
  CHECK(value(e3, 2, 2) == "Z/2");
  CHECK(value(e3, 4, 0) == "Z/2");
  std::vector<std::string> line5;
  for (const auto& e : e3.entries)
    if (e.p + e.q == 5 && !(e.value && e.value->is_trivial())) line5.push_back(value(e3, e.p, e.q) + "@" + std::to_string(e.p));
  CHECK(line5 == std::vector<std::string>{"Z/2@3"});
  for (const auto& e : e3.entries) {
    const auto* before = e2.find(e.p, e.q);
    REQUIRE(before);
    if (e.value && before->value) CHECK(e.value->mod2_dimension() <= before->value->mod2_dimension());
  }
}

TEST_CASE("d3 audit records the only relevant higher differential") {
  auto e3 = e3_page(z4_input(), 5);
  REQUIRE(e3.d3_audit.size() == 1);
  const auto& d = e3.d3_audit.front();
  CHECK(d.source_p == 3);
  CHECK(d.source_q == 2);
  CHECK(d.target_p == 0);
  CHECK(d.target_q == 4);
  CHECK(d.source == "Z/2");
  CHECK(d.target == "Z/2");
}

TEST_CASE("bordism answer for Z/4") {
  auto ans = bordism_answer(z4_input());
  CHECK(ans.total.to_string() == "Z/2 + Z/2 + Z/2");
  CHECK(ans.complete);
  REQUIRE(ans.summands.size() == 3);
  for (const auto& s : ans.summands) {
    CHECK(s.value.to_string() == "Z/2");
    CHECK(s.assumption_dependent == (s.p == 4 && s.q == 0));
  }
  CHECK_FALSE(ans.assumptions.empty());
}

TEST_CASE("zeroing the top coefficient removes exactly the (0,4) summand") {
  auto in = z4_input();
  in.coefficient_row[4] = Coefficient::zero();
  auto ans = bordism_answer(in);
  CHECK(ans.total.to_string() == "Z/2 + Z/2");
  for (const auto& s : ans.summands) CHECK_FALSE((s.p == 0 && s.q == 4));
}

TEST_CASE("trivial group: only the p = 0 column survives") {
  // Direct table: H_p(1; A) = A for p = 0 and 0 otherwise, so the answer is the q = 4 coefficient.
  auto ans = bordism_answer(trivial_input(default_coefficient_row()));
  CHECK(ans.total.to_string() == "Z");
  auto alt = bordism_answer(trivial_input({Coefficient::integers(false), Coefficient::mod2(), Coefficient::mod2(),
                                           Coefficient::zero(), Coefficient::mod2()}));
  CHECK(alt.total.to_string() == "Z/2");
}

TEST_CASE("inputs are checked") {
  auto in = z4_input();
  in.orientation = {1};
  CHECK_THROWS_AS(in.validate(), Error);
  BordismInput wrong{FiniteAbelianGroup::cyclic(4), ring::build_ring("gen x 1\ngen y 1\nrel x^2\nrel y^2\ntop 6\n"),
                     {}, {}, {-1}};
  wrong.w1 = wrong.ring.parse_class("x");
  wrong.w2 = wrong.ring.zero(2);
  CHECK_THROWS_AS(e2_page(wrong, 4), InconsistentPresentation);
}
