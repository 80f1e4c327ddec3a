#include <cmath>

#include "doctest.h"
#include "s2s2/error.hpp"
#include "s2s2/kkr.hpp"

using namespace s2s2;
using namespace s2s2::kkr;

namespace {

SolveOptions grid(std::size_t n) {
  SolveOptions o;
  o.grid = n;
  return o;
}

void check_witnesses(const ImmersedSphere& s, const DoublePointReport& r) {
  for (const auto& w : r.witnesses) {
    CHECK(w.residual <= 1e-8);
    CHECK(w.min_singular_value > 1e-6);
    // Independent check of the coincidence through the map and the deck involution.
    CHECK(geom::distance(s.deck(s.map(w.parameter)), s.map(w.partner)) <= 1e-8);
  }
  for (std::size_t a = 0; a < r.witnesses.size(); ++a)
    for (std::size_t b = a + 1; b < r.witnesses.size(); ++b)
      CHECK(geom::distance(r.witnesses[a].parameter, r.witnesses[b].parameter) >= 1e-3);
}

}  // namespace

TEST_CASE("quotient names") {
  for (auto q : all_quotients()) CHECK(parse_quotient(to_string(q)) == q);
  CHECK_THROWS_AS(parse_quotient("rp4"), Error);
}

TEST_CASE("double point counts are stable under refining the grid") {
  const std::vector<std::tuple<Quotient, std::string, std::size_t>> table = {
      {Quotient::S2xRP2, "x", 0},       {Quotient::S2xRP2, "y", 1},       {Quotient::S2xRP2, "x+y", 0},
      {Quotient::S2TwistedRP2, "x", 0}, {Quotient::S2TwistedRP2, "y", 0}, {Quotient::S2TwistedRP2, "x+y", 1},
      {Quotient::RP4SumRP4, "x", 0},    {Quotient::RP4SumRP4, "y", 1},
  };
  for (const auto& [q, cls, expected] : table) {
    auto s = immersion(q, cls);
    CHECK(s.euler_number % 2 == 0);
    for (std::size_t n : {200, 400}) {
      auto r = double_points(s, grid(n));
      CAPTURE(to_string(q));
      CAPTURE(cls);
      CHECK(r.count == expected);
      check_witnesses(s, r);
    }
  }
}

TEST_CASE("the RP4 # RP4 double point sits at r = 1/2, cos(2 pi t) = 0") {
  auto s = immersion(Quotient::RP4SumRP4, "y");
  auto r = double_points(s, grid(200));
  REQUIRE(r.count == 1);
  bool quarter = false, three_quarter = false;
  for (const auto& w : r.witnesses) {
    REQUIRE(w.disc);
    CHECK(std::abs(std::cos(M_PI * w.disc->r)) <= 1e-8);
    CHECK(std::abs(std::cos(2 * M_PI * w.disc->t)) <= 1e-8);
    quarter = quarter || std::abs(w.disc->t - 0.25) <= 1e-8;
    three_quarter = three_quarter || std::abs(w.disc->t - 0.75) <= 1e-8;
  }
  CHECK(quarter);
  CHECK(three_quarter);
}

TEST_CASE("quadratic function values") {
  auto q = [](Quotient m, const char* cls) { return q_kkr(immersion(m, cls)); };
  CHECK(q(Quotient::S2xRP2, "x") == 0);
  CHECK(q(Quotient::S2xRP2, "y") == 2);
  CHECK(q(Quotient::S2xRP2, "x+y") == 2);
  CHECK(q(Quotient::S2TwistedRP2, "x") == 0);
  CHECK(q(Quotient::S2TwistedRP2, "y") == 0);
  CHECK(q(Quotient::S2TwistedRP2, "x+y") == 0);
  CHECK(q(Quotient::RP4SumRP4, "y") == 2);
  for (auto m : all_quotients()) CHECK(q(m, "0") == 0);
}

TEST_CASE("the twisted diagonal count does not depend on the isotopy size") {
  for (double eps : {0.05, 0.1, 0.2}) {
    auto s = immersion(Quotient::S2TwistedRP2, "x+y", eps);
    auto r = double_points(s);
    CHECK(r.count == 1);
    check_witnesses(s, r);
  }
}

TEST_CASE("counts agree across different seed grids") {
  for (auto m : all_quotients()) {
    auto s = immersion(m, "y");
    CHECK(double_points(s, grid(200)).count == double_points(s, grid(257)).count);
  }
}

TEST_CASE("classes without a catalog representative") {
  CHECK_THROWS_AS(immersion(Quotient::RP4SumRP4, "x+y"), UnsupportedImmersion);
  CHECK_THROWS_AS(immersion(Quotient::S2xRP2, "2x"), UnsupportedImmersion);
}

TEST_CASE("distinction table") {
  auto t = distinguish_quotients();
  REQUIRE(t.rows.size() == 3);
  CHECK(t.pairwise_distinct);
  CHECK_FALSE(t.rows[0].v2_nonzero);
  CHECK(t.rows[0].v2_source == "ring");
  CHECK(t.rows[1].v2_nonzero);
  CHECK(t.rows[1].v2_source == "ring");
  CHECK(t.rows[2].v2_nonzero);
  CHECK(t.rows[2].v2_source == "reference");
  for (const auto& row : t.rows)
    for (const auto& v : row.q_values)
      if (v) CHECK((*v == 0 || *v == 2));
}
