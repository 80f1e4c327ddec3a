#include "doctest.h"
#include "s2s2/catalog.hpp"
#include "s2s2/error.hpp"
#include "s2s2/group_homalg.hpp"

using namespace s2s2;
using namespace s2s2::homalg;
using linalg::AbelianInvariants;
using linalg::Integer;
using linalg::IntMatrix;

namespace {

// Cyclic-group oracle: with T = w * A and N = 1 + T + ... + T^{n-1},
// H^0 = ker(T-1), H^odd = ker N / im(T-1), H^even = ker(T-1) / im N, and dually for homology.
struct CyclicOracle {
  IntMatrix t_minus_1, norm;
  std::size_t rank;

  CyclicOracle(int n, const IntMatrix& a, int w) : rank(a.rows()) {
    IntMatrix t = a;
    if (w < 0)
      for (std::size_t i = 0; i < rank; ++i) t.negate_row(i);
    t_minus_1 = t - IntMatrix::identity(rank);
    norm = IntMatrix(rank, rank);
    IntMatrix power = IntMatrix::identity(rank);
    for (int k = 0; k < n; ++k) {
      norm = norm + power;
      power = power * t;
    }
  }
  AbelianInvariants cohomology(std::size_t k) const {
    if (k == 0) return linalg::subquotient_invariants(IntMatrix(rank, 0), t_minus_1);
    return k % 2 ? linalg::subquotient_invariants(t_minus_1, norm) : linalg::subquotient_invariants(norm, t_minus_1);
  }
  AbelianInvariants homology(std::size_t k) const {
    if (k == 0) return linalg::cokernel_invariants(t_minus_1);
    return k % 2 ? linalg::subquotient_invariants(norm, t_minus_1) : linalg::subquotient_invariants(t_minus_1, norm);
  }
};

AbelianInvariants parse(const char* s) { return AbelianInvariants::parse(s); }

}  // namespace

TEST_CASE("groups parse and multiply") {
  auto g = FiniteAbelianGroup::parse("Z2xZ2");
  CHECK(g.order() == 4);
  CHECK(FiniteAbelianGroup::parse("Z2^2") == g);
  CHECK(FiniteAbelianGroup::parse("1").order() == 1);
  auto z4 = FiniteAbelianGroup::cyclic(4);
  CHECK(z4.multiply(3, 3) == 2);
  CHECK(z4.inverse(1) == 3);
  CHECK_THROWS_AS(FiniteAbelianGroup::parse("Zfoo"), Error);
}

TEST_CASE("resolution shapes") {
  auto z4 = resolution(FiniteAbelianGroup::cyclic(4), 2);
  CHECK(z4->ranks == std::vector<std::size_t>{1, 1, 1});
  CHECK(z4->boundaries[1][0][0] == GroupRingElement{-1, 1, 0, 0});
  CHECK(z4->boundaries[2][0][0] == GroupRingElement{1, 1, 1, 1});
  CHECK(resolution(FiniteAbelianGroup({2, 2}), 2)->ranks == std::vector<std::size_t>{1, 2, 3});
  CHECK(resolution(FiniteAbelianGroup::trivial(), 3)->ranks == std::vector<std::size_t>{1, 0, 0, 0});
}

TEST_CASE("resolution boundaries compose to zero") {
  for (auto g : {FiniteAbelianGroup::cyclic(4), FiniteAbelianGroup({2, 2}), FiniteAbelianGroup({2, 4})}) {
    auto res = resolution(g, 5);
    for (std::size_t k = 2; k <= res->length(); ++k)
      CHECK((res->regular_boundary(k - 1) * res->regular_boundary(k)).is_zero());
  }
}

TEST_CASE("module validation") {
  auto z4 = FiniteAbelianGroup::cyclic(4);
  CHECK_THROWS_AS(GroupModule::from_actions({IntMatrix{{2, 0}, {0, 1}}}).validate(z4), Error);
  CHECK_THROWS_AS(GroupModule::from_actions({IntMatrix{{0, 1}, {1, 1}}}).validate(z4), Error);
  CHECK_THROWS_AS(GroupModule::twisted_integers(FiniteAbelianGroup::cyclic(3), {-1}).validate(
                      FiniteAbelianGroup::cyclic(3)),
                  Error);
  auto z2z2 = FiniteAbelianGroup({2, 2});
  CHECK_THROWS_AS(GroupModule::from_actions({IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{-1, 0}, {0, 1}}}).validate(z2z2),
                  Error);
}

TEST_CASE("Z/4 with pi_2 coefficients agrees with the cyclic oracle") {
  auto g = FiniteAbelianGroup::cyclic(4);
  auto m = catalog::z4_pi2();
  CyclicOracle oracle(4, m.actions[0], 1);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(group_cohomology(g, m, n) == oracle.cohomology(n));
  for (std::size_t n = 1; n <= 6; n += 2) CHECK(group_cohomology(g, m, n) == parse("Z/2"));
  for (std::size_t n = 2; n <= 6; n += 2) CHECK(group_cohomology(g, m, n).is_trivial());
  // The generator has eigenvalues +-i, so there are no invariant vectors.
  CHECK(group_cohomology(g, m, 0).is_trivial());
}

TEST_CASE("Z/4 with pi_3 coefficients gives the dual pattern") {
  auto g = FiniteAbelianGroup::cyclic(4);
  auto m = catalog::z4_pi3();
  CyclicOracle oracle(4, m.actions[0], 1);
  CHECK(group_cohomology(g, m, 0) == parse("Z"));
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(group_cohomology(g, m, n) == oracle.cohomology(n));
    CHECK(group_cohomology(g, m, n) == (n % 2 ? parse("0") : parse("Z/2")));
  }
}

TEST_CASE("cyclic oracle on random twisted modules") {
  const std::vector<IntMatrix> z2_actions = {IntMatrix{{-1, 0}, {0, 1}}, IntMatrix{{0, 1}, {1, 0}},
                                             IntMatrix{{1, 1}, {0, -1}}, IntMatrix{{-1, 0}, {0, -1}}};
  auto z2 = FiniteAbelianGroup::cyclic(2);
  for (const auto& a : z2_actions)
    for (int w : {1, -1}) {
      auto m = GroupModule::from_actions({a}, {w});
      CyclicOracle oracle(2, a, w);
      for (std::size_t n = 0; n <= 5; ++n) {
        CHECK(group_cohomology(z2, m, n) == oracle.cohomology(n));
        CHECK(group_homology(z2, m, n) == oracle.homology(n));
      }
    }
  auto z4 = FiniteAbelianGroup::cyclic(4);
  for (int w : {1, -1}) {
    auto m = GroupModule::from_actions({IntMatrix{{0, -1}, {1, 0}}}, {w});
    CyclicOracle oracle(4, m.actions[0], w);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(group_homology(z4, m, n) == oracle.homology(n));
  }
}

TEST_CASE("cohomology is 2-periodic for Z/4 with pi_2 coefficients") {
  auto g = FiniteAbelianGroup::cyclic(4);
  auto m = catalog::z4_pi2();
  for (std::size_t n = 1; n <= 6; ++n) CHECK(group_cohomology(g, m, n) == group_cohomology(g, m, n + 2));
}

TEST_CASE("trivial integer coefficients in low degrees") {
  for (auto [g, dual] : {std::pair{FiniteAbelianGroup::cyclic(4), parse("Z/4")},
                         std::pair{FiniteAbelianGroup({2, 2}), parse("Z/2 + Z/2")}}) {
    auto z = GroupModule::trivial_integers(g);
    CHECK(group_cohomology(g, z, 0) == parse("Z"));
    CHECK(group_cohomology(g, z, 1).is_trivial());
    CHECK(group_cohomology(g, z, 2) == dual);
    CHECK(group_homology(g, z, 0) == parse("Z"));
  }
}

TEST_CASE("positive-degree cohomology is annihilated by the group order") {
  std::vector<std::pair<FiniteAbelianGroup, GroupModule>> cases = {
      {FiniteAbelianGroup::cyclic(4), catalog::z4_pi2()},
      {FiniteAbelianGroup::cyclic(4), catalog::z4_pi3()},
      {FiniteAbelianGroup({2, 2}), catalog::rp2xrp2_pi2()},
      {FiniteAbelianGroup({2, 2}), GroupModule::twisted_integers(FiniteAbelianGroup({2, 2}), {-1, 1})},
  };
  for (const auto& [g, m] : cases)
    for (std::size_t n = 1; n <= 5; ++n) {
      auto h = group_cohomology(g, m, n);
      CHECK(h.free_rank == 0);
      for (const auto& t : h.torsion) CHECK(Integer(static_cast<long>(g.order())) % t == 0);
    }
}

TEST_CASE("mod-2 homology and cohomology have equal dimensions") {
  for (auto g : {FiniteAbelianGroup::cyclic(4), FiniteAbelianGroup({2, 2}), FiniteAbelianGroup::cyclic(2)}) {
    auto f2 = GroupModule::trivial_cyclic(g, 2);
    for (std::size_t n = 0; n <= 6; ++n) {
      auto h = group_homology(g, f2, n), c = group_cohomology(g, f2, n);
      CHECK(h.is_elementary_2group());
      CHECK(h.mod2_dimension() == c.mod2_dimension());
    }
  }
  // Kunneth: H^n((Z/2)^2; F2) has dimension n + 1.
  auto g = FiniteAbelianGroup({2, 2});
  for (std::size_t n = 0; n <= 6; ++n)
    CHECK(group_cohomology(g, GroupModule::trivial_cyclic(g, 2), n).mod2_dimension() == n + 1);
}

TEST_CASE("homology with twisted and mod-2 coefficients for Z/4") {
  auto g = FiniteAbelianGroup::cyclic(4);
  auto zminus = GroupModule::twisted_integers(g, {-1});
  for (std::size_t p = 0; p <= 6; ++p) CHECK(group_homology(g, zminus, p) == (p % 2 ? parse("0") : parse("Z/2")));
  CHECK(group_homology(g, GroupModule::trivial_cyclic(g, 2), 2) == parse("Z/2"));
  CHECK(group_homology(g, GroupModule::trivial_integers(g), 0) == parse("Z"));
}

TEST_CASE("pi_2 of RP2 x RP2 in degree 2") {
  auto g = FiniteAbelianGroup({2, 2});
  CHECK(group_cohomology(g, catalog::rp2xrp2_pi2(), 2) == parse("Z/2 + Z/2"));
}
