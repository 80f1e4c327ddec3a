#include <numeric>
#include <random>

#include "doctest.h"
#include "s2s2/error.hpp"
#include "s2s2/exact_linalg.hpp"

using namespace s2s2;
using namespace s2s2::linalg;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> e(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = e(rng);
  return m;
}

// Determinant by cofactor expansion; independent of the elimination code.
Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Integer term = m(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Determinantal divisors: gcd of all k x k minors. The SNF diagonal is d_k = D_k / D_{k-1}.
std::vector<Integer> snf_by_minors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
        Integer d = cofactor_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  while (out.size() < std::min(m.rows(), m.cols())) out.push_back(0);
  return out;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> f(-2, 2);
  for (int step = 0; step < 8 && n > 1; ++step) {
    auto a = idx(rng), b = idx(rng);
    if (a != b) u.add_row_multiple(a, b, f(rng));
  }
  return u;
}

}  // namespace

TEST_CASE("smith normal form on small examples") {
  CHECK(smith_normal_form(IntMatrix::identity(2)).d == IntMatrix::diagonal({1, 1}));
  CHECK(smith_normal_form(IntMatrix{{1, 0}, {0, 0}}).d == IntMatrix::diagonal({1, 0}));
  auto r = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(r.d == IntMatrix::diagonal({2, 4}));
  CHECK(r.diagonal() == snf_by_minors(IntMatrix{{2, 4}, {6, 8}}));
}

TEST_CASE("smith normal form handles empty matrices") {
  auto r = smith_normal_form(IntMatrix(0, 3));
  CHECK(r.d.rows() == 0);
  CHECK(r.d.cols() == 3);
  CHECK(r.rank() == 0);
}

TEST_CASE("smith normal form reconstructs 1000 random matrices") {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto m = random_matrix(rng, dim(rng), dim(rng), 10);
    const auto r = smith_normal_form(m);
    REQUIRE(r.u * m * r.v == r.d);
    for (std::size_t i = 0; i < r.d.rows(); ++i)
      for (std::size_t j = 0; j < r.d.cols(); ++j)
        if (i != j) REQUIRE(r.d(i, j) == 0);
    const auto diag = r.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      REQUIRE(diag[i] >= 0);
      if (diag[i] != 0) REQUIRE(diag[i + 1] % diag[i] == 0);
      else REQUIRE(diag[i + 1] == 0);
    }
    REQUIRE(abs(determinant(r.u)) == 1);
    REQUIRE(abs(determinant(r.v)) == 1);
  }
}

TEST_CASE("smith diagonal matches determinantal divisors") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, dim(rng), dim(rng), 6);
    REQUIRE(smith_normal_form(m).diagonal() == snf_by_minors(m));
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng, 4, 4, 9);
    REQUIRE(determinant(m) == cofactor_det(m));
  }
}

TEST_CASE("cokernel invariants") {
  CHECK(cokernel_invariants(IntMatrix(1, 1)) == AbelianInvariants::z());
  CHECK(cokernel_invariants(IntMatrix{{2}}).torsion == std::vector<Integer>{2});
  // Z/2 + Z/3 is cyclic of order 6.
  CHECK(cokernel_invariants(IntMatrix{{2, 0}, {0, 3}}).torsion == std::vector<Integer>{6});
  CHECK(AbelianInvariants::from_cyclic_orders({2, 3}) == AbelianInvariants::from_cyclic_orders({6}));
  CHECK(AbelianInvariants::from_cyclic_orders({4, 2, 0, 1}).to_string() == "Z + Z/2 + Z/4");
}

TEST_CASE("cokernel invariants are unchanged by unimodular change of basis") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, dim(rng), dim(rng), 8);
    const auto before = cokernel_invariants(m);
    const auto p = random_unimodular(rng, m.rows());
    const auto q = random_unimodular(rng, m.cols());
    REQUIRE(cokernel_invariants(p * m * q) == before);
    REQUIRE(unimodular_inverse(p) * p == IntMatrix::identity(m.rows()));
  }
}

TEST_CASE("subquotients") {
  CHECK(subquotient_invariants(IntMatrix(2, 2), IntMatrix(2, 2)) == AbelianInvariants::z(2));
  CHECK(subquotient_invariants(IntMatrix{{2}}, IntMatrix(1, 1)).torsion == std::vector<Integer>{2});
  CHECK_THROWS_AS(subquotient_invariants(IntMatrix{{1}}, IntMatrix{{1}}), CompositionNonzero);
}

TEST_CASE("universal coefficients relate integral and mod-2 homology") {
  // Periodic complex for Z/4 with trivial coefficients: ... -4-> Z -0-> Z -4-> Z -0-> Z.
  const IntMatrix zero{{0}}, four{{4}};
  std::vector<IntMatrix> d = {IntMatrix(0, 1), zero, four, zero, four, zero};
  for (std::size_t n = 1; n + 1 < d.size(); ++n) {
    auto h = subquotient_invariants(d[n + 1], d[n]);
    auto h_prev = subquotient_invariants(d[n], d[n - 1]);
    auto h2 = subquotient_invariants_mod(d[n + 1], d[n], 2);
    std::size_t tor = 0;
    for (const auto& t : h_prev.torsion)
      if (t % 2 == 0) ++tor;
    CHECK(h2.mod2_dimension() == h.mod2_dimension() + tor);
  }
}

TEST_CASE("f2 elimination") {
  CHECK(f2_rank(F2Matrix::identity(3)) == 3);
  CHECK(f2_kernel_basis(F2Matrix(2, 3)).size() == 3);
  CHECK(f2_quotient_dim(F2Matrix{{1, 1}, {1, 1}}) == 1);
  F2Matrix m{{1, 0, 1}, {0, 1, 1}};
  for (const auto& k : f2_kernel_basis(m)) {
    auto y = m.apply(k);
    CHECK(std::all_of(y.begin(), y.end(), [](auto b) { return b == 0; }));
  }
  std::vector<std::uint8_t> x;
  CHECK(f2_solve(m, {1, 1}, x));
  CHECK(m.apply(x) == std::vector<std::uint8_t>{1, 1});
  CHECK_FALSE(f2_solve(F2Matrix{{1}, {1}}, {1, 0}, x));
}

TEST_CASE("rank over F2 never exceeds the integral rank") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = random_matrix(rng, dim(rng), dim(rng), 5);
    REQUIRE(f2_rank(F2Matrix::reduce(m)) <= rank(m));
  }
}

TEST_CASE("integer kernel basis") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng, 3, 5, 4);
    const auto k = integer_kernel_basis(m);
    CHECK((m * k).is_zero());
    CHECK(k.cols() == 5 - rank(m));
  }
}
