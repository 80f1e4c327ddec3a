#include <benchmark/benchmark.h>

#include <random>

#include "s2s2/ahss.hpp"
#include "s2s2/catalog.hpp"
#include "s2s2/exact_linalg.hpp"
#include "s2s2/f2_ring.hpp"
#include "s2s2/gamma_quadratic.hpp"
#include "s2s2/group_homalg.hpp"

using namespace s2s2;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> entry(-20, 20);
  linalg::IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_CohomologyZ4(benchmark::State& state) {
  const auto g = homalg::FiniteAbelianGroup::cyclic(4);
  const auto m = catalog::z4_pi2();
  for (auto _ : state)
    for (std::size_t n = 0; n <= static_cast<std::size_t>(state.range(0)); ++n)
      benchmark::DoNotOptimize(homalg::group_cohomology(g, m, n));
}
BENCHMARK(BM_CohomologyZ4)->Arg(6)->Arg(12);

static void BM_CohomologyZ2xZ2(benchmark::State& state) {
  const homalg::FiniteAbelianGroup g({2, 2});
  const auto m = catalog::rp2xrp2_pi2();
  for (auto _ : state)
    for (std::size_t n = 0; n <= 6; ++n) benchmark::DoNotOptimize(homalg::group_cohomology(g, m, n));
}
BENCHMARK(BM_CohomologyZ2xZ2);

static void BM_RingBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ring::build_ring(catalog::rp2_twisted_rp2_ring()));
}
BENCHMARK(BM_RingBuild);

static void BM_RingIsomorphism(benchmark::State& state) {
  const auto a = ring::build_ring(catalog::rp2xrp2_ring());
  const auto b = ring::build_ring(catalog::rp2_twisted_rp2_ring());
  for (auto _ : state) benchmark::DoNotOptimize(ring::ring_isomorphic(a, b));
}
BENCHMARK(BM_RingIsomorphism);

static void BM_WuClasses(benchmark::State& state) {
  const auto r = ring::build_ring(catalog::rp2_twisted_rp2_ring());
  for (auto _ : state) {
    benchmark::DoNotOptimize(r.wu_class(1));
    benchmark::DoNotOptimize(r.wu_class(2));
  }
}
BENCHMARK(BM_WuClasses);

static void BM_GammaOrbits(benchmark::State& state) {
  const auto gm = gamma::gamma_functor(homalg::FiniteAbelianGroup({2, 2}), catalog::rp2xrp2_pi2(), {-1, -1});
  const std::vector<gamma::Symmetry> swap = {{"swap", linalg::IntMatrix{{0, 1}, {1, 0}}}};
  for (auto _ : state) benchmark::DoNotOptimize(gamma::torsion_orbit_count(gm, swap));
}
BENCHMARK(BM_GammaOrbits);

static void BM_BordismZ4(benchmark::State& state) {
  auto r = ring::build_ring(catalog::z4_group_ring());
  const ahss::BordismInput in{homalg::FiniteAbelianGroup::cyclic(4), r, r.parse_class("x"), r.parse_class("u"), {-1}};
  for (auto _ : state) benchmark::DoNotOptimize(ahss::bordism_answer(in));
}
BENCHMARK(BM_BordismZ4);
