#include <benchmark/benchmark.h>

#include "s2s2/kkr.hpp"
#include "s2s2/quat_geom.hpp"

using namespace s2s2;

static void BM_DoublePoints(benchmark::State& state) {
  const auto s = kkr::immersion(kkr::Quotient::RP4SumRP4, "y");
  kkr::SolveOptions opts;
  opts.grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kkr::double_points(s, opts));
}
BENCHMARK(BM_DoublePoints)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_DistinctionTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kkr::distinguish_quotients());
}
BENCHMARK(BM_DistinctionTable)->Unit(benchmark::kMillisecond);

static void BM_VerifySigma(benchmark::State& state) {
  geom::VerifyOptions opts;
  opts.samples = 1000;
  opts.grid = static_cast<std::size_t>(state.range(0));
  const auto& sigma = geom::find_action("sigma");
  for (auto _ : state) benchmark::DoNotOptimize(geom::verify_action(sigma, opts));
}
BENCHMARK(BM_VerifySigma)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_CoveringCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(geom::covering_check(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CoveringCheck)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
