#include <benchmark/benchmark.h>

#include "illab/green.hpp"
#include "illab/ideal.hpp"
#include "illab/limit.hpp"
#include "illab/scenario.hpp"

using namespace illab;

namespace {

const Scenario& scenario(int index) {
  static const auto all = builtin_scenarios();
  return all.at(static_cast<std::size_t>(index));
}

void BM_Classify(benchmark::State& state) {
  const Scenario& s = scenario(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify(s.family, s.schedule));
  state.SetLabel(s.name);
}
BENCHMARK(BM_Classify)->DenseRange(0, 9);

void BM_SampleFrame(benchmark::State& state) {
  const Scenario& s = scenario(static_cast<int>(state.range(0)));
  const auto pts = s.family.at_double(0.1L / 64);
  const auto grid = grid_points(pts);
  for (auto _ : state) benchmark::DoNotOptimize(sample_frame<double>(pts, grid));
  state.SetLabel(s.name);
}
BENCHMARK(BM_SampleFrame)->Arg(0)->Arg(3)->Arg(6);

void BM_LimitIdeal(benchmark::State& state) {
  const Scenario& s = scenario(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(limit_ideal(s.family, s.schedule));
  state.SetLabel(s.name);
}
BENCHMARK(BM_LimitIdeal)->Arg(0)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_VanishingIdeal(benchmark::State& state) {
  std::vector<Point> pts;
  for (int k = 0; k < state.range(0); ++k)
    pts.push_back({Complex(0.1 * k, 0.03 * k * k), Complex(0.05 * (k % 3), -0.02 * k)});
  for (auto _ : state) benchmark::DoNotOptimize(vanishing_ideal(pts));
}
BENCHMARK(BM_VanishingIdeal)->DenseRange(2, 8, 2);

void BM_GapReport(benchmark::State& state) {
  const Polynomial f = Polynomial::parse("z2^2"), g = Polynomial::parse("z1^2");
  GapSampling s;
  s.torus = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gap_report(f, g, s));
}
BENCHMARK(BM_GapReport)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
