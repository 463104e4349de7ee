#include <benchmark/benchmark.h>

#include "dwkit/builders.hpp"
#include "dwkit/invariant.hpp"

using namespace dwkit;

static void BM_LensStateSum(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const Cobordism lens = Cobordism::closed(build_lens(p, 1));
  const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(p);
  const auto w = GroupCochain::omega(1);
  for (auto _ : state) benchmark::DoNotOptimize(state_sum_closed(lens, a, w).value());
}
BENCHMARK(BM_LensStateSum)->Arg(5)->Arg(12)->Arg(30);

static void BM_TorusCubed(benchmark::State& state) {
  const Cobordism t3 = Cobordism::closed(build_circle_product(build_surface(1)));
  const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(state.range(0));
  const auto w = GroupCochain::omega(1);
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(state_sum_closed(t3, a, w, jobs).value());
}
BENCHMARK(BM_TorusCubed)->Args({5, 1})->Args({5, 4})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

static void BM_GenusTwoGlued(benchmark::State& state) {
  const FiniteAbelianGroup k4({2, 2});
  const auto b = GroupCochain::bicharacter(0, 1);
  const auto [left, right] = build_surface_split(1, 1);
  const auto none = FieldSpace(left.incoming().complex, k4).trivial();
  for (auto _ : state) benchmark::DoNotOptimize(glued_invariant(left, right, k4, b, none, none).value());
}
BENCHMARK(BM_GenusTwoGlued)->Unit(benchmark::kMillisecond);
