#include <benchmark/benchmark.h>

#include <random>

#include "dwkit/builders.hpp"
#include "dwkit/cocycles.hpp"
#include "dwkit/homology.hpp"
#include "dwkit/smith.hpp"

using namespace dwkit;

static void BM_SmithRandom8(benchmark::State& state) {
  std::mt19937_64 rng(1);
  IntMatrix m(8, 8);
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) m(r, c) = static_cast<std::int64_t>(rng() % 7) - 3;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m).d);
}
BENCHMARK(BM_SmithRandom8);

// sparse +-1 matrices like the ones homology actually sees
static void BM_SmithBoundary(benchmark::State& state) {
  const auto c = build_circle_product(build_surface(static_cast<int>(state.range(0))));
  const IntMatrix d2 = boundary_matrix(c, 2);
  state.SetLabel(std::to_string(d2.rows()) + "x" + std::to_string(d2.cols()));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(d2).d);
}
BENCHMARK(BM_SmithBoundary)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_HomologyT3(benchmark::State& state) {
  const auto t3 = build_circle_product(build_surface(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(homology_h1(t3).group);
}
BENCHMARK(BM_HomologyT3)->Arg(1)->Arg(3);

// the psi check over Z/N + Z/N touches |A|^4 tuples
static void BM_PsiCocycleCheck(benchmark::State& state) {
  const FiniteAbelianGroup a({state.range(0), state.range(0)});
  const auto w = GroupCochain::psi(1);
  for (auto _ : state) benchmark::DoNotOptimize(is_cocycle(w, a));
}
BENCHMARK(BM_PsiCocycleCheck)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
