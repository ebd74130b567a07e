#include <benchmark/benchmark.h>

#include <random>

#include "kring/catalog.hpp"
#include "kring/ktheory.hpp"
#include "kring/nerve.hpp"
#include "kring/smith.hpp"

using namespace kring;

namespace {

IntMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_IsoSearch(benchmark::State& state) {
  AdditiveView v(share(matrix_ring(cyclic_ring(2), 2)));
  const ObjSum a(static_cast<std::size_t>(state.range(0)), 0);
  Limits limits;
  limits.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(v.find_isomorphism(a, a, limits));
}
BENCHMARK(BM_IsoSearch)->Args({1, 1})->Args({2, 1})->Args({2, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_GL3F2Abelianization(benchmark::State& state) {
  auto f2 = share(cyclic_ring(2));
  for (auto _ : state) benchmark::DoNotOptimize(k1_bounded(f2, 3));
}
BENCHMARK(BM_GL3F2Abelianization)->Unit(benchmark::kMillisecond);

void BM_BoundedK0(benchmark::State& state) {
  auto r = share(group_ringoid(FinGroupoid::from_group(FinGroup::cyclic(2)), share(cyclic_ring(2))));
  const auto bound = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k0_bounded(r, bound));
}
BENCHMARK(BM_BoundedK0)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_NerveK0(benchmark::State& state) {
  auto r = share(cyclic_ring(4));
  for (auto _ : state) benchmark::DoNotOptimize(k0_via_nerve(r, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_NerveK0)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
