#include <benchmark/benchmark.h>

#include "mck/cyclic.hpp"
#include "mck/lie_cohomology.hpp"
#include "mck/verify.hpp"

using namespace mck;

namespace {

void BM_rref_random(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix m(n, n, 5);
  std::uint64_t s = 0x2545F4914F6CDD1Dull;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      s ^= s << 13;
      s ^= s >> 7;
      s ^= s << 17;
      m.set_raw(r, c, static_cast<int>(s % 5));
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(m).rank);
  }
}
BENCHMARK(BM_rref_random)->Arg(64)->Arg(128)->Arg(256);

void BM_hc1_grid(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const AssocAlgebra a = truncated_polynomial_algebra(p, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hc1(a).hc1_dim);
  }
}
BENCHMARK(BM_hc1_grid)->Args({3, 2})->Args({2, 3})->Args({5, 2});

void BM_derivations(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const AssocAlgebra a = truncated_polynomial_algebra(p, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(derivations(a).dim());
  }
}
BENCHMARK(BM_derivations)->Args({3, 2})->Args({5, 2})->Args({2, 4});

void BM_invariant_classes(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const AssocAlgebra a = truncated_polynomial_algebra(p, n);
  const auto ops = operators_of(a, derivations(a));
  for (auto _ : state) {
    benchmark::DoNotOptimize(invariant_classes(a, ops).dim());
  }
}
BENCHMARK(BM_invariant_classes)->Args({3, 2})->Args({5, 2});

void BM_prop2_full_witt(benchmark::State& state) {
  const AssocAlgebra o1 = truncated_polynomial_algebra(5, 1);
  const LieAlgebra s = sl2(5);
  const DerivationAlgebra w = witt(5, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(prop2_check(s, o1, w).match);
  }
}
BENCHMARK(BM_prop2_full_witt);

void BM_ce_h2_semidirect(benchmark::State& state) {
  const AssocAlgebra o1 = truncated_polynomial_algebra(5, 1);
  const LieAlgebra l = semidirect(sl2(5), o1, witt(5, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ce_h2(l).h2_dim);
  }
}
BENCHMARK(BM_ce_h2_semidirect);

}  // namespace

BENCHMARK_MAIN();
