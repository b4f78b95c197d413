#include <benchmark/benchmark.h>

#include "cubetile/geometry.hpp"
#include "cubetile/identities.hpp"
#include "cubetile/layer_dp.hpp"
#include "cubetile/recurrences.hpp"

namespace {

using namespace cubetile;

void BM_CountExhaustive(benchmark::State& state) {
  const Board board = Board::full(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Poly2 count = count_exhaustive(board);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CountExhaustive)->DenseRange(1, 5);

void BM_CountDp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Poly2 count = count_dp(n);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CountDp)->RangeMultiplier(2)->Range(8, 128);

void BM_CountUnbreakableDp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Poly2 count = count_unbreakable_dp(n);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CountUnbreakableDp)->RangeMultiplier(2)->Range(8, 128);

void BM_RecurrenceFull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RecurrenceSpec spec = recurrence_full();
  for (auto _ : state) {
    Poly2 value = eval_recurrence(spec, n);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_RecurrenceFull)->RangeMultiplier(2)->Range(8, 128);

void BM_RecurrenceFullIntegers(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RecurrenceSpec spec =
      specialize(recurrence_full(), Rational(1), Rational(1));
  for (auto _ : state) {
    Poly2 value = eval_recurrence(spec, n);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_RecurrenceFullIntegers)->RangeMultiplier(4)->Range(64, 4096);

void BM_PolyMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Poly2 value = count_dp(n);
  for (auto _ : state) {
    Poly2 square = value * value;
    benchmark::DoNotOptimize(square);
  }
}
BENCHMARK(BM_PolyMul)->DenseRange(4, 20, 8);

void BM_Charpoly(benchmark::State& state) {
  const PolyMatrix m = matrix_full_system();
  for (auto _ : state) {
    CharPoly c = charpoly(m);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Charpoly);

void BM_IdentitySuite(benchmark::State& state) {
  IdentityOptions options;
  options.n_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto reports = run_all_identities(options);
    benchmark::DoNotOptimize(reports);
  }
}
BENCHMARK(BM_IdentitySuite)->DenseRange(4, 12, 4);

}  // namespace

BENCHMARK_MAIN();
