#include <benchmark/benchmark.h>

#include "cda/catalog.hpp"
#include "cda/construct.hpp"

using namespace cda;

static void BM_ZeroSum(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const int v = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(zero_sum_oa(t, v));
}
BENCHMARK(BM_ZeroSum)->Args({3, 3})->Args({3, 6})->Args({4, 4});

static void BM_BushOa(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const int q = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(bush_oa(t, q));
}
BENCHMARK(BM_BushOa)->Args({2, 9})->Args({3, 5})->Args({3, 8});

static void BM_InflateToSix(benchmark::State& state) {
  Array coa2 = column_select_coa(zero_sum_oa(3, 2), {1, 2, 3, 4, 1}, 2, 2);
  Array coa3 = column_select_coa(zero_sum_oa(3, 3), {1, 2, 3, 4, 1}, 2, 3);
  RowDivisibleArray whole = RowDivisibleArray::whole(coa2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(inflate_product(whole, {coa3}, 2));
}
BENCHMARK(BM_InflateToSix);

static void BM_WeightingToTen(benchmark::State& state) {
  Array coa2 = column_select_coa(zero_sum_oa(3, 2), {1, 2, 3, 4, 1}, 2, 2);
  RowDivisibleArray rowdiv = catalog_seed("rowdiv2-coa3-2-5-2").to_row_divisible();
  std::vector<Array> family = compatible_family_from_oa(bush_oa(3, 5), 1, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        weighting_combine({{RowDivisibleArray::whole(coa2, 2), 2}, {rowdiv, 1}}, family, 2));
}
BENCHMARK(BM_WeightingToTen);
