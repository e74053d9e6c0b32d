#include <benchmark/benchmark.h>

#include "cda/catalog.hpp"
#include "cda/construct.hpp"
#include "cda/locate.hpp"
#include "cda/verify.hpp"

using namespace cda;

static void BM_SimpleCoaCheck27(benchmark::State& state) {
  Array coa = catalog_seed("coa3-2-6-3").array;
  for (auto _ : state) benchmark::DoNotOptimize(is_simple_coa(coa, 2, 3));
}
BENCHMARK(BM_SimpleCoaCheck27);

static void BM_SimpleCoaCheck216(benchmark::State& state) {
  Array coa2 = column_select_coa(zero_sum_oa(3, 2), {1, 2, 3, 4, 1}, 2, 2);
  Array coa3 = column_select_coa(zero_sum_oa(3, 3), {1, 2, 3, 4, 1}, 2, 3);
  Array big = inflate_product(RowDivisibleArray::whole(coa2, 2), {coa3}, 2).array();
  for (auto _ : state) benchmark::DoNotOptimize(is_simple_coa(big, 2, 6));
}
BENCHMARK(BM_SimpleCoaCheck216);

static void BM_DetectingScan(benchmark::State& state) {
  Array coa = catalog_seed("coa3-2-6-3").array;
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_cda_direct(coa, d, 2));
}
BENCHMARK(BM_DetectingScan)->Arg(1)->Arg(2);

static void BM_LocateFaults(benchmark::State& state) {
  Array plan = catalog_seed("coa3-2-6-3").array;
  auto all = enumerate_consecutive_interactions(plan, 2);
  OutcomeVector outcomes = simulate_outcomes(plan, {all[3], all[17]});
  for (auto _ : state)
    benchmark::DoNotOptimize(locate_faults(plan, 2, 2, outcomes, /*assume_verified=*/true));
}
BENCHMARK(BM_LocateFaults);

BENCHMARK_MAIN();
