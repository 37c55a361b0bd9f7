#include <benchmark/benchmark.h>

#include "bctkit/boomtab.hpp"
#include "bctkit/difftab.hpp"
#include "bctkit/claims.hpp"

using namespace bctkit;

static void BM_FieldMul(benchmark::State& state) {
  const Field field = Field::make(static_cast<int>(state.range(0)));
  std::uint32_t acc = 3;
  for (auto _ : state) {
    acc = field.mul_raw(acc, 0x5a5a5 & field.mask()) | 1;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(16)->Arg(20);

static void BM_DdtFull(benchmark::State& state) {
  const Function f = Function::power_map(Field::make(static_cast<int>(state.range(0))), 7);
  TableOptions options;
  options.strategy = Strategy::naive;
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(ddt(f, options).max_nontrivial());
}
BENCHMARK(BM_DdtFull)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_BctRowOne(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Function f = Function::power_map(Field::make(n), (std::uint64_t{1} << (n / 2)) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(bct_row(f, Elem{1}));
  state.SetComplexityN(f.order());
}
BENCHMARK(BM_BctRowOne)->DenseRange(8, 16, 2)->Unit(benchmark::kMicrosecond)->Complexity();

static void BM_BctNaiveFull(benchmark::State& state) {
  const Function f = Function::power_map(Field::make(static_cast<int>(state.range(0))), 3);
  TableOptions options;
  options.strategy = Strategy::naive;
  options.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(bct(f, options).max_nontrivial());
}
BENCHMARK(BM_BctNaiveFull)->Args({8, 1})->Args({10, 1})->Args({10, 4})->Unit(benchmark::kMillisecond);

static void BM_Search(benchmark::State& state) {
  const Field field = Field::make(static_cast<int>(state.range(0)));
  SearchOptions options;
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(search_b_lt_delta(field, options).size());
}
BENCHMARK(BM_Search)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
