#include <benchmark/benchmark.h>

#include "fplab/config.hpp"
#include "fplab/linalg.hpp"
#include "fplab/oracle.hpp"

namespace {

using namespace fplab;

// Condition matrix of the doubled spread-out configuration of (2,3,...,n+1)
// in the degree just below its regularity, where ranks are largest.
IntMatrix matrix_for(int n, int& cols) {
  std::vector<int> t;
  for (int i = 2; i <= n + 1; ++i) t.push_back(i);
  const auto c = doubled(spread_out_config(TypeVector2(t)));
  const int d = 2 * (n + 1) - 1;
  cols = static_cast<int>(monomials(d).size());
  return condition_matrix(c, d);
}

void BM_RankMod(benchmark::State& state) {
  int cols = 0;
  const auto m = matrix_for(static_cast<int>(state.range(0)), cols);
  SeededRng rng(1);
  const PrimeField f(random_prime_near_2_62(rng));
  const auto mm = reduce_mod(m, static_cast<std::size_t>(cols), f);
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod(mm, f));
  state.counters["rows"] = static_cast<double>(m.size());
}
BENCHMARK(BM_RankMod)->DenseRange(3, 6);

void BM_RankBareiss(benchmark::State& state) {
  int cols = 0;
  const auto m = matrix_for(static_cast<int>(state.range(0)), cols);
  for (auto _ : state) benchmark::DoNotOptimize(rank_bareiss(m, static_cast<std::size_t>(cols)));
  state.counters["rows"] = static_cast<double>(m.size());
}
BENCHMARK(BM_RankBareiss)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  const auto c = doubled(spread_out_config({4, 5, 8, 9, 10}));
  OracleOptions o;
  o.mode = state.range(0) ? ArithmeticMode::Exact : ArithmeticMode::Modular;
  for (auto _ : state) benchmark::DoNotOptimize(analyze(c, o));
}
BENCHMARK(BM_Analyze)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_HilbertFunctionLinear(benchmark::State& state) {
  const auto c = doubled(generic_linear_config({2, 3, 4, 5, 6, 7, 8}, 5));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_function(c));
}
BENCHMARK(BM_HilbertFunctionLinear)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
