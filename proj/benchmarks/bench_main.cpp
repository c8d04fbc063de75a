#include <benchmark/benchmark.h>

#include "mvq/mvq.hpp"

namespace {

using namespace mvq;

void BM_LatticeTwoPrimes(benchmark::State& state) {
  const Signature variety({2, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_subquasivarieties(variety));
  }
}
BENCHMARK(BM_LatticeTwoPrimes);

void BM_LatticePrimePower(benchmark::State& state) {
  const Signature variety({static_cast<int>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_subquasivarieties(variety));
  }
}
BENCHMARK(BM_LatticePrimePower)->Arg(8)->Arg(16);

void BM_CriticalOracle(benchmark::State& state) {
  const ProductAlgebra algebra({2, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(critical_oracle(algebra));
  }
}
BENCHMARK(BM_CriticalOracle);

void BM_CriticalOracleCube(benchmark::State& state) {
  const ProductAlgebra algebra({3, 3, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(critical_oracle(algebra));
  }
}
BENCHMARK(BM_CriticalOracleCube);

void BM_EndomorphismSearch(benchmark::State& state) {
  const TableAlgebra t = make_table(ProductAlgebra({2, 3}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_homomorphisms(t, t));
  }
}
BENCHMARK(BM_EndomorphismSearch);

void BM_SubuniverseLattice(benchmark::State& state) {
  const ProductAlgebra algebra({2, 4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_subuniverses(algebra));
  }
}
BENCHMARK(BM_SubuniverseLattice);

void BM_SatisfiesTwoVariables(benchmark::State& state) {
  const ProductAlgebra algebra({4, 5});
  const Quasiequation q = parse_quasiequation("3*x0 = 1 & 3*~x0 = 1 => V[2](x1)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(satisfies(algebra, q));
  }
}
BENCHMARK(BM_SatisfiesTwoVariables);

void BM_ParseRoundTrip(benchmark::State& state) {
  const std::string text = "3*x0 = 1 & 3*~x0 = 1 => V[2](x1)";
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_string(parse_quasiequation(text)));
  }
}
BENCHMARK(BM_ParseRoundTrip);

void BM_LexClosureGrowth(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(lex_closure_growth(1, {{0, 1}}, state.range(0)));
  }
}
BENCHMARK(BM_LexClosureGrowth)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
