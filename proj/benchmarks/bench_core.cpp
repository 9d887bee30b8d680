// Microbenchmarks for the hot paths: pattern matching, one-step rewriting,
// bounded search, the exact deciders, and the finite-structure enumerators.

#include <benchmark/benchmark.h>

#include "monova/deduction.hpp"
#include "monova/identity.hpp"
#include "monova/lattice.hpp"
#include "monova/monoid.hpp"
#include "monova/substitution.hpp"
#include "monova/variety.hpp"
#include "monova/word.hpp"

using namespace monova;

namespace {

const Word kLhs = Word::parse("yxyzxz");
const Word kRhs = Word::parse("yxzxyxz");

void BM_MatchInstances(benchmark::State& state) {
  const Word pattern = Word::parse("xyx");
  const Word target = Word::parse("abacabacabacabac");
  for (auto _ : state) benchmark::DoNotOptimize(match_instances(pattern, target));
}
BENCHMARK(BM_MatchInstances);

void BM_StepSuccessors(benchmark::State& state) {
  const Basis basis = builtin_basis("D");
  const Word w = Word::parse("a^3bab");
  for (auto _ : state) benchmark::DoNotOptimize(step_successors(w, basis));
}
BENCHMARK(BM_StepSuccessors);

void BM_DeductionSearch(benchmark::State& state) {
  const Basis basis = builtin_basis("B23");
  const Word from = Word::parse("x^5"), to = Word::parse("x^9");
  for (auto _ : state) benchmark::DoNotOptimize(deduction_search(from, to, basis));
}
BENCHMARK(BM_DeductionSearch);

void BM_ReachableBall(benchmark::State& state) {
  const Basis basis = builtin_basis("D");
  const Word from = Word::parse("a^3bab");
  for (auto _ : state)
    benchmark::DoNotOptimize(ReachableBall(from, basis, SearchBounds{8, 7}));
}
BENCHMARK(BM_ReachableBall);

void BM_IsotermCheck(benchmark::State& state) {
  const Basis basis = builtin_basis("B23");
  for (auto _ : state) benchmark::DoNotOptimize(is_isoterm(kLhs, basis));
}
BENCHMARK(BM_IsotermCheck);

void BM_DecideC2(benchmark::State& state) {
  const VarietyExpr c2 = VarietyExpr::C(2);
  const Identity id{kLhs, kRhs};
  for (auto _ : state) benchmark::DoNotOptimize(decide(c2, id));
}
BENCHMARK(BM_DecideC2);

void BM_EnumerateMonoids(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_monoids(order));
}
BENCHMARK(BM_EnumerateMonoids)->Arg(3)->Arg(4);

void BM_EnumerateLattices(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long n = 0;
    enumerate_lattices(size, [&](const FiniteLattice&) {
      ++n;
      return true;
    });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateLattices)->Arg(5)->Arg(6);

void BM_LatticeLawScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_lattice_laws(5));
}
BENCHMARK(BM_LatticeLawScan);

void BM_CountermodelSearch(benchmark::State& state) {
  const Basis basis = builtin_basis("D");
  const Identity comm = Identity::parse("xy = yx");
  for (auto _ : state) benchmark::DoNotOptimize(find_countermodel(basis, comm, 5));
}
BENCHMARK(BM_CountermodelSearch);

}  // namespace

BENCHMARK_MAIN();
