#include <benchmark/benchmark.h>

#include "rooksa/characters.hpp"
#include "rooksa/fixtures.hpp"
#include "rooksa/group_algebra.hpp"
#include "rooksa/inverse_semigroup.hpp"
#include "rooksa/rook_algebra.hpp"
#include "rooksa/rook_monoid.hpp"
#include "rooksa/spectral.hpp"

namespace {

using namespace rooksa;

void BM_EnumerateRookMonoid(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_rook_monoid(n));
  }
}
BENCHMARK(BM_EnumerateRookMonoid)->Arg(3)->Arg(4)->Arg(5);

void BM_MultiplicationTable(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rook_multiplication_table(n));
  }
}
BENCHMARK(BM_MultiplicationTable)->Arg(2)->Arg(3);

void BM_ValidateInverseSemigroup(benchmark::State& state) {
  auto table = rook_multiplication_table(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(FiniteInverseSemigroup::validate(table));
  }
}
BENCHMARK(BM_ValidateInverseSemigroup)->Arg(2)->Arg(3);

void BM_CharacterTable(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(CharacterTable(k));
  }
}
BENCHMARK(BM_CharacterTable)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

void BM_ZetaTransform(benchmark::State& state) {
  Dataset d = *fixture_dataset("apa-rank3");
  AlgebraElement f = d.as_element(Basis::semigroup);
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_groupoid_basis(f));
  }
}
BENCHMARK(BM_ZetaTransform);

void BM_IsotypicProjectRook(benchmark::State& state) {
  Dataset d = *fixture_dataset("apa-rank3");
  AlgebraElement f = d.as_element(Basis::groupoid);
  CharacterTable table(3);
  IntegerPartition lambda({2, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(isotypic_project_rook(f, lambda, table));
  }
}
BENCHMARK(BM_IsotypicProjectRook);

void BM_AnalyzeGroupoidApa(benchmark::State& state) {
  Dataset d = *fixture_dataset("apa-rank3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze_groupoid(d));
  }
}
BENCHMARK(BM_AnalyzeGroupoidApa);

void BM_AnalyzeSemigroupApa(benchmark::State& state) {
  Dataset d = *fixture_dataset("apa-rank3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze_semigroup(d));
  }
}
BENCHMARK(BM_AnalyzeSemigroupApa);

void BM_DiaconisAveraging(benchmark::State& state) {
  Dataset d = *fixture_dataset("apa-rank3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(diaconis_partial_analysis(d.counts, 5));
  }
}
BENCHMARK(BM_DiaconisAveraging);

} // namespace

BENCHMARK_MAIN();
