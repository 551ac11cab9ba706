#include <benchmark/benchmark.h>

#include <random>

#include "gecliff/presentation.hpp"
#include "gecliff/relations.hpp"
#include "gecliff/smith.hpp"

using namespace gecliff;

static void BM_SmithDiagonal(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  IntMatrix m(size, IntVector(size));
  for (auto& row : m)
    for (auto& x : row) x = Integer(static_cast<long>(rng() % 41) - 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_diagonal(m, size));
  }
}
BENCHMARK(BM_SmithDiagonal)->RangeMultiplier(2)->Range(4, 32);

static void BM_EnumerateUnits(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_units(n));
  }
}
BENCHMARK(BM_EnumerateUnits)->DenseRange(1, 6);

static void BM_VerifyPresentation(benchmark::State& state) {
  const auto p = builtin_presentation("lemma54", static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_presentation(p));
  }
}
BENCHMARK(BM_VerifyPresentation)->DenseRange(2, 6, 2);

static void BM_Abelianize(benchmark::State& state) {
  const auto p = builtin_presentation("lemma53", static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(abelianization(p));
  }
}
BENCHMARK(BM_Abelianize)->DenseRange(2, 6, 2);

static void BM_RelationFamilies(benchmark::State& state) {
  RelationOptions opts;
  opts.budget = 100;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_relation_families(n, relation_family_names(), opts));
  }
}
BENCHMARK(BM_RelationFamilies)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
