#include <benchmark/benchmark.h>

#include <random>

#include "gecliff/words.hpp"
#include "support/random_words.hpp"

using namespace gecliff;

static void BM_DecomposeGamma(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto units = enumerate_units(n).elements;
  std::mt19937_64 rng(5);
  std::vector<VahlenMatrix> inputs;
  for (int t = 0; t < 64; ++t) inputs.push_back(eval_word(testsupport::random_clifford_word(rng, n, 30, units)));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(inputs[k++ % inputs.size()]));
  }
}
BENCHMARK(BM_DecomposeGamma)->DenseRange(1, 4);

static void BM_DecomposeOrder(benchmark::State& state, const char* name) {
  const auto ctx = Order::by_name(name);
  const auto units = order_units(ctx);
  std::mt19937_64 rng(6);
  std::vector<RingMatrix> inputs;
  for (int t = 0; t < 64; ++t) inputs.push_back(eval_word(testsupport::random_order_word(rng, ctx, 30, units)));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(inputs[k++ % inputs.size()]));
  }
}
BENCHMARK_CAPTURE(BM_DecomposeOrder, Z, "Z");
BENCHMARK_CAPTURE(BM_DecomposeOrder, Imax_m3, "Imax:-3");
BENCHMARK_CAPTURE(BM_DecomposeOrder, hurwitz, "hurwitz");
BENCHMARK_CAPTURE(BM_DecomposeOrder, O5, "O5");
