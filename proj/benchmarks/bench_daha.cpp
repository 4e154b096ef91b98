#include <benchmark/benchmark.h>

#include "daha/involution.hpp"
#include "daha/lemmas.hpp"

#include <random>

using namespace daha;

namespace {

void BM_ReducedWord(benchmark::State& state) {
  auto d = load_cartan_datum("C3~");
  auto lam = translation(d, d.antidominant_gen);
  for (auto _ : state) {
    auto word = reduced_word(d, lam);
    benchmark::DoNotOptimize(word);
  }
}
BENCHMARK(BM_ReducedWord);

void BM_EnumerateLength5(benchmark::State& state) {
  auto d = load_cartan_datum("B2~");
  for (auto _ : state) {
    auto all = enumerate_by_length(d, 5);
    benchmark::DoNotOptimize(all);
  }
}
BENCHMARK(BM_EnumerateLength5);

void BM_Multiply(benchmark::State& state) {
  auto d = load_cartan_datum("B2~");
  std::mt19937_64 rng(42);
  auto a = evaluate(d, random_word(d, rng, 4));
  auto b = evaluate(d, random_word(d, rng, 4));
  for (auto _ : state) {
    auto c = multiply(d, a, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Multiply);

void BM_YElement(benchmark::State& state) {
  auto d = load_cartan_datum("G2~");
  IntVec mu{2, -1};
  for (auto _ : state) {
    auto y = y_element(d, mu);
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_YElement);

void BM_PushXThroughT(benchmark::State& state) {
  auto d = load_cartan_datum("G2~");
  IntVec beta{2, 1, 0};
  for (auto _ : state) {
    auto h = push_x_through_t(d, 1, beta);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_PushXThroughT);

void BM_VerifyTheorem(benchmark::State& state) {
  auto d = load_cartan_datum("B2~");
  for (auto _ : state) {
    auto rep = verify_theorem2(d);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_VerifyTheorem);

void BM_LemmaSuite(benchmark::State& state) {
  auto d = load_cartan_datum("G2~");
  for (auto _ : state) {
    auto reps = verify_all_lemmas(d);
    benchmark::DoNotOptimize(reps);
  }
}
BENCHMARK(BM_LemmaSuite);

}  // namespace

BENCHMARK_MAIN();
