#include <benchmark/benchmark.h>

#include <random>

#include "corpus/corpus.hpp"
#include "gp/words.hpp"

namespace {

void BM_Reduce(benchmark::State& state) {
  auto pres = gp::corpus::path_racg();
  std::mt19937_64 rng(1);
  std::vector<gp::Word> words;
  for (int i = 0; i < 256; ++i) words.push_back(gp::corpus::random_word(*pres, rng, state.range(0), 3));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gp::reduce(pres, words[i++ % words.size()]));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Reduce)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_ReduceFreeIntegers(benchmark::State& state) {
  auto pres = gp::corpus::free_z2();
  std::mt19937_64 rng(2);
  gp::Word w = gp::corpus::random_word(*pres, rng, state.range(0), 5);
  for (auto _ : state) benchmark::DoNotOptimize(gp::reduce(pres, w));
}
BENCHMARK(BM_ReduceFreeIntegers)->Arg(64)->Arg(1024);

void BM_BruteForceEqual(benchmark::State& state) {
  auto pres = gp::corpus::path_racg();
  std::mt19937_64 rng(3);
  gp::Word w = gp::corpus::random_word(*pres, rng, 10, 1);
  gp::Element e = gp::reduce(pres, w);
  for (auto _ : state) benchmark::DoNotOptimize(gp::brute_force_equal(*pres, w, e.word(), 100000));
}
BENCHMARK(BM_BruteForceEqual);

void BM_Ball(benchmark::State& state) {
  auto pres = gp::corpus::path_c3();
  for (auto _ : state)
    benchmark::DoNotOptimize(gp::enumerate_ball(pres, {static_cast<std::size_t>(state.range(0)), 0, std::nullopt}));
}
BENCHMARK(BM_Ball)->DenseRange(2, 5);

}  // namespace
