#include <benchmark/benchmark.h>

#include <random>

#include "corpus/corpus.hpp"
#include "gp/conjugacy.hpp"

namespace {

void BM_AreConjugate(benchmark::State& state) {
  auto pres = gp::corpus::free_z2();
  std::mt19937_64 rng(4);
  gp::Element x = gp::corpus::random_element(pres, rng, state.range(0), 3);
  gp::Element w = gp::corpus::random_element(pres, rng, state.range(0), 3);
  gp::Element y = gp::conjugate(w, x);
  for (auto _ : state) benchmark::DoNotOptimize(gp::are_conjugate(x, y));
}
BENCHMARK(BM_AreConjugate)->Arg(8)->Arg(32)->Arg(128);

void BM_BruteForceConjugate(benchmark::State& state) {
  auto pres = gp::corpus::free_z2();
  gp::Element x = gp::Element::parse(pres, "x[1] y[2]");
  gp::Element y = gp::Element::parse(pres, "y[2] x[1]");
  for (auto _ : state)
    benchmark::DoNotOptimize(gp::brute_force_conjugate(x, y, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BruteForceConjugate)->DenseRange(2, 6, 2);

}  // namespace
