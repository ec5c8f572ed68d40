#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "mawcmp/circular.hpp"
#include "mawcmp/lw.hpp"
#include "mawcmp/maw.hpp"
#include "mawcmp/qgram.hpp"
#include "mawcmp/suffix_array.hpp"

namespace {

std::string random_dna(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::string s(n, 'a');
  for (auto& c : s) c = "acgt"[rng() % 4];
  return s;
}

void BM_SuffixArray(benchmark::State& state) {
  const auto x = random_dna(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(mawcmp::build_suffix_array(x));
  state.SetComplexityN(state.range(0));
}

void BM_ComputeMaws(benchmark::State& state) {
  const auto x = random_dna(state.range(0), 2);
  const mawcmp::Alphabet sigma("acgt");
  for (auto _ : state) benchmark::DoNotOptimize(mawcmp::compute_maws(x, sigma));
  state.SetComplexityN(state.range(0));
}

void BM_LwDistance(benchmark::State& state) {
  const auto x = random_dna(state.range(0), 3);
  const auto y = random_dna(state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(mawcmp::lw_distance(x, y).value);
  state.SetComplexityN(state.range(0));
}

void BM_CircularLw(benchmark::State& state) {
  const auto x = random_dna(state.range(0), 5);
  const auto y = random_dna(state.range(0), 6);
  for (auto _ : state) benchmark::DoNotOptimize(mawcmp::circular_lw(x, y).value);
  state.SetComplexityN(state.range(0));
}

void BM_ComputeQ(benchmark::State& state) {
  const auto x = random_dna(state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(mawcmp::compute_q(x));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_SuffixArray)->RangeMultiplier(4)->Range(1 << 12, 1 << 20)->Complexity(benchmark::oN);
BENCHMARK(BM_ComputeMaws)->RangeMultiplier(4)->Range(1 << 12, 1 << 20)->Complexity(benchmark::oN);
BENCHMARK(BM_LwDistance)->RangeMultiplier(4)->Range(1 << 12, 1 << 20)->Complexity(benchmark::oN);
BENCHMARK(BM_CircularLw)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Complexity(benchmark::oN);
BENCHMARK(BM_ComputeQ)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Complexity(benchmark::oN);
BENCHMARK_MAIN();
