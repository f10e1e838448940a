#include <benchmark/benchmark.h>

#include "simperm/genealogy.hpp"
#include "simperm/simplicity.hpp"

namespace {

void BM_EnumerateSim4n2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simperm::enumerate_sim_4n2(n));
  state.SetLabel("order " + std::to_string(4 * n + 2));
}
BENCHMARK(BM_EnumerateSim4n2)->Arg(1)->Arg(2)->Arg(6)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_BruteForceSim(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simperm::brute_force_sim(order));
}
BENCHMARK(BM_BruteForceSim)->Arg(6)->Arg(8)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ClassifyPow2Branch(benchmark::State& state) {
  const auto p = simperm::pow2_branch(simperm::BranchFamily::kPow2Theta, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(simperm::classify(p));
}
BENCHMARK(BM_ClassifyPow2Branch)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMicrosecond);

void BM_ClassifyMixedBranch(benchmark::State& state) {
  const auto p = simperm::mixed_branch(simperm::BranchFamily::kMixedVarphi, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(simperm::classify(p));
}
BENCHMARK(BM_ClassifyMixedBranch)->Arg(10)->Arg(102)->Arg(1002)->Unit(benchmark::kMicrosecond);

}  // namespace
