#include <benchmark/benchmark.h>

#include <vector>

#include "hollowlat/module.hpp"
#include "hollowlat/module_classes.hpp"
#include "hollowlat/pshollow.hpp"
#include "hollowlat/spectra.hpp"

using namespace hollowlat;

namespace {

// Range 0 picks the module, range 1 picks serial (0) or parallel (1).
FiniteModule module_for(std::int64_t i) {
  switch (i) {
    case 0: return FiniteModule(Ring(2), {2, 2, 2, 2});
    case 1: return FiniteModule(Ring(2), {2, 2, 2, 2, 2});
    default: return FiniteModule(Ring(4), {2, 4, 4});
  }
}

Execution exec_for(std::int64_t i) { return i == 0 ? Execution::serial : Execution::parallel; }

const SubmoduleLattice& cached(std::int64_t i) {
  static const std::vector<SubmoduleLattice> subs{SubmoduleLattice(module_for(0)), SubmoduleLattice(module_for(1)),
                                                  SubmoduleLattice(module_for(2))};
  return subs.at(static_cast<std::size_t>(i));
}

void args(benchmark::internal::Benchmark* b) {
  for (std::int64_t m = 0; m < 3; ++m)
    for (std::int64_t e = 0; e < 2; ++e) b->Args({m, e});
}

void BM_BuildLattice(benchmark::State& state) {
  const auto M = module_for(state.range(0));
  const auto exec = exec_for(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(SubmoduleLattice(M, default_module_bound(), exec).size());
}

void BM_SecondSpectrum(benchmark::State& state) {
  const auto& sub = cached(state.range(0));
  const auto exec = exec_for(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(sub.action(), SpectrumKind::second, exec));
}

void BM_PsHollowSubmodules(benchmark::State& state) {
  const auto& sub = cached(state.range(0));
  const auto exec = exec_for(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ps_hollow_submodules(sub, exec));
}

void BM_IsDistributive(benchmark::State& state) {
  const auto& sub = cached(state.range(0));
  const auto exec = exec_for(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(is_distributive(sub, exec));
}

}  // namespace

BENCHMARK(BM_BuildLattice)->Apply(args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SecondSpectrum)->Apply(args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PsHollowSubmodules)->Apply(args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsDistributive)->Apply(args)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
