#include <benchmark/benchmark.h>

#include "taulike/embedder.hpp"
#include "taulike/gadgets.hpp"
#include "taulike/harness.hpp"
#include "taulike/linearizer.hpp"

using namespace taulike;

namespace {

void BM_SzpilrajnExtend(benchmark::State& state) {
  const auto p = random_poset(static_cast<std::size_t>(state.range(0)), 0.1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(szpilrajn_extend(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SzpilrajnExtend)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_AllLinearExtensions(benchmark::State& state) {
  const auto p = fence(static_cast<std::size_t>(state.range(0)));
  const auto jobs = static_cast<unsigned>(state.range(1));
  std::size_t count = 0;
  for (auto _ : state) count = all_linear_extensions(p, kExhaustiveLimit, jobs).size();
  state.counters["extensions"] = static_cast<double>(count);
}
BENCHMARK(BM_AllLinearExtensions)->Args({8, 1})->Args({10, 1})->Args({10, 4})->Unit(benchmark::kMillisecond);

void BM_OmegaLinearize(benchmark::State& state) {
  const auto s = omega_stream();
  for (auto _ : state) benchmark::DoNotOptimize(omega_linearize(s, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_OmegaLinearize)->Arg(100)->Arg(1000);

void BM_ZetaLinearize(benchmark::State& state) {
  const auto s = zeta_stream(ZetaEnumeration::Skewed);
  for (auto _ : state) benchmark::DoNotOptimize(zeta_linearize(s, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ZetaLinearize)->Arg(50)->Arg(200);

void BM_RangeRecovery(benchmark::State& state) {
  const auto g = make_range_gadget(InjectiveFunction::parse("prefix:8,3,11,5,0,14,2"));
  const auto horizon = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const auto split = split_linearize(g.stream, 2 * horizon);
    benchmark::DoNotOptimize(decode_false_stages(split.order, 50));
  }
}
BENCHMARK(BM_RangeRecovery)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_EmbedGadgetRange(benchmark::State& state) {
  const auto f = InjectiveFunction::identity();
  const auto g = make_embed_gadget(f);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const auto h = embed_poset(g.stream, OrderKind::Omega, embed_gadget_budget(g, k));
    benchmark::DoNotOptimize(decode_range(h, f.values(h.size()), k - 1));
  }
}
BENCHMARK(BM_EmbedGadgetRange)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_ValidateOracles(benchmark::State& state) {
  const auto g = make_range_gadget(InjectiveFunction::identity());
  for (auto _ : state) benchmark::DoNotOptimize(validate_oracles(g.stream, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ValidateOracles)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_StageOrder(benchmark::State& state) {
  const auto values = InjectiveFunction::pair_swaps(static_cast<std::size_t>(state.range(0)) / 2)
                          .values(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(make_stage_order(values).as_linear_order());
}
BENCHMARK(BM_StageOrder)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
