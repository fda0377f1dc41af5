#include <benchmark/benchmark.h>

#include "qfl/qfl.hpp"

namespace {

void BM_SieveRange(benchmark::State& state) {
  const auto spec = qfl::validate_b(1);
  qfl::SieveConfig cfg;
  cfg.hi = static_cast<std::uint64_t>(state.range(0)) + 1;
  for (auto _ : state) {
    std::uint64_t units = 0;
    qfl::sieve_range(spec, cfg, [&](const qfl::TermFactorization& tf) { units += tf.factors.size(); });
    benchmark::DoNotOptimize(units);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SieveRange)->Arg(10'000)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_Rho(benchmark::State& state) {
  const auto spec = qfl::validate_b(1);
  const std::uint64_t cp[] = {static_cast<std::uint64_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(qfl::rho(spec, cp).checkpoints.back().rho);
}
BENCHMARK(BM_Rho)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_ChowlaTodd(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qfl::chowla_todd_density(state.range(0)).count);
}
BENCHMARK(BM_ChowlaTodd)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_PellFundamental(benchmark::State& state) {
  const auto Ds = qfl::enumerate_D(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    std::uint64_t solved = 0;
    for (const auto& D : Ds) solved += qfl::negative_pell_fundamental(D, 10'000).outcome == qfl::PellOutcome::Solved;
    benchmark::DoNotOptimize(solved);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(Ds.size()));
}
BENCHMARK(BM_PellFundamental)->Arg(42)->Arg(62)->Unit(benchmark::kMillisecond);

void BM_Stormer(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qfl::stormer_search(static_cast<std::uint64_t>(state.range(0))).max_n);
}
BENCHMARK(BM_Stormer)->Arg(14)->Arg(42)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
