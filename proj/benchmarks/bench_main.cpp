#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "leecodes/codes.hpp"
#include "leecodes/criterion.hpp"
#include "leecodes/modular.hpp"
#include "leecodes/witness.hpp"

using namespace leecodes;
using u64 = std::uint64_t;

static void BM_MulMod(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const modular::Modulus m((rng() >> 1) | 3);
  u64 x = rng() % m, y = rng() % m;
  for (auto _ : state) {
    x = modular::mul_mod(x, y, m);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_MulMod);

static void BM_IsPrime(benchmark::State& state) {
  u64 v = 20'000'200'001ull;
  for (auto _ : state) {
    benchmark::DoNotOptimize(modular::is_prime(v));
    v += 2;
  }
}
BENCHMARK(BM_IsPrime);

static void BM_CheckExact(benchmark::State& state) {
  const auto n = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(criterion::check_n(n));
}
BENCHMARK(BM_CheckExact)->Arg(1000)->Arg(99'999)->Arg(1'000'000);

static void BM_CheckFast(benchmark::State& state) {
  const auto n = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(criterion::check_n_fast(n));
}
BENCHMARK(BM_CheckFast)->Arg(1000)->Arg(99'999);

static void BM_Scan(benchmark::State& state) {
  const auto x_max = static_cast<u64>(state.range(0));
  const std::vector<u64> thresholds{x_max};
  for (auto _ : state) benchmark::DoNotOptimize(criterion::scan(x_max, thresholds));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * x_max));
}
BENCHMARK(BM_Scan)->Arg(1000)->Arg(10'000)->Unit(benchmark::kMillisecond);

static void BM_SearchWitness(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  u64 nodes = 0;
  for (auto _ : state) {
    const auto out = witness::search(n, {.find_all = true});
    nodes = out.nodes_explored;
    benchmark::DoNotOptimize(out);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SearchWitness)->Arg(4)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_VerifyDim2(benchmark::State& state) {
  const auto code = codes::construct_gw(codes::GwFamily::Dim2, static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(codes::verify(code));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * code.q * code.q));
}
BENCHMARK(BM_VerifyDim2)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_VerifyRadius1(benchmark::State& state) {
  const auto code = codes::construct_gw(codes::GwFamily::Radius1, static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(codes::verify(code));
}
BENCHMARK(BM_VerifyRadius1)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
