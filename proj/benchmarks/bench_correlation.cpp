#include <random>

#include <benchmark/benchmark.h>

#include "ccs/constructions.hpp"
#include "ccs/verification.hpp"

namespace {

ccs::QarySequence random_sequence(std::mt19937& rng, int q, std::size_t L) {
  ccs::QarySequence s;
  s.q = q;
  s.values.resize(L);
  for (auto& v : s.values) v = static_cast<int>(rng() % q);
  return s;
}

ccs::Thm3Params quaternary_zccs_params() {
  ccs::Thm3Params p;
  p.q = 4;
  p.m = 3;
  p.v = 1;
  p.d = 1;
  p.plan.blocks = {{2, 1}};
  p.a_quad[{1, 1}] = 1;
  p.h_power = {{{1, 1}, 1}, {{2, 1}, 2}, {{3, 1}, 2},
               {{1, 2}, 3}, {{2, 2}, 1}, {{3, 2}, 0},
               {{1, 3}, 2}, {{2, 3}, 1}, {{3, 3}, 3}};
  p.h0 = 1;
  return p;
}

void BM_accf(benchmark::State& state) {
  std::mt19937 rng(1);
  const int q = static_cast<int>(state.range(0));
  const std::size_t L = static_cast<std::size_t>(state.range(1));
  auto a = random_sequence(rng, q, L);
  auto b = random_sequence(rng, q, L);
  std::int64_t tau = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ccs::accf(a, b, tau));
    tau = (tau + 1) % static_cast<std::int64_t>(L);
  }
}
BENCHMARK(BM_accf)->Args({2, 64})->Args({4, 64})->Args({4, 256})->Args({8, 256});

void BM_is_zero(benchmark::State& state) {
  std::mt19937 rng(2);
  const int q = static_cast<int>(state.range(0));
  auto s = ccs::RootOfUnitySum::zero(q);
  for (auto& c : s.coeffs) c = static_cast<std::int64_t>(rng() % 201) - 100;
  for (auto _ : state) benchmark::DoNotOptimize(ccs::is_zero(s));
}
BENCHMARK(BM_is_zero)->Arg(4)->Arg(12)->Arg(60)->Arg(256);

void BM_build_zccs(benchmark::State& state) {
  const auto p = quaternary_zccs_params();
  for (auto _ : state) benchmark::DoNotOptimize(ccs::build_zccs(p));
}
BENCHMARK(BM_build_zccs);

void BM_verify_zccs(benchmark::State& state) {
  const auto family = ccs::build_zccs(quaternary_zccs_params());
  for (auto _ : state) {
    benchmark::DoNotOptimize(ccs::verify_zccs(family, 16));
  }
}
BENCHMARK(BM_verify_zccs);

}  // namespace

BENCHMARK_MAIN();
