#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "ferro/dyadic.hpp"
#include "ferro/norms.hpp"
#include "ferro/paraproduct.hpp"
#include "ferro/random_fields.hpp"

namespace {

struct Setup {
  ferro::Grid grid;
  ferro::DyadicPartition part;
  ferro::SpectralField a;
  ferro::SpectralField b;
};

Setup make_setup(int n) {
  ferro::Grid g{n, n, 2.0 * std::numbers::pi};
  std::mt19937_64 rng(53);
  Setup s{g, ferro::DyadicPartition::make(g), ferro::SpectralField(),
          ferro::SpectralField()};
  s.a = ferro::random_band_limited(g, 1, n / 4, 1.0, rng);
  s.b = ferro::random_band_limited(g, 1, n / 4, 1.0, rng);
  return s;
}

void BM_Paraproduct(benchmark::State& state) {
  const auto s = make_setup(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto out = ferro::paraproduct(s.a, s.b, s.part);
    benchmark::DoNotOptimize(out.raw().data());
  }
}

void BM_Remainder(benchmark::State& state) {
  const auto s = make_setup(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto out = ferro::remainder(s.a, s.b, s.part);
    benchmark::DoNotOptimize(out.raw().data());
  }
}

void BM_DyadicBlock(benchmark::State& state) {
  const auto s = make_setup(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto out = ferro::dyadic_block(s.a, 3, s.part);
    benchmark::DoNotOptimize(out.raw().data());
  }
}

void BM_SobolevNormDirect(benchmark::State& state) {
  const auto s = make_setup(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    double v = ferro::sobolev_norm_direct(s.a, 1.5);
    benchmark::DoNotOptimize(v);
  }
}

void BM_SobolevNormLp(benchmark::State& state) {
  const auto s = make_setup(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    double v = ferro::sobolev_norm_lp(s.a, 1.5, s.part);
    benchmark::DoNotOptimize(v);
  }
}

}  // namespace

BENCHMARK(BM_Paraproduct)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Remainder)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DyadicBlock)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SobolevNormDirect)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SobolevNormLp)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
