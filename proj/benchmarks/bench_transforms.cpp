#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "ferro/magnetostatics.hpp"
#include "ferro/random_fields.hpp"
#include "ferro/transforms.hpp"

namespace {

ferro::Grid square(int n) { return {n, n, 2.0 * std::numbers::pi}; }

void BM_ForwardTransform(benchmark::State& state) {
  const ferro::Grid g = square(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(17);
  const auto spec = ferro::random_band_limited(g, 1, g.n1 / 4, 1.0, rng);
  const auto phys = ferro::inverse_transform(spec);  // also warms the plan
  for (auto _ : state) {
    auto out = ferro::forward_transform(phys);
    benchmark::DoNotOptimize(out.raw().data());
  }
}

void BM_InverseTransform(benchmark::State& state) {
  const ferro::Grid g = square(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(17);
  const auto spec = ferro::random_band_limited(g, 1, g.n1 / 4, 1.0, rng);
  ferro::inverse_transform(spec);
  for (auto _ : state) {
    auto out = ferro::inverse_transform(spec);
    benchmark::DoNotOptimize(out.raw().data());
  }
}

void BM_MagnetostaticSolve(benchmark::State& state) {
  const ferro::Grid g = square(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(29);
  const auto m = ferro::random_band_limited(g, 2, g.n1 / 4, 1.0, rng);
  const auto f = ferro::random_band_limited(g, 1, g.n1 / 4, 1.0, rng);
  for (auto _ : state) {
    auto sol = ferro::solve_h(m, f);
    benchmark::DoNotOptimize(sol.h.raw().data());
  }
}

}  // namespace

BENCHMARK(BM_ForwardTransform)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_InverseTransform)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MagnetostaticSolve)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
