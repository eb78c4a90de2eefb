#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "ferro/random_fields.hpp"
#include "ferro/solver.hpp"

namespace {

// A low fixed band and small amplitude keep the advective step bound well
// above the bench dt on every grid size; the work per step does not depend
// on the data.
ferro::FerroState sample_state(const ferro::Grid& g) {
  std::mt19937_64 rng(41);
  ferro::FerroState s;
  s.t = 0.0;
  s.u = ferro::random_solenoidal(g, 8, 0.05, rng);
  s.omega = ferro::random_band_limited(g, 1, 8, 0.05, rng);
  s.m = ferro::random_band_limited(g, 2, 8, 0.05, rng);
  return s;
}

ferro::SolverConfig sample_config(const ferro::Grid& g,
                                  ferro::SolverConfig::Integrator kind) {
  ferro::SolverConfig cfg;
  cfg.grid = g;
  cfg.dt = 1e-5;
  cfg.t_end = 1.0;
  cfg.integrator = kind;
  return cfg;
}

void BM_ComputeRhs(benchmark::State& state) {
  const ferro::Grid g{static_cast<int>(state.range(0)),
                      static_cast<int>(state.range(0)),
                      2.0 * std::numbers::pi};
  const auto s = sample_state(g);
  const auto cfg = sample_config(g, ferro::SolverConfig::Integrator::etdrk2);
  const auto forcing = ferro::ForcingSpec::make_none();
  for (auto _ : state) {
    auto t = ferro::compute_rhs(s, cfg, forcing);
    benchmark::DoNotOptimize(t.du.raw().data());
  }
}

void BM_StepEtdrk2(benchmark::State& state) {
  const ferro::Grid g{static_cast<int>(state.range(0)),
                      static_cast<int>(state.range(0)),
                      2.0 * std::numbers::pi};
  const auto s = sample_state(g);
  const auto cfg = sample_config(g, ferro::SolverConfig::Integrator::etdrk2);
  const auto forcing = ferro::ForcingSpec::make_none();
  for (auto _ : state) {
    auto next = ferro::step(s, cfg, forcing);
    benchmark::DoNotOptimize(next.u.raw().data());
  }
}

void BM_StepImexCn(benchmark::State& state) {
  const ferro::Grid g{static_cast<int>(state.range(0)),
                      static_cast<int>(state.range(0)),
                      2.0 * std::numbers::pi};
  const auto s = sample_state(g);
  const auto cfg = sample_config(g, ferro::SolverConfig::Integrator::imex_cn);
  const auto forcing = ferro::ForcingSpec::make_none();
  for (auto _ : state) {
    auto next = ferro::step(s, cfg, forcing);
    benchmark::DoNotOptimize(next.u.raw().data());
  }
}

}  // namespace

BENCHMARK(BM_ComputeRhs)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_StepEtdrk2)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_StepImexCn)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);
