#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ferro/forcing.hpp"
#include "ferro/params.hpp"
#include "ferro/solver.hpp"
#include "ferro/state.hpp"

namespace ferro {

// Initial-condition recipe from the config text.
//   zero
//   modes:<entries>   entries field,k1,k2,amp[,phase] joined by ';'
//                     field in {u, omega, m1, m2}; u modes are rotated to the
//                     solenoidal direction perp(k)/|k|
//   random:<seed>,<band>,<amplitude>   (draw order: u, omega, m)
//   file:<path>       physical-sample dump with fields u, omega, m
struct InitSpec {
  enum class Kind { zero, modes, random, file };
  struct Mode {
    std::string field;
    int k1 = 0;
    int k2 = 0;
    double amp = 0.0;
    double phase = 0.0;
  };

  Kind kind = Kind::zero;
  std::vector<Mode> modes;
  std::uint64_t seed = 0;
  int band = 0;
  double amplitude = 0.0;
  std::string path;
};

struct OutputSpec {
  std::string dir = "out";
  int stride = 1;
};

// Full experiment description, one key=value per line, '#' comments. Keys:
//   grid.n1 grid.n2 grid.length
//   params.rho0 params.k params.eta params.zeta params.eta_prime params.mu0
//   params.sigma params.tau params.chi0
//   solver.dt solver.t_end solver.galerkin_n solver.integrator
//   forcing.kind [forcing.K forcing.eta_decay forcing.mode]
//   init.kind output.dir output.stride
// The bracketed keys are required exactly when forcing.kind=decaying_mode.
// Unknown keys, duplicates, and invariant violations are rejected with line
// numbers. serialize_config emits the canonical form, which parse_config
// round-trips byte-identically.
struct ExperimentConfig {
  Grid grid{128, 128, 2.0 * std::numbers::pi};
  FerroParams params;
  double dt = 1e-3;
  double t_end = 1.0;
  double galerkin_n = 0.0;
  SolverConfig::Integrator integrator = SolverConfig::Integrator::etdrk2;
  ForcingSpec forcing;
  std::string forcing_file;  // set when forcing.kind=file:<path>
  InitSpec init;
  OutputSpec output;

  SolverConfig solver_config() const;
  // Resolves the forcing, loading the profile when it comes from a file.
  ForcingSpec resolved_forcing() const;
  // Builds the initial state on the configured grid.
  FerroState initial_state() const;
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);
std::string serialize_config(const ExperimentConfig& cfg);

}  // namespace ferro
