#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ferro/forcing.hpp"
#include "ferro/magnetostatics.hpp"
#include "ferro/params.hpp"
#include "ferro/state.hpp"

namespace ferro {

struct SolverConfig {
  enum class Integrator { etdrk2, imex_cn };

  Grid grid;
  FerroParams params;
  double dt = 1e-3;
  double t_end = 1.0;
  double galerkin_n = 0.0;  // J_n radius; <= 0 disables the sharp cutoff
  int snapshot_stride = 1;
  Integrator integrator = Integrator::etdrk2;

  void validate() const;
};

// Demagnetizing field of a state under the configured forcing; the forcing is
// passed through the sharp cutoff when one is active so H stays inside the
// Galerkin ball.
MagnetoSolution solve_state_h(const FerroState& state,
                              const ForcingSpec& forcing, double galerkin_n);

struct Tendencies {
  SpectralField du;
  SpectralField domega;
  SpectralField dm;
};

// Full right-hand side at state.t, dissipative terms included. Used by the
// strong-form residual check; the integrators split it internally.
Tendencies compute_rhs(const FerroState& state, const SolverConfig& cfg,
                       const ForcingSpec& forcing);

// Advance one step of cfg.dt. Throws BlowUpError on NaN/Inf or when dt
// exceeds the advective step bound 0.5*min(dx/max|u|, dx/max|omega||M|).
FerroState step(const FerroState& state, const SolverConfig& cfg,
                const ForcingSpec& forcing);

// One stored snapshot: state plus the derived field, the forcing at that
// time, and the scalar diagnostics filled in by the caller of run().
struct Snapshot {
  FerroState state;
  SpectralField h;    // two components
  SpectralField g_f;  // two components
  SpectralField f;    // scalar forcing at state.t
};

struct Trajectory {
  std::vector<Snapshot> snapshots;
  double dt = 0.0;
  int snapshot_stride = 1;
  double galerkin_n = 0.0;
};

struct RunFailure {
  std::string reason;
  double time = 0.0;
  std::size_t step_index = 0;
};

struct RunResult {
  Trajectory trajectory;
  std::optional<RunFailure> failure;
  bool ok() const { return !failure.has_value(); }
};

// Called on every retained snapshot, in order, before it is (optionally)
// stored; lets long runs accumulate diagnostics without keeping fields.
using SnapshotObserver = std::function<void(const Snapshot&)>;

struct RunOptions {
  bool keep_snapshots = true;
  SnapshotObserver observer;
};

// Integrate from `init` (after ingestion: mean removal, Leray projection,
// dealiasing, optional sharp cutoff) to t_end. Snapshots are retained every
// snapshot_stride steps plus the initial and final states. A blow-up stops
// the run; everything collected so far is returned with the failure attached.
RunResult run(const FerroState& init, const SolverConfig& cfg,
              const ForcingSpec& forcing, const RunOptions& options = {});

// Mean removal, Leray projection of u, dealiasing, optional sharp cutoff.
FerroState prepare_initial_state(FerroState s, const SolverConfig& cfg);

// Max over interior snapshots of the L2 norm of (centered time difference -
// compute_rhs). Requires stride-1 snapshots and at least three of them.
double strong_residual(const Trajectory& traj, const SolverConfig& cfg,
                       const ForcingSpec& forcing);

}  // namespace ferro
