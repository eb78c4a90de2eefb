#pragma once

#include <array>
#include <vector>

#include "ferro/forcing.hpp"
#include "ferro/params.hpp"
#include "ferro/solver.hpp"

namespace ferro {

// Scalar measurements of one state. All energy-like quantities are squared
// norms:
//   e   = rho0||u||^2 + rho0 k||omega||^2 + mu0||H||^2 + ||M||^2
//   d   = ||grad u||^2 + ||grad omega||^2 + ||grad M||^2 + ||div M||^2
//         + ||M||^2 + ||H||^2
//   e_s, d_s = the H^s versions (no H or div M term there)
//   rhs_budget = ||F||^2_{L2} + ||F||^2_{H^-1} + ||dt F||^2_{H^-1}
struct EnergyReport {
  double t = 0.0;
  double e = 0.0;
  double d = 0.0;
  double e_s = 0.0;
  double d_s = 0.0;
  double rhs_budget = 0.0;
};

EnergyReport energy_report(const FerroState& state, const SpectralField& h,
                           const ForcingSpec& forcing, const FerroParams& params,
                           double s);

// Same, reusing the snapshot's stored H and (possibly truncated) forcing.
EnergyReport energy_report(const Snapshot& snap, const ForcingSpec& forcing,
                           const FerroParams& params, double s,
                           double galerkin_n);

struct EnergyAuditRow {
  double t = 0.0;
  double e = 0.0;
  double d = 0.0;
  double budget = 0.0;
};

// Audit of the L2 energy inequality E(t) + c int D <= C (E(0) + int budget),
// with c the rate constant from the parameters and C solved for as the
// smallest constant valid across the whole run.
struct EnergyAudit {
  std::vector<EnergyAuditRow> rows;
  double c_rate = 0.0;
  double c_min = 0.0;
  double e0 = 0.0;
  double e_final = 0.0;
  double int_d = 0.0;       // full-run trapezoid of D
  double int_budget = 0.0;  // full-run trapezoid of the forcing budget
  double worst_increase = 0.0;  // max of E_{k+1} - E_k over snapshots
};

EnergyAudit energy_inequality_audit(const Trajectory& traj,
                                    const FerroParams& params,
                                    const ForcingSpec& forcing);

struct TwinRow {
  double t = 0.0;
  double delta_e = 0.0;  // rho0||du||^2 + rho0 k||dw||^2 + ||dM||^2, H^{-1/2}
  double f = 0.0;        // Gronwall factor sample
  double envelope = 0.0; // delta_e(0) * exp(c_g * int f)
};

struct TwinReport {
  std::vector<TwinRow> rows;
  double eps = 0.0;
  std::array<int, 2> mode = {0, 0};
  double c_g = 0.0;  // smallest constant closing the Gronwall envelope
};

// Integrates the given state and a copy whose first magnetization component
// is perturbed by eps*cos(mode.x), in lockstep, and reports the H^{-1/2}
// difference energy against its Gronwall envelope.
TwinReport twin_experiment(const FerroState& init, const SolverConfig& cfg,
                           const ForcingSpec& forcing, double eps,
                           std::array<int, 2> perturb_mode = {5, 3});

struct DecayRow {
  double t = 0.0;
  double e = 0.0;
  double nu_sq = 0.0;    // alpha/(1+t), the shrinking-ball radius squared
  double v_accum = 0.0;  // alpha*log(1+t), its time integral
};

struct DecayReport {
  std::vector<DecayRow> rows;
  double alpha_target = 0.0;
  double fitted_alpha = 0.0;  // slope of -log E against log(1+t)
  double c_alpha = 0.0;       // max of E*(1+t)^alpha over the fit window
  double fit_lo = 0.0;
  double fit_hi = 0.0;
};

// Least squares slope fit of log(values) against log(1+t) over [lo, hi],
// returned with the sign flipped so decaying series give a positive number.
// Series with fewer than two positive points in the window yield +infinity
// (faster-than-algebraic, trivially inside any envelope).
double fit_decay_exponent(const std::vector<double>& times,
                          const std::vector<double>& values, double lo,
                          double hi);

// Long-horizon forced run; snapshots are consumed on the fly, nothing is
// retained but the scalar rows.
DecayReport decay_experiment(const FerroState& init, const SolverConfig& cfg,
                             const ForcingSpec& forcing, double alpha,
                             double fit_lo, double fit_hi);

// Mode-by-mode audit of the pointwise spectral estimate
//   |u|^2+|omega|^2+|M|^2+|H|^2 <= initial terms + C + int |xi|^{-2}|F|^2,
// with C fitted at the first post-initial snapshot, plus the per-snapshot
// strict and Young-doubled demagnetizing-field bounds (relative slacks).
struct PointwiseAudit {
  double c_fit = 0.0;
  double worst_slack = 0.0;
  double worst_hxi_slack = 0.0;
  double worst_hxi_slack_young = 0.0;
  double hxi_scale = 0.0;
};

PointwiseAudit pointwise_fourier_audit(const Trajectory& traj);

struct RegularityRow {
  double t = 0.0;
  double e_s = 0.0;
  double d_s = 0.0;
  double budget_s = 0.0;  // ||F||^2_{Hs} + ||F||^2_{Hs-1} + ||dtF||^2_{Hs-1}
};

// Audit of (1/2)E_s(t) + int D_s <= C ((1/2)E_s(0) + int budget_s), with the
// smallest valid C reported, plus the norm-level ratio
// sqrt(E_s block-sum route / E_s direct route) at the final snapshot.
struct RegularityReport {
  double s = 0.0;
  std::vector<RegularityRow> rows;
  double sup_e_s = 0.0;
  double int_d_s = 0.0;
  double c_min = 0.0;
  double lp_direct_ratio = 0.0;
};

RegularityReport regularity_audit(const Trajectory& traj,
                                  const FerroParams& params,
                                  const ForcingSpec& forcing, double s);

// Same audit without retaining fields: runs the solver and folds snapshots
// into rows as they appear. The final-state block-sum ratio needs the final
// state, which is kept (one state only).
RegularityReport run_regularity_audit(const FerroState& init,
                                      const SolverConfig& cfg,
                                      const ForcingSpec& forcing, double s);

// Fractional time-regularity seminorm of the zero-extended trajectory:
//   ( int |tau|^{2 gamma} ||V~(tau)||^2_{H^{-N}} dtau )^{1/2}
// over V = (u, omega, M), computed by a padded discrete Fourier transform in
// time per spatial mode. Requires uniform snapshot spacing.
double fractional_time_norm(const Trajectory& traj, double gamma,
                            double n_weight, int pad_factor = 8);

}  // namespace ferro
