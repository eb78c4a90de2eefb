#include "ferro/diagnostics.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <mutex>

#include "ferro/errors.hpp"
#include "ferro/norms.hpp"
#include "ferro/operators.hpp"

namespace ferro {

namespace {

double sq(double x) { return x * x; }

SpectralField truncated(SpectralField f, double radius) {
  if (radius > 0.0) return jn_truncate(std::move(f), radius);
  return f;
}

double budget_l2(const SpectralField& f, const SpectralField& dtf) {
  return sq(l2_norm(f)) + sq(sobolev_norm_direct(f, -1.0)) +
         sq(sobolev_norm_direct(dtf, -1.0));
}

EnergyReport report_from(const FerroState& state, const SpectralField& h,
                         const SpectralField& f, const SpectralField& dtf,
                         const FerroParams& p, double s) {
  EnergyReport r;
  r.t = state.t;
  r.e = p.rho0 * sq(l2_norm(state.u)) + p.rho0 * p.k * sq(l2_norm(state.omega)) +
        p.mu0 * sq(l2_norm(h)) + sq(l2_norm(state.m));
  r.d = sq(grad_l2_norm(state.u)) + sq(grad_l2_norm(state.omega)) +
        sq(grad_l2_norm(state.m)) + sq(l2_norm(divergence(state.m))) +
        sq(l2_norm(state.m)) + sq(l2_norm(h));
  r.e_s = p.rho0 * sq(sobolev_norm_direct(state.u, s)) +
          p.rho0 * p.k * sq(sobolev_norm_direct(state.omega, s)) +
          sq(sobolev_norm_direct(state.m, s));
  r.d_s = sq(sobolev_norm_direct(state.u, s + 1.0)) +
          sq(sobolev_norm_direct(state.omega, s + 1.0)) +
          sq(sobolev_norm_direct(state.m, s + 1.0));
  r.rhs_budget = budget_l2(f, dtf);
  return r;
}

void add_cosine(SpectralField& f, int c, std::array<int, 2> mode, double amp) {
  const Grid& g = f.grid();
  const int half1 = g.n1 / 2, half2 = g.n2 / 2;
  if (std::abs(mode[0]) > half1 - 1 || std::abs(mode[1]) > half2 - 1)
    throw Error("perturbation mode not resolvable on this grid");
  const int ip1 = mode[0] >= 0 ? mode[0] : mode[0] + g.n1;
  const int ip2 = mode[1] >= 0 ? mode[1] : mode[1] + g.n2;
  const int im1 = -mode[0] >= 0 ? -mode[0] : -mode[0] + g.n1;
  const int im2 = -mode[1] >= 0 ? -mode[1] : -mode[1] + g.n2;
  f.at(c, ip1, ip2) += amp / 2.0;
  f.at(c, im1, im2) += amp / 2.0;
}

// Shared tail of the two regularity audit entry points.
RegularityReport finalize_regularity(std::vector<RegularityRow> rows,
                                     const Snapshot& last, double s) {
  RegularityReport rep;
  rep.s = s;
  if (rows.empty()) throw Error("regularity_audit: empty trajectory");

  double int_d = 0.0, int_budget = 0.0;
  const double half_e0 = 0.5 * rows.front().e_s;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (k > 0) {
      const double dt = rows[k].t - rows[k - 1].t;
      int_d += 0.5 * dt * (rows[k - 1].d_s + rows[k].d_s);
      int_budget += 0.5 * dt * (rows[k - 1].budget_s + rows[k].budget_s);
    }
    rep.sup_e_s = std::max(rep.sup_e_s, rows[k].e_s);
    const double lhs = 0.5 * rows[k].e_s + int_d;
    const double denom = half_e0 + int_budget;
    if (denom > 0.0) rep.c_min = std::max(rep.c_min, lhs / denom);
  }
  rep.int_d_s = int_d;

  // Norm-level comparison of the two E_s routes on the final state.
  const DyadicPartition part = DyadicPartition::make(last.state.u.grid());
  const auto& st = last.state;
  const double direct = sq(sobolev_norm_direct(st.u, s)) +
                        sq(sobolev_norm_direct(st.omega, s)) +
                        sq(sobolev_norm_direct(st.m, s));
  const double lp = sq(sobolev_norm_lp(st.u, s, part)) +
                    sq(sobolev_norm_lp(st.omega, s, part)) +
                    sq(sobolev_norm_lp(st.m, s, part));
  rep.lp_direct_ratio = direct > 0.0 ? std::sqrt(lp / direct) : 1.0;
  rep.rows = std::move(rows);
  return rep;
}

RegularityRow regularity_row(const Snapshot& snap, const ForcingSpec& forcing,
                             const FerroParams& p, double s,
                             double galerkin_n) {
  const Grid& g = snap.state.u.grid();
  RegularityRow row;
  row.t = snap.state.t;
  row.e_s = p.rho0 * sq(sobolev_norm_direct(snap.state.u, s)) +
            p.rho0 * p.k * sq(sobolev_norm_direct(snap.state.omega, s)) +
            sq(sobolev_norm_direct(snap.state.m, s));
  row.d_s = sq(sobolev_norm_direct(snap.state.u, s + 1.0)) +
            sq(sobolev_norm_direct(snap.state.omega, s + 1.0)) +
            sq(sobolev_norm_direct(snap.state.m, s + 1.0));
  const SpectralField dtf =
      truncated(forcing.evaluate_dt(g, snap.state.t), galerkin_n);
  row.budget_s = sq(sobolev_norm_direct(snap.f, s)) +
                 sq(sobolev_norm_direct(snap.f, s - 1.0)) +
                 sq(sobolev_norm_direct(dtf, s - 1.0));
  return row;
}

}  // namespace

EnergyReport energy_report(const FerroState& state, const SpectralField& h,
                           const ForcingSpec& forcing, const FerroParams& params,
                           double s) {
  const Grid& g = state.u.grid();
  return report_from(state, h, forcing.evaluate(g, state.t),
                     forcing.evaluate_dt(g, state.t), params, s);
}

EnergyReport energy_report(const Snapshot& snap, const ForcingSpec& forcing,
                           const FerroParams& params, double s,
                           double galerkin_n) {
  const Grid& g = snap.state.u.grid();
  return report_from(snap.state, snap.h, snap.f,
                     truncated(forcing.evaluate_dt(g, snap.state.t), galerkin_n),
                     params, s);
}

EnergyAudit energy_inequality_audit(const Trajectory& traj,
                                    const FerroParams& params,
                                    const ForcingSpec& forcing) {
  if (traj.snapshots.empty())
    throw Error("energy_inequality_audit: empty trajectory");
  EnergyAudit audit;
  audit.c_rate = params.energy_rate_constant();
  audit.worst_increase = -std::numeric_limits<double>::infinity();

  double int_d = 0.0, int_budget = 0.0;
  for (std::size_t k = 0; k < traj.snapshots.size(); ++k) {
    const Snapshot& snap = traj.snapshots[k];
    if (snap.f.components() != 1)
      throw Error("energy_inequality_audit: snapshots carry no forcing record");
    const Grid& g = snap.state.u.grid();
    EnergyAuditRow row;
    row.t = snap.state.t;
    const FerroState& st = snap.state;
    row.e = params.rho0 * sq(l2_norm(st.u)) +
            params.rho0 * params.k * sq(l2_norm(st.omega)) +
            params.mu0 * sq(l2_norm(snap.h)) + sq(l2_norm(st.m));
    row.d = sq(grad_l2_norm(st.u)) + sq(grad_l2_norm(st.omega)) +
            sq(grad_l2_norm(st.m)) + sq(l2_norm(divergence(st.m))) +
            sq(l2_norm(st.m)) + sq(l2_norm(snap.h));
    row.budget = budget_l2(
        snap.f, truncated(forcing.evaluate_dt(g, st.t), traj.galerkin_n));

    if (k == 0) {
      audit.e0 = row.e;
    } else {
      const double dt = row.t - audit.rows.back().t;
      int_d += 0.5 * dt * (audit.rows.back().d + row.d);
      int_budget += 0.5 * dt * (audit.rows.back().budget + row.budget);
      audit.worst_increase =
          std::max(audit.worst_increase, row.e - audit.rows.back().e);
    }
    const double lhs = row.e + audit.c_rate * int_d;
    const double denom = audit.e0 + int_budget;
    if (denom > 0.0) audit.c_min = std::max(audit.c_min, lhs / denom);
    audit.e_final = row.e;
    audit.rows.push_back(row);
  }
  audit.int_d = int_d;
  audit.int_budget = int_budget;
  if (traj.snapshots.size() < 2) audit.worst_increase = 0.0;
  return audit;
}

TwinReport twin_experiment(const FerroState& init, const SolverConfig& cfg,
                           const ForcingSpec& forcing, double eps,
                           std::array<int, 2> perturb_mode) {
  if (eps < 0.0) throw Error("twin_experiment: eps must be nonnegative");
  const FerroState base = prepare_initial_state(init, cfg);
  FerroState pert = base;
  add_cosine(pert.m, 0, perturb_mode, eps);
  {
    // The perturbation must survive ingestion unchanged.
    const Grid& g = cfg.grid;
    const double b1 = g.dealias_fraction * g.n1 / 2.0;
    const double b2 = g.dealias_fraction * g.n2 / 2.0;
    if (std::abs(perturb_mode[0]) > b1 || std::abs(perturb_mode[1]) > b2)
      throw Error("twin_experiment: perturbation mode outside dealiased band");
    if (cfg.galerkin_n > 0.0) {
      const double xi = g.xi_min() * std::hypot(double(perturb_mode[0]),
                                                double(perturb_mode[1]));
      if (xi > cfg.galerkin_n)
        throw Error("twin_experiment: perturbation mode outside Galerkin ball");
    }
  }

  const RunResult ra = run(base, cfg, forcing);
  const RunResult rb = run(pert, cfg, forcing);
  if (!ra.ok())
    throw Error("twin_experiment: reference run failed: " + ra.failure->reason);
  if (!rb.ok())
    throw Error("twin_experiment: perturbed run failed: " + rb.failure->reason);
  if (ra.trajectory.snapshots.size() != rb.trajectory.snapshots.size())
    throw Error("twin_experiment: trajectories differ in length");

  TwinReport rep;
  rep.eps = eps;
  rep.mode = perturb_mode;
  const FerroParams& p = cfg.params;
  double int_f = 0.0, prev_f = 0.0, prev_t = 0.0;
  std::vector<double> int_f_at;
  for (std::size_t k = 0; k < ra.trajectory.snapshots.size(); ++k) {
    const Snapshot& a = ra.trajectory.snapshots[k];
    const Snapshot& b = rb.trajectory.snapshots[k];
    TwinRow row;
    row.t = a.state.t;
    row.delta_e = p.rho0 * sq(sobolev_norm_direct(a.state.u - b.state.u, -0.5)) +
                  p.rho0 * p.k *
                      sq(sobolev_norm_direct(a.state.omega - b.state.omega,
                                             -0.5)) +
                  sq(sobolev_norm_direct(a.state.m - b.state.m, -0.5));
    const double l2_terms =
        sq(l2_norm(a.state.m)) + sq(l2_norm(b.state.m)) + sq(l2_norm(a.h)) +
        sq(l2_norm(b.h)) + sq(l2_norm(a.state.omega)) +
        sq(l2_norm(b.state.omega)) + sq(l2_norm(a.state.m - b.state.m));
    const double grad_terms =
        sq(grad_l2_norm(a.state.u)) + sq(grad_l2_norm(b.state.u)) +
        sq(grad_l2_norm(a.state.omega)) + sq(grad_l2_norm(b.state.omega)) +
        sq(grad_l2_norm(a.state.m)) + sq(grad_l2_norm(b.state.m)) +
        sq(grad_l2_norm(a.h)) + sq(grad_l2_norm(b.h)) +
        sq(grad_l2_norm(a.state.m - b.state.m));
    row.f = (1.0 + l2_terms + std::pow(l2_norm(a.state.m), 2.0 / 3.0)) *
            (1.0 + grad_terms);
    if (k > 0) int_f += 0.5 * (row.t - prev_t) * (prev_f + row.f);
    prev_f = row.f;
    prev_t = row.t;
    int_f_at.push_back(int_f);
    rep.rows.push_back(row);
  }

  const double de0 = rep.rows.front().delta_e;
  if (de0 > 0.0) {
    for (std::size_t k = 1; k < rep.rows.size(); ++k) {
      if (rep.rows[k].delta_e > 0.0 && int_f_at[k] > 0.0)
        rep.c_g = std::max(rep.c_g,
                           std::log(rep.rows[k].delta_e / de0) / int_f_at[k]);
    }
  }
  for (std::size_t k = 0; k < rep.rows.size(); ++k)
    rep.rows[k].envelope = de0 * std::exp(rep.c_g * int_f_at[k]);
  return rep;
}

double fit_decay_exponent(const std::vector<double>& times,
                          const std::vector<double>& values, double lo,
                          double hi) {
  if (times.size() != values.size())
    throw Error("fit_decay_exponent: series length mismatch");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < lo || times[i] > hi || !(values[i] > 0.0)) continue;
    const double x = std::log1p(times[i]);
    const double y = std::log(values[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) return std::numeric_limits<double>::infinity();
  const double denom = sxx - sx * sx / double(n);
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  return -(sxy - sx * sy / double(n)) / denom;
}

DecayReport decay_experiment(const FerroState& init, const SolverConfig& cfg,
                             const ForcingSpec& forcing, double alpha,
                             double fit_lo, double fit_hi) {
  if (!(alpha > 0.0)) throw Error("decay_experiment: alpha must be positive");
  if (forcing.kind == ForcingSpec::Kind::decaying_mode &&
      !(alpha < forcing.eta_decay))
    throw Error("decay_experiment: alpha must be below the forcing exponent");
  if (!(fit_lo < fit_hi))
    throw Error("decay_experiment: empty fit window");
  if (cfg.t_end + 1e-9 < fit_hi)
    throw Error("decay_experiment: horizon shorter than the fit window");

  DecayReport rep;
  rep.alpha_target = alpha;
  rep.fit_lo = fit_lo;
  rep.fit_hi = fit_hi;
  const FerroParams& p = cfg.params;
  RunOptions opts;
  opts.keep_snapshots = false;
  opts.observer = [&](const Snapshot& snap) {
    DecayRow row;
    row.t = snap.state.t;
    row.e = p.rho0 * sq(l2_norm(snap.state.u)) +
            p.rho0 * p.k * sq(l2_norm(snap.state.omega)) +
            p.mu0 * sq(l2_norm(snap.h)) + sq(l2_norm(snap.state.m));
    row.nu_sq = alpha / (1.0 + row.t);
    row.v_accum = alpha * std::log1p(row.t);
    rep.rows.push_back(row);
  };
  const RunResult r = run(init, cfg, forcing, opts);
  if (!r.ok())
    throw Error("decay_experiment: run failed: " + r.failure->reason);

  std::vector<double> ts, es;
  for (const DecayRow& row : rep.rows) {
    ts.push_back(row.t);
    es.push_back(row.e);
  }
  rep.fitted_alpha = fit_decay_exponent(ts, es, fit_lo, fit_hi);
  for (const DecayRow& row : rep.rows)
    if (row.t >= fit_lo && row.t <= fit_hi)
      rep.c_alpha = std::max(rep.c_alpha, row.e * std::pow(1.0 + row.t, alpha));
  return rep;
}

PointwiseAudit pointwise_fourier_audit(const Trajectory& traj) {
  if (traj.snapshots.size() < 2)
    throw Error("pointwise_fourier_audit: need at least two snapshots");
  const Grid g = traj.snapshots.front().state.u.grid();
  const std::size_t n = g.size();

  auto mode_lhs = [&](const Snapshot& snap, std::vector<double>& out,
                      bool with_h) {
    out.assign(n, 0.0);
    auto accum = [&](const SpectralField& f) {
      for (int c = 0; c < f.components(); ++c) {
        const std::complex<double>* p = f.component(c);
        for (std::size_t i = 0; i < n; ++i) out[i] += std::norm(p[i]);
      }
    };
    accum(snap.state.u);
    accum(snap.state.omega);
    accum(snap.state.m);
    if (with_h) accum(snap.h);
  };

  auto forcing_weight = [&](const Snapshot& snap, std::vector<double>& out) {
    out.assign(n, 0.0);
    const std::complex<double>* p = snap.f.component(0);
    for (int i1 = 0; i1 < g.n1; ++i1) {
      for (int i2 = 0; i2 < g.n2; ++i2) {
        const double k2 = g.xi_norm2(i1, i2);
        const std::size_t idx = g.index(i1, i2);
        if (k2 > 0.0) out[idx] = std::norm(p[idx]) / k2;
      }
    }
  };

  PointwiseAudit audit;
  audit.worst_slack = std::numeric_limits<double>::infinity();
  audit.worst_hxi_slack = std::numeric_limits<double>::infinity();
  audit.worst_hxi_slack_young = std::numeric_limits<double>::infinity();

  std::vector<double> base, lhs, w_prev, w_cur, acc(n, 0.0);
  mode_lhs(traj.snapshots.front(), base, false);
  forcing_weight(traj.snapshots.front(), w_prev);
  double t_prev = traj.snapshots.front().state.t;

  for (std::size_t k = 0; k < traj.snapshots.size(); ++k) {
    const Snapshot& snap = traj.snapshots[k];
    if (k > 0) {
      forcing_weight(snap, w_cur);
      const double dt = snap.state.t - t_prev;
      for (std::size_t i = 0; i < n; ++i)
        acc[i] += 0.5 * dt * (w_prev[i] + w_cur[i]);
      std::swap(w_prev, w_cur);
      t_prev = snap.state.t;

      mode_lhs(snap, lhs, true);
      if (k == 1) {
        double c = 0.0;
        for (std::size_t i = 0; i < n; ++i)
          c = std::max(c, lhs[i] - base[i] - acc[i]);
        audit.c_fit = c;
      } else {
        for (std::size_t i = 0; i < n; ++i)
          audit.worst_slack = std::min(
              audit.worst_slack, base[i] + audit.c_fit + acc[i] - lhs[i]);
      }
    }

    const MagnetoSolution sol{snap.h, snap.g_f};
    const PointwiseBoundReport pb =
        pointwise_bound_check(sol, snap.state.m, snap.f);
    if (pb.scale > 0.0) {
      audit.worst_hxi_slack =
          std::min(audit.worst_hxi_slack, pb.min_slack / pb.scale);
      audit.worst_hxi_slack_young =
          std::min(audit.worst_hxi_slack_young, pb.min_slack_young / pb.scale);
      audit.hxi_scale = std::max(audit.hxi_scale, pb.scale);
    }
  }
  if (traj.snapshots.size() == 2) audit.worst_slack = 0.0;
  if (!std::isfinite(audit.worst_hxi_slack)) {
    audit.worst_hxi_slack = 0.0;
    audit.worst_hxi_slack_young = 0.0;
  }
  return audit;
}

RegularityReport regularity_audit(const Trajectory& traj,
                                  const FerroParams& params,
                                  const ForcingSpec& forcing, double s) {
  if (!(s > 0.0)) throw Error("regularity_audit: s must be positive");
  if (traj.snapshots.empty())
    throw Error("regularity_audit: empty trajectory");
  std::vector<RegularityRow> rows;
  rows.reserve(traj.snapshots.size());
  for (const Snapshot& snap : traj.snapshots)
    rows.push_back(regularity_row(snap, forcing, params, s, traj.galerkin_n));
  return finalize_regularity(std::move(rows), traj.snapshots.back(), s);
}

RegularityReport run_regularity_audit(const FerroState& init,
                                      const SolverConfig& cfg,
                                      const ForcingSpec& forcing, double s) {
  if (!(s > 0.0)) throw Error("regularity_audit: s must be positive");
  std::vector<RegularityRow> rows;
  Snapshot last;
  RunOptions opts;
  opts.keep_snapshots = false;
  opts.observer = [&](const Snapshot& snap) {
    rows.push_back(regularity_row(snap, forcing, cfg.params, s,
                                  cfg.galerkin_n));
    last = snap;
  };
  const RunResult r = run(init, cfg, forcing, opts);
  if (!r.ok())
    throw Error("regularity_audit: run failed: " + r.failure->reason);
  return finalize_regularity(std::move(rows), last, s);
}

double fractional_time_norm(const Trajectory& traj, double gamma,
                            double n_weight, int pad_factor) {
  if (!(gamma > 0.0 && gamma < 0.5))
    throw Error("fractional_time_norm: gamma must lie in (0, 1/2)");
  if (n_weight < 0.0)
    throw Error("fractional_time_norm: weight order must be nonnegative");
  if (pad_factor < 1)
    throw Error("fractional_time_norm: pad factor must be >= 1");
  const std::size_t s_count = traj.snapshots.size();
  if (s_count < 2)
    throw Error("fractional_time_norm: need at least two snapshots");

  const double dt = traj.snapshots[1].state.t - traj.snapshots[0].state.t;
  for (std::size_t k = 1; k < s_count; ++k) {
    const double d =
        traj.snapshots[k].state.t - traj.snapshots[k - 1].state.t;
    if (std::abs(d - dt) > 1e-9 * std::max(dt, 1.0))
      throw Error("fractional_time_norm: nonuniform snapshot spacing");
  }

  std::size_t p_len = 1;
  while (p_len < s_count * std::size_t(pad_factor)) p_len *= 2;

  const Grid g = traj.snapshots.front().state.u.grid();
  std::vector<std::complex<double>> buf(p_len), out(p_len);
  static std::mutex plan_mutex;
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    plan = fftw_plan_dft_1d(int(p_len),
                            reinterpret_cast<fftw_complex*>(buf.data()),
                            reinterpret_cast<fftw_complex*>(out.data()),
                            FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  }

  std::vector<double> spectrum(p_len, 0.0);
  auto add_component = [&](auto field_of, int components) {
    for (int c = 0; c < components; ++c) {
      for (int i1 = 0; i1 < g.n1; ++i1) {
        for (int i2 = 0; i2 < g.n2; ++i2) {
          const std::size_t idx = g.index(i1, i2);
          bool any = false;
          for (std::size_t k = 0; k < s_count; ++k) {
            const std::complex<double> v = field_of(k).component(c)[idx];
            buf[k] = v;
            any = any || v != std::complex<double>{0.0, 0.0};
          }
          if (!any) continue;
          std::fill(buf.begin() + s_count, buf.end(),
                    std::complex<double>{0.0, 0.0});
          fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(buf.data()),
                           reinterpret_cast<fftw_complex*>(out.data()));
          const double w = std::pow(1.0 + g.xi_norm2(i1, i2), -n_weight);
          for (std::size_t m = 0; m < p_len; ++m)
            spectrum[m] += w * std::norm(out[m]);
        }
      }
    }
  };
  add_component(
      [&](std::size_t k) -> const SpectralField& {
        return traj.snapshots[k].state.u;
      },
      2);
  add_component(
      [&](std::size_t k) -> const SpectralField& {
        return traj.snapshots[k].state.omega;
      },
      1);
  add_component(
      [&](std::size_t k) -> const SpectralField& {
        return traj.snapshots[k].state.m;
      },
      2);
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    fftw_destroy_plan(plan);
  }

  // Continuous transform approximated by dt * DFT; bin width 1/(P dt).
  const double dtau = 1.0 / (double(p_len) * dt);
  double total = 0.0;
  for (std::size_t m = 0; m < p_len; ++m) {
    const double fm = m <= p_len / 2 ? double(m) : double(m) - double(p_len);
    const double tau = fm * dtau;
    total += std::pow(std::abs(tau), 2.0 * gamma) * spectrum[m];
  }
  return std::sqrt(total * dt * dt * dtau * g.length * g.length);
}

}  // namespace ferro
