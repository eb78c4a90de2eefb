#include "ferro/solver.hpp"

#include <cmath>

#include "ferro/errors.hpp"
#include "ferro/norms.hpp"
#include "ferro/operators.hpp"
#include "ferro/transforms.hpp"

namespace ferro {

namespace {

void zero_mean(SpectralField& f) {
  for (int c = 0; c < f.components(); ++c) f.at(c, 0, 0) = 0.0;
}

// phi1(z) = (e^z - 1)/z, phi2(z) = (e^z - 1 - z)/z^2, with series branches
// to dodge the subtractive cancellation near z = 0.
double phi1(double z) {
  if (std::abs(z) < 1e-3)
    return 1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0;
  return std::expm1(z) / z;
}

double phi2(double z) {
  if (std::abs(z) < 1e-3)
    return 0.5 + z / 6.0 + z * z / 24.0 + z * z * z / 120.0;
  return (std::expm1(z) - z) / (z * z);
}

// Per-mode factors of the stiff diagonal for one field family. Meaning
// depends on the integrator:
//   etdrk2:  em = e^{-lam h},            f1 = h phi1(-lam h), f2 = h phi2(-lam h)
//   imex_cn: em = (1-h lam/2)/(1+h lam/2), f1 = h/(1+h lam/2), f2 = f1/2
struct DiagFactors {
  std::vector<double> em, f1, f2;
};

struct StepperCache {
  DiagFactors u, omega, m;
};

StepperCache make_cache(const SolverConfig& cfg) {
  const Grid& g = cfg.grid;
  const FerroParams& p = cfg.params;
  const double h = cfg.dt;
  const bool etd = cfg.integrator == SolverConfig::Integrator::etdrk2;

  auto fill = [&](DiagFactors& d, auto lambda) {
    d.em.resize(g.size());
    d.f1.resize(g.size());
    d.f2.resize(g.size());
    for (int i1 = 0; i1 < g.n1; ++i1) {
      for (int i2 = 0; i2 < g.n2; ++i2) {
        const std::size_t idx = g.index(i1, i2);
        const double lam = lambda(g.xi_norm2(i1, i2));
        if (etd) {
          const double z = -lam * h;
          d.em[idx] = std::exp(z);
          d.f1[idx] = h * phi1(z);
          d.f2[idx] = h * phi2(z);
        } else {
          const double denom = 1.0 + 0.5 * h * lam;
          d.em[idx] = (1.0 - 0.5 * h * lam) / denom;
          d.f1[idx] = h / denom;
          d.f2[idx] = 0.5 * h / denom;
        }
      }
    }
  };
  StepperCache c;
  fill(c.u, [&](double k2) { return (p.eta + p.zeta) / p.rho0 * k2; });
  fill(c.omega, [&](double k2) {
    return p.eta_prime / (p.rho0 * p.k) * k2 + 4.0 * p.zeta / (p.rho0 * p.k);
  });
  fill(c.m, [&](double k2) { return p.sigma * k2 + 1.0 / p.tau; });
  return c;
}

// out = em*base + w*extra, componentwise over modes.
SpectralField diag_combine(const DiagFactors& d, const SpectralField& base,
                           const std::vector<double>& w,
                           const SpectralField& extra) {
  SpectralField out(base.grid(), base.components());
  const std::size_t n = base.grid().size();
  for (int c = 0; c < base.components(); ++c) {
    const std::complex<double>* pb = base.component(c);
    const std::complex<double>* pe = extra.component(c);
    std::complex<double>* po = out.component(c);
    for (std::size_t i = 0; i < n; ++i) po[i] = d.em[i] * pb[i] + w[i] * pe[i];
  }
  return out;
}

void axpy_weighted(SpectralField& acc, const std::vector<double>& w,
                   const SpectralField& x) {
  const std::size_t n = acc.grid().size();
  for (int c = 0; c < acc.components(); ++c) {
    const std::complex<double>* px = x.component(c);
    std::complex<double>* pa = acc.component(c);
    for (std::size_t i = 0; i < n; ++i) pa[i] += w[i] * px[i];
  }
}

SpectralField maybe_truncate(SpectralField f, double radius) {
  if (radius > 0.0) return jn_truncate(std::move(f), radius);
  return f;
}

struct NonlinearPart {
  SpectralField nu, nomega, nm;
};

// Explicit terms: everything except the stiff diagonal handled by the
// integrating factor. Products pass through the sharp cutoff when active.
NonlinearPart nonlinear_part(const SpectralField& u, const SpectralField& omega,
                             const SpectralField& m, double t,
                             const SolverConfig& cfg,
                             const ForcingSpec& forcing) {
  const FerroParams& p = cfg.params;
  const double r = cfg.galerkin_n;
  const MagnetoSolution mag =
      solve_h(m, maybe_truncate(forcing.evaluate(cfg.grid, t), r));

  NonlinearPart out;
  out.nu = maybe_truncate(advect(u, u), r);
  out.nu *= -1.0;
  out.nu += (p.mu0 / p.rho0) * maybe_truncate(advect(m, mag.h), r);
  out.nu += (2.0 * p.zeta / p.rho0) * perp_grad(omega);
  out.nu = leray_project(out.nu);

  out.nomega = maybe_truncate(advect(u, omega), r);
  out.nomega *= -1.0;
  out.nomega += (p.mu0 / (p.rho0 * p.k)) * maybe_truncate(cross2d(m, mag.h), r);
  out.nomega += (2.0 * p.zeta / (p.rho0 * p.k)) * curl2d(u);

  // Rotation coupling omega*(M2, -M1) read off the magnetization equation.
  SpectralField m_perp(m.grid(), 2);
  for (int i1 = 0; i1 < m.grid().n1; ++i1) {
    for (int i2 = 0; i2 < m.grid().n2; ++i2) {
      m_perp.at(0, i1, i2) = m.at(1, i1, i2);
      m_perp.at(1, i1, i2) = -m.at(0, i1, i2);
    }
  }
  out.nm = maybe_truncate(advect(u, m), r);
  out.nm *= -1.0;
  out.nm += maybe_truncate(product_dealias(omega, m_perp), r);
  out.nm += (p.chi0 / p.tau) * mag.h;

  zero_mean(out.nu);
  zero_mean(out.nomega);
  zero_mean(out.nm);
  return out;
}

// Scans raw coefficients: a max-based reduction would let NaN slip through
// because std::max discards unordered comparisons.
bool all_finite(const SpectralField& f) {
  for (const auto& v : f.raw())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

void check_finite(const FerroState& s, std::size_t step_index) {
  if (!all_finite(s.u) || !all_finite(s.omega) || !all_finite(s.m))
    throw BlowUpError("non-finite field values detected", s.t, step_index);
}

// Advective step bound 0.5*min(dx/max|u|, dx/max(|omega| |M|)); violation is
// reported, never silently adapted, so runs stay reproducible.
void check_cfl(const FerroState& s, const SolverConfig& cfg,
               std::size_t step_index) {
  const Grid& g = cfg.grid;
  double max_u = 0.0, max_coupling = 0.0;
  if (!s.u.is_zero()) {
    const PhysicalField pu = inverse_transform(s.u);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double a = pu.component(0)[i], b = pu.component(1)[i];
      max_u = std::max(max_u, std::sqrt(a * a + b * b));
    }
  }
  if (!s.omega.is_zero() && !s.m.is_zero()) {
    const PhysicalField po = inverse_transform(s.omega);
    const PhysicalField pm = inverse_transform(s.m);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double a = pm.component(0)[i], b = pm.component(1)[i];
      max_coupling = std::max(
          max_coupling, std::abs(po.component(0)[i]) * std::sqrt(a * a + b * b));
    }
  }
  double bound = 1e300;
  if (max_u > 0.0) bound = std::min(bound, 0.5 * g.dx_min() / max_u);
  if (max_coupling > 0.0)
    bound = std::min(bound, 0.5 * g.dx_min() / max_coupling);
  if (cfg.dt > bound)
    throw BlowUpError(
        "time step exceeds the advective bound; rerun with dt <= " +
            std::to_string(bound),
        s.t, step_index);
}

FerroState step_cached(const FerroState& state, const SolverConfig& cfg,
                       const ForcingSpec& forcing, const StepperCache& cache,
                       std::size_t step_index) {
  check_finite(state, step_index);
  check_cfl(state, cfg, step_index);

  const double h = cfg.dt;
  const NonlinearPart n0 =
      nonlinear_part(state.u, state.omega, state.m, state.t, cfg, forcing);

  FerroState out;
  out.t = state.t + h;
  if (cfg.integrator == SolverConfig::Integrator::etdrk2) {
    // Stage: a = e^{-lam h} x + h phi1 N0; corrector adds h phi2 (N(a) - N0).
    SpectralField au = diag_combine(cache.u, state.u, cache.u.f1, n0.nu);
    SpectralField aw =
        diag_combine(cache.omega, state.omega, cache.omega.f1, n0.nomega);
    SpectralField am = diag_combine(cache.m, state.m, cache.m.f1, n0.nm);
    const NonlinearPart n1 = nonlinear_part(au, aw, am, out.t, cfg, forcing);
    axpy_weighted(au, cache.u.f2, n1.nu - n0.nu);
    axpy_weighted(aw, cache.omega.f2, n1.nomega - n0.nomega);
    axpy_weighted(am, cache.m.f2, n1.nm - n0.nm);
    out.u = std::move(au);
    out.omega = std::move(aw);
    out.m = std::move(am);
  } else {
    // Crank-Nicolson diagonal with an explicit trapezoid on the rest.
    SpectralField pu = diag_combine(cache.u, state.u, cache.u.f1, n0.nu);
    SpectralField pw =
        diag_combine(cache.omega, state.omega, cache.omega.f1, n0.nomega);
    SpectralField pm = diag_combine(cache.m, state.m, cache.m.f1, n0.nm);
    const NonlinearPart n1 = nonlinear_part(pu, pw, pm, out.t, cfg, forcing);
    out.u = diag_combine(cache.u, state.u, cache.u.f2, n0.nu + n1.nu);
    out.omega = diag_combine(cache.omega, state.omega, cache.omega.f2,
                             n0.nomega + n1.nomega);
    out.m = diag_combine(cache.m, state.m, cache.m.f2, n0.nm + n1.nm);
  }

  out.u = leray_project(std::move(out.u));
  zero_mean(out.u);
  zero_mean(out.omega);
  zero_mean(out.m);
  check_finite(out, step_index);
  return out;
}

Snapshot make_snapshot(const FerroState& s, const SolverConfig& cfg,
                       const ForcingSpec& forcing) {
  Snapshot snap;
  snap.f = maybe_truncate(forcing.evaluate(cfg.grid, s.t), cfg.galerkin_n);
  MagnetoSolution mag = solve_h(s.m, snap.f);
  snap.h = std::move(mag.h);
  snap.g_f = std::move(mag.g_f);
  snap.state = s;
  return snap;
}

}  // namespace

void SolverConfig::validate() const {
  params.validate();
  if (!(dt > 0.0)) throw Error("SolverConfig: dt must be positive");
  if (!(t_end >= 0.0)) throw Error("SolverConfig: t_end must be nonnegative");
  if (snapshot_stride < 1)
    throw Error("SolverConfig: snapshot_stride must be >= 1");
}

MagnetoSolution solve_state_h(const FerroState& state,
                              const ForcingSpec& forcing, double galerkin_n) {
  SpectralField f = forcing.evaluate(state.m.grid(), state.t);
  return solve_h(state.m, maybe_truncate(std::move(f), galerkin_n));
}

Tendencies compute_rhs(const FerroState& state, const SolverConfig& cfg,
                       const ForcingSpec& forcing) {
  const FerroParams& p = cfg.params;
  const Grid& g = cfg.grid;
  NonlinearPart n =
      nonlinear_part(state.u, state.omega, state.m, state.t, cfg, forcing);
  Tendencies out{std::move(n.nu), std::move(n.nomega), std::move(n.nm)};
  for (int i1 = 0; i1 < g.n1; ++i1) {
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const double k2 = g.xi_norm2(i1, i2);
      const double lu = (p.eta + p.zeta) / p.rho0 * k2;
      const double lw =
          p.eta_prime / (p.rho0 * p.k) * k2 + 4.0 * p.zeta / (p.rho0 * p.k);
      const double lm = p.sigma * k2 + 1.0 / p.tau;
      out.du.at(0, i1, i2) -= lu * state.u.at(0, i1, i2);
      out.du.at(1, i1, i2) -= lu * state.u.at(1, i1, i2);
      out.domega.at(0, i1, i2) -= lw * state.omega.at(0, i1, i2);
      out.dm.at(0, i1, i2) -= lm * state.m.at(0, i1, i2);
      out.dm.at(1, i1, i2) -= lm * state.m.at(1, i1, i2);
    }
  }
  zero_mean(out.du);
  zero_mean(out.domega);
  zero_mean(out.dm);
  return out;
}

FerroState step(const FerroState& state, const SolverConfig& cfg,
                const ForcingSpec& forcing) {
  cfg.validate();
  const StepperCache cache = make_cache(cfg);
  return step_cached(state, cfg, forcing, cache, 0);
}

FerroState prepare_initial_state(FerroState s, const SolverConfig& cfg) {
  if (!(s.u.grid() == cfg.grid) || !(s.omega.grid() == cfg.grid) ||
      !(s.m.grid() == cfg.grid))
    throw Error("prepare_initial_state: field grids do not match the config");
  if (s.u.components() != 2 || s.omega.components() != 1 ||
      s.m.components() != 2)
    throw Error("prepare_initial_state: wrong component counts");
  s.u = leray_project(dealias(std::move(s.u)));
  s.omega = dealias(std::move(s.omega));
  s.m = dealias(std::move(s.m));
  if (cfg.galerkin_n > 0.0) {
    s.u = jn_truncate(std::move(s.u), cfg.galerkin_n);
    s.omega = jn_truncate(std::move(s.omega), cfg.galerkin_n);
    s.m = jn_truncate(std::move(s.m), cfg.galerkin_n);
  }
  zero_mean(s.u);
  zero_mean(s.omega);
  zero_mean(s.m);
  return s;
}

RunResult run(const FerroState& init, const SolverConfig& cfg,
              const ForcingSpec& forcing, const RunOptions& options) {
  cfg.validate();
  RunResult result;
  result.trajectory.dt = cfg.dt;
  result.trajectory.snapshot_stride = cfg.snapshot_stride;
  result.trajectory.galerkin_n = cfg.galerkin_n;

  const double steps_real = cfg.t_end / cfg.dt;
  const long long nsteps = std::llround(steps_real);
  if (std::abs(steps_real - double(nsteps)) > 1e-6 * std::max(1.0, steps_real))
    throw Error("run: t_end must be an integer multiple of dt");

  FerroState s = prepare_initial_state(init, cfg);
  const double t0 = s.t;
  auto emit = [&](const FerroState& st) {
    Snapshot snap = make_snapshot(st, cfg, forcing);
    if (options.observer) options.observer(snap);
    if (options.keep_snapshots)
      result.trajectory.snapshots.push_back(std::move(snap));
  };
  emit(s);

  const StepperCache cache = make_cache(cfg);
  for (long long i = 1; i <= nsteps; ++i) {
    try {
      s = step_cached(s, cfg, forcing, cache, std::size_t(i - 1));
    } catch (const BlowUpError& e) {
      result.failure = RunFailure{e.what(), e.time, e.step};
      if ((i - 1) % cfg.snapshot_stride != 0) emit(s);  // last valid state
      break;
    }
    s.t = t0 + double(i) * cfg.dt;  // avoid accumulated drift
    if (i % cfg.snapshot_stride == 0 || i == nsteps) emit(s);
  }
  return result;
}

double strong_residual(const Trajectory& traj, const SolverConfig& cfg,
                       const ForcingSpec& forcing) {
  if (traj.snapshot_stride != 1)
    throw Error("strong_residual: stride-1 snapshots required");
  if (traj.snapshots.size() < 3)
    throw Error("strong_residual: need at least three snapshots");
  const double h = traj.dt;
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < traj.snapshots.size(); ++k) {
    const FerroState& prev = traj.snapshots[k - 1].state;
    const FerroState& mid = traj.snapshots[k].state;
    const FerroState& next = traj.snapshots[k + 1].state;
    const Tendencies rhs = compute_rhs(mid, cfg, forcing);
    SpectralField ru = (1.0 / (2.0 * h)) * (next.u - prev.u) - rhs.du;
    SpectralField rw = (1.0 / (2.0 * h)) * (next.omega - prev.omega) -
                       rhs.domega;
    SpectralField rm = (1.0 / (2.0 * h)) * (next.m - prev.m) - rhs.dm;
    const double res = std::sqrt(l2_norm(ru) * l2_norm(ru) +
                                 l2_norm(rw) * l2_norm(rw) +
                                 l2_norm(rm) * l2_norm(rm));
    worst = std::max(worst, res);
  }
  return worst;
}

}  // namespace ferro
