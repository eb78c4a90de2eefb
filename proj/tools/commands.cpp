#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "ferro/config.hpp"
#include "ferro/csv.hpp"
#include "ferro/diagnostics.hpp"
#include "ferro/dyadic.hpp"
#include "ferro/errors.hpp"
#include "ferro/field_dump.hpp"
#include "ferro/magnetostatics.hpp"
#include "ferro/norms.hpp"
#include "ferro/operators.hpp"
#include "ferro/paraproduct.hpp"
#include "ferro/probes.hpp"
#include "ferro/random_fields.hpp"
#include "ferro/solver.hpp"
#include "json.hpp"

namespace ferrocli {

namespace {

using namespace ferro;

// Collects assertion failures; on exit they land in failures.json next to the
// other outputs so callers can consume them without parsing stderr.
class FailureLog {
 public:
  void add(const std::string& assertion, const std::string& detail) {
    nlohmann::json item;
    item["assertion"] = assertion;
    item["detail"] = detail;
    items_.push_back(std::move(item));
    std::cerr << "FAIL " << assertion << ": " << detail << "\n";
  }

  int finish(const std::filesystem::path& outdir, const std::string& command) {
    if (items_.empty()) return 0;
    nlohmann::json doc;
    doc["command"] = command;
    doc["failures"] = items_;
    std::ofstream out(outdir / "failures.json", std::ios::binary);
    out << doc.dump(2) << "\n";
    return 1;
  }

 private:
  std::vector<nlohmann::json> items_;
};

struct Experiment {
  ExperimentConfig cfg;
  SolverConfig solver;
  ForcingSpec forcing;
  FerroState init;
  std::filesystem::path outdir;
};

Experiment load_experiment(const std::string& config_path) {
  Experiment ex;
  ex.cfg = load_config_file(config_path);
  ex.solver = ex.cfg.solver_config();
  ex.solver.validate();
  ex.forcing = ex.cfg.resolved_forcing();
  ex.init = ex.cfg.initial_state();
  ex.outdir = ex.cfg.output.dir;
  std::filesystem::create_directories(ex.outdir);
  return ex;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Draw band comfortably inside the dealias band of the configured grid.
int draw_band(const Grid& g) {
  const int band = std::min(g.n1, g.n2) / 4;
  return std::max(band, 1);
}

}  // namespace

int cmd_simulate(const SimulateOptions& opt) {
  Experiment ex = load_experiment(opt.config_path);
  FailureLog log;

  const RunResult res = run(ex.init, ex.solver, ex.forcing);
  CsvWriter csv((ex.outdir / "energy.csv").string(),
                {"t", "e", "d", "e_s", "d_s", "rhs_budget"});
  for (std::size_t i = 0; i < res.trajectory.snapshots.size(); ++i) {
    const Snapshot& snap = res.trajectory.snapshots[i];
    const EnergyReport r = energy_report(snap, ex.forcing, ex.solver.params,
                                         opt.s, ex.solver.galerkin_n);
    csv.row({r.t, r.e, r.d, r.e_s, r.d_s, r.rhs_budget});
    char name[32];
    std::snprintf(name, sizeof(name), "state_%06zu.dump", i);
    write_dump(dump_from_snapshot(snap), (ex.outdir / name).string());
  }
  if (!res.ok())
    log.add("run_completes", res.failure->reason + " at t=" +
                                 fmt(res.failure->time) + ", step " +
                                 std::to_string(res.failure->step_index));
  return log.finish(ex.outdir, "simulate");
}

int cmd_decay(const DecayOptions& opt) {
  Experiment ex = load_experiment(opt.config_path);
  FailureLog log;

  const double lo = opt.fit_lo >= 0.0 ? opt.fit_lo : ex.solver.t_end / 10.0;
  const double hi = opt.fit_hi >= 0.0 ? opt.fit_hi : ex.solver.t_end;
  const DecayReport rep =
      decay_experiment(ex.init, ex.solver, ex.forcing, opt.alpha, lo, hi);

  CsvWriter csv((ex.outdir / "decay_report.csv").string(),
                {"t", "e", "nu_sq", "v_accum", "alpha_target", "fitted_alpha",
                 "c_alpha"});
  for (const DecayRow& row : rep.rows)
    csv.row({row.t, row.e, row.nu_sq, row.v_accum, rep.alpha_target,
             rep.fitted_alpha, rep.c_alpha});

  if (!(rep.fitted_alpha >= opt.alpha))
    log.add("decay_rate_reaches_target",
            "fitted_alpha " + fmt(rep.fitted_alpha) + " < target " +
                fmt(opt.alpha) + " over [" + fmt(rep.fit_lo) + ", " +
                fmt(rep.fit_hi) + "]");
  if (!std::isfinite(rep.c_alpha))
    log.add("decay_envelope_constant_finite",
            "C_alpha = " + fmt(rep.c_alpha));
  return log.finish(ex.outdir, "decay");
}

int cmd_twin(const TwinOptions& opt) {
  Experiment ex = load_experiment(opt.config_path);
  FailureLog log;
  if (opt.mode.size() != 2) throw ConfigError("--mode needs two integers");

  const TwinReport rep = twin_experiment(ex.init, ex.solver, ex.forcing,
                                         opt.eps, {opt.mode[0], opt.mode[1]});
  CsvWriter csv((ex.outdir / "twin_report.csv").string(),
                {"t", "delta_e", "f", "envelope", "eps", "c_g"});
  for (const TwinRow& row : rep.rows)
    csv.row({row.t, row.delta_e, row.f, row.envelope, rep.eps, rep.c_g});

  if (!std::isfinite(rep.c_g))
    log.add("gronwall_constant_finite", "C_g = " + fmt(rep.c_g));
  for (const TwinRow& row : rep.rows) {
    if (row.delta_e > row.envelope * (1.0 + 1e-9)) {
      log.add("difference_energy_inside_envelope",
              "t=" + fmt(row.t) + ": delta_e " + fmt(row.delta_e) +
                  " exceeds envelope " + fmt(row.envelope));
      break;
    }
  }
  if (opt.eps == 0.0) {
    for (const TwinRow& row : rep.rows)
      if (row.delta_e != 0.0) {
        log.add("zero_perturbation_is_bitwise_identical",
                "t=" + fmt(row.t) + ": delta_e " + fmt(row.delta_e));
        break;
      }
  }
  return log.finish(ex.outdir, "twin");
}

int cmd_regsweep(const RegsweepOptions& opt) {
  Experiment ex = load_experiment(opt.config_path);
  FailureLog log;

  RunOptions ro;
  ro.keep_snapshots = true;
  const RunResult res = run(ex.init, ex.solver, ex.forcing, ro);
  if (!res.ok()) {
    log.add("run_completes", res.failure->reason);
    return log.finish(ex.outdir, "regsweep");
  }

  CsvWriter csv((ex.outdir / "regularity.csv").string(),
                {"s", "t", "e_s", "d_s", "budget_s", "sup_e_s", "int_d_s",
                 "c_min", "lp_direct_ratio"});
  for (double s : opt.s_values) {
    const RegularityReport rep =
        regularity_audit(res.trajectory, ex.solver.params, ex.forcing, s);
    for (const RegularityRow& row : rep.rows)
      csv.row({s, row.t, row.e_s, row.d_s, row.budget_s, rep.sup_e_s,
               rep.int_d_s, rep.c_min, rep.lp_direct_ratio});
    if (!std::isfinite(rep.sup_e_s))
      log.add("higher_energy_stays_finite",
              "s=" + fmt(s) + ": sup E_s = " + fmt(rep.sup_e_s));
    if (!std::isfinite(rep.c_min))
      log.add("regularity_audit_constant_finite",
              "s=" + fmt(s) + ": c_min = " + fmt(rep.c_min));
    // block-sum and direct norms may differ only by the partition overlap
    const double band = std::pow(8.0, std::abs(s));
    const double lo = 1.0 / (band * std::sqrt(3.0));
    const double hi = band * std::sqrt(3.0);
    if (!(rep.lp_direct_ratio >= lo && rep.lp_direct_ratio <= hi))
      log.add("block_sum_matches_direct_norm",
              "s=" + fmt(s) + ": ratio " + fmt(rep.lp_direct_ratio) +
                  " outside [" + fmt(lo) + ", " + fmt(hi) + "]");
  }

  if (opt.gamma > 0.0) {
    const double value =
        fractional_time_norm(res.trajectory, opt.gamma, opt.n_bound);
    CsvWriter fcsv((ex.outdir / "fractional.csv").string(),
                   {"gamma", "n_weight", "value"});
    fcsv.row({opt.gamma, opt.n_bound, value});
    if (!std::isfinite(value))
      log.add("fractional_time_norm_finite", "value = " + fmt(value));
  }
  return log.finish(ex.outdir, "regsweep");
}

int cmd_lpcheck(const LpcheckOptions& opt) {
  Experiment ex = load_experiment(opt.config_path);
  FailureLog log;
  const Grid& g = ex.solver.grid;
  const DyadicPartition part = DyadicPartition::make(g);
  std::mt19937_64 rng(opt.seed);
  const int band = draw_band(g);

  // partition of unity over every resolved nonzero mode
  double partition_defect = 0.0;
  for (int i1 = 0; i1 < g.n1; ++i1)
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const double r = std::sqrt(g.xi_norm2(i1, i2));
      if (r == 0.0) continue;
      double sum = 0.0;
      for (int j = part.j_min; j <= part.j_max; ++j) sum += part.phi(j, r);
      partition_defect = std::max(partition_defect, std::abs(sum - 1.0));
    }
  {
    CsvWriter csv((ex.outdir / "partition.csv").string(), {"worst_defect"});
    csv.row({partition_defect});
  }
  if (!(partition_defect <= 1e-12))
    log.add("partition_of_unity", "defect " + fmt(partition_defect));

  // Bony reconstruction against the dealiased product
  {
    CsvWriter csv((ex.outdir / "bony.csv").string(), {"trial", "max_rel_error"});
    for (int trial = 0; trial < opt.trials; ++trial) {
      const SpectralField a = random_band_limited(g, 1, band, 1.0, rng);
      const SpectralField b = random_band_limited(g, 1, band, 1.0, rng);
      const SpectralField whole = product_dealias(a, b);
      SpectralField parts = paraproduct(a, b, part);
      parts += paraproduct(b, a, part);
      parts += remainder(a, b, part);
      parts -= whole;
      const double scale = std::max(whole.max_abs(), 1e-300);
      const double rel = parts.max_abs() / scale;
      csv.row({double(trial), rel});
      if (!(rel <= 1e-11))
        log.add("bony_reconstruction",
                "trial " + std::to_string(trial) + ": relative error " +
                    fmt(rel));
    }
  }

  // Bernstein gradient-to-scale ratios on block-supported fields
  {
    CsvWriter csv((ex.outdir / "bernstein.csv").string(),
                  {"j", "trials", "min_ratio", "max_ratio"});
    const double outer_limit = g.xi_min() * (std::min(g.n1, g.n2) / 2);
    for (int j = 1; j <= 4 && std::pow(2.0, j + 2) <= outer_limit; ++j) {
      const BernsteinReport rep = bernstein_probe(j, opt.trials, part, rng);
      csv.row({double(rep.j), double(rep.trials), rep.min_ratio, rep.max_ratio});
      if (!(rep.min_ratio >= 0.25 - 1e-12 && rep.max_ratio <= 4.0 + 1e-12))
        log.add("bernstein_band",
                "j=" + std::to_string(j) + ": ratios [" + fmt(rep.min_ratio) +
                    ", " + fmt(rep.max_ratio) + "] outside [1/4, 4]");
    }
  }

  // transport commutator across Sobolev indices
  {
    CsvWriter csv((ex.outdir / "commutator.csv").string(),
                  {"theta", "trial", "lhs", "rhs", "ratio"});
    for (double theta : {-0.5, 0.0, 0.5}) {
      for (int trial = 0; trial < opt.trials; ++trial) {
        const SpectralField v = random_solenoidal(g, band, 1.0, rng);
        const SpectralField b = random_band_limited(g, 2, band, 1.0, rng);
        const CommutatorReport rep = commutator_probe(v, b, theta);
        csv.row({theta, double(trial), rep.lhs, rep.rhs, rep.ratio});
        if (!std::isfinite(rep.ratio))
          log.add("commutator_ratio_finite",
                  "theta=" + fmt(theta) + " trial " + std::to_string(trial));
      }
    }
  }

  // named product estimates
  {
    CsvWriter csv((ex.outdir / "inequality.csv").string(),
                  {"kind", "s", "eps", "trial", "lhs", "rhs", "ratio"});
    for (int trial = 0; trial < opt.trials; ++trial) {
      const SpectralField m = random_band_limited(g, 2, band, 1.0, rng);
      const SpectralField f = random_band_limited(g, 1, band, 1.0, rng);
      const SpectralField u = random_solenoidal(g, band, 1.0, rng);
      const SpectralField omega = random_band_limited(g, 1, band, 1.0, rng);
      const SpectralField v = random_band_limited(g, 1, band, 1.0, rng);
      const SpectralField w = random_band_limited(g, 1, band, 1.0, rng);
      const SpectralField vsol = random_solenoidal(g, band, 1.0, rng);
      for (const char* kind :
           {"lorentz", "m_cross_h", "ts_commutator", "higreg"}) {
        ProbeFields pf;
        if (std::string(kind) == "lorentz") {
          pf.m = &m;
          pf.f = &f;
          pf.u = &u;
        } else if (std::string(kind) == "m_cross_h") {
          pf.m = &m;
          pf.f = &f;
          pf.omega = &omega;
        } else if (std::string(kind) == "ts_commutator") {
          pf.v = &v;
          pf.w = &w;
        } else {
          pf.v = &vsol;
          pf.w = &w;
        }
        const InequalityReport rep =
            inequality_probe(kind, pf, opt.s, opt.eps, part);
        csv.row(kind, {rep.s, rep.eps, double(trial), rep.lhs, rep.rhs,
                       rep.ratio});
        if (!(rep.rhs > 0.0) || !std::isfinite(rep.lhs) ||
            !std::isfinite(rep.ratio))
          log.add("inequality_probe_well_posed",
                  std::string(kind) + " trial " + std::to_string(trial) +
                      ": lhs " + fmt(rep.lhs) + ", rhs " + fmt(rep.rhs));
      }
    }
  }
  return log.finish(ex.outdir, "lpcheck");
}

int cmd_magcheck(const MagcheckOptions& opt) {
  Experiment ex = load_experiment(opt.config_path);
  FailureLog log;
  const Grid& g = ex.solver.grid;
  std::mt19937_64 rng(opt.seed);
  const int band = draw_band(g);

  CsvWriter csv((ex.outdir / "magcheck.csv").string(),
                {"trial", "div_rel", "curl_rel", "min_slack", "min_slack_young",
                 "scale"});
  CsvWriter dcsv((ex.outdir / "delta_h.csv").string(),
                 {"trial", "ratio_minus_half", "grad_dh_minus_half",
                  "div_dm_minus_half"});

  int strict_negative = 0;
  double worst_slack = 0.0, worst_young = 0.0, worst_scale = 0.0;
  for (int trial = 0; trial < opt.trials; ++trial) {
    const SpectralField m = random_band_limited(g, 2, band, 1.0, rng);
    const SpectralField f = random_band_limited(g, 1, band, 1.0, rng);
    const MagnetoSolution sol = solve_h(m, f);

    SpectralField residual = divergence(sol.h + m);
    residual -= f;
    const double field_scale = l2_norm(f) + l2_norm(m);
    const double div_rel = l2_norm(residual) / field_scale;
    const double curl_rel =
        l2_norm(curl2d(sol.h)) / std::max(l2_norm(sol.h), 1e-300);
    const PointwiseBoundReport rep = pointwise_bound_check(sol, m, f);
    csv.row({double(trial), div_rel, curl_rel, rep.min_slack,
             rep.min_slack_young, rep.scale});

    if (!(div_rel <= 1e-12))
      log.add("field_equation_divergence",
              "trial " + std::to_string(trial) + ": relative residual " +
                  fmt(div_rel));
    if (!(curl_rel <= 1e-12))
      log.add("field_equation_curl_free",
              "trial " + std::to_string(trial) + ": relative residual " +
                  fmt(curl_rel));
    if (rep.min_slack < -1e-12 * rep.scale) {
      ++strict_negative;
      if (rep.min_slack < worst_slack) {
        worst_slack = rep.min_slack;
        worst_young = rep.min_slack_young;
        worst_scale = rep.scale;
      }
    }
    if (rep.min_slack_young < -1e-12 * rep.scale)
      log.add("spectral_bound_doubled_forcing",
              "trial " + std::to_string(trial) + ": slack " +
                  fmt(rep.min_slack_young) + " (scale " + fmt(rep.scale) + ")");

    // induced-field difference contraction and gradient identity
    const SpectralField m2 = random_band_limited(g, 2, band, 1.0, rng);
    const DeltaHReport dh = delta_h_identities(m, m2);
    dcsv.row({double(trial), dh.ratio_minus_half, dh.grad_dh_minus_half,
              dh.div_dm_minus_half});
    if (!(dh.ratio_minus_half <= 1.0 + 1e-12))
      log.add("difference_field_contraction",
              "trial " + std::to_string(trial) + ": ratio " +
                  fmt(dh.ratio_minus_half));
    const double id_scale = std::max(dh.div_dm_minus_half, 1e-300);
    if (std::abs(dh.grad_dh_minus_half - dh.div_dm_minus_half) >
        1e-12 * id_scale)
      log.add("difference_field_gradient_identity",
              "trial " + std::to_string(trial) + ": " +
                  fmt(dh.grad_dh_minus_half) + " vs " +
                  fmt(dh.div_dm_minus_half));
  }

  if (strict_negative > 0)
    log.add("spectral_bound_as_stated",
            std::to_string(strict_negative) + " of " +
                std::to_string(opt.trials) +
                " trials violate the stated per-mode bound; worst slack " +
                fmt(worst_slack) + " at scale " + fmt(worst_scale) +
                "; the doubled-forcing form holds with slack " +
                fmt(worst_young));
  return log.finish(ex.outdir, "magcheck");
}

}  // namespace ferrocli
