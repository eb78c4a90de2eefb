#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "ferro/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"spectral ferrofluid simulator and harmonic-analysis checks"};
  app.require_subcommand(1);

  ferrocli::SimulateOptions sim_opt;
  CLI::App* sim = app.add_subcommand(
      "simulate", "integrate the configured experiment; energy.csv + dumps");
  sim->add_option("--config", sim_opt.config_path, "experiment config")
      ->required();
  sim->add_option("--s", sim_opt.s, "Sobolev index for the e_s column");

  ferrocli::DecayOptions decay_opt;
  CLI::App* decay = app.add_subcommand(
      "decay", "forced long-time decay experiment; decay_report.csv");
  decay->add_option("--config", decay_opt.config_path, "experiment config")
      ->required();
  decay->add_option("--alpha", decay_opt.alpha,
                    "target decay exponent (must stay below forcing.eta_decay)");
  decay->add_option("--fit-lo", decay_opt.fit_lo, "fit window start");
  decay->add_option("--fit-hi", decay_opt.fit_hi, "fit window end");

  ferrocli::TwinOptions twin_opt;
  CLI::App* twin = app.add_subcommand(
      "twin", "perturbed twin-run difference energy; twin_report.csv");
  twin->add_option("--config", twin_opt.config_path, "experiment config")
      ->required();
  twin->add_option("--eps", twin_opt.eps, "perturbation amplitude");
  twin->add_option("--mode", twin_opt.mode, "perturbation wavevector k1 k2")
      ->expected(2);

  ferrocli::RegsweepOptions reg_opt;
  CLI::App* reg = app.add_subcommand(
      "regsweep", "H^s propagation audit over indices; regularity.csv");
  reg->add_option("--config", reg_opt.config_path, "experiment config")
      ->required();
  reg->add_option("--s", reg_opt.s_values, "Sobolev indices to audit");
  reg->add_option("--gamma", reg_opt.gamma,
                  "fractional time-regularity exponent (0 skips)");
  reg->add_option("--n-bound", reg_opt.n_bound,
                  "H^{-N} spatial weight for the fractional norm");

  ferrocli::LpcheckOptions lp_opt;
  CLI::App* lp = app.add_subcommand(
      "lpcheck", "dyadic partition, Bony, Bernstein and commutator probes");
  lp->add_option("--config", lp_opt.config_path, "experiment config")
      ->required();
  lp->add_option("--trials", lp_opt.trials, "draws per probe")
      ->check(CLI::PositiveNumber);
  lp->add_option("--seed", lp_opt.seed, "rng seed");
  lp->add_option("--s", lp_opt.s, "Sobolev index for the inequality probes");
  lp->add_option("--eps", lp_opt.eps, "Young-split weight in (0, 1)");

  ferrocli::MagcheckOptions mag_opt;
  CLI::App* mag = app.add_subcommand(
      "magcheck", "magnetostatic identities and per-mode bound audit");
  mag->add_option("--config", mag_opt.config_path, "experiment config")
      ->required();
  mag->add_option("--trials", mag_opt.trials, "random (M, F) ensembles")
      ->check(CLI::PositiveNumber);
  mag->add_option("--seed", mag_opt.seed, "rng seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) return ferrocli::cmd_simulate(sim_opt);
    if (decay->parsed()) return ferrocli::cmd_decay(decay_opt);
    if (twin->parsed()) return ferrocli::cmd_twin(twin_opt);
    if (reg->parsed()) return ferrocli::cmd_regsweep(reg_opt);
    if (lp->parsed()) return ferrocli::cmd_lpcheck(lp_opt);
    if (mag->parsed()) return ferrocli::cmd_magcheck(mag_opt);
  } catch (const ferro::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
