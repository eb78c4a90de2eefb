#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ferrocli {

struct SimulateOptions {
  std::string config_path;
  double s = 1.0;  // Sobolev index for the e_s / d_s columns
};

struct DecayOptions {
  std::string config_path;
  double alpha = 0.4;
  double fit_lo = -1.0;  // < 0: t_end / 10
  double fit_hi = -1.0;  // < 0: t_end
};

struct TwinOptions {
  std::string config_path;
  double eps = 1e-6;
  std::vector<int> mode = {5, 3};
};

struct RegsweepOptions {
  std::string config_path;
  std::vector<double> s_values = {1.5};
  double gamma = 0.0;    // > 0 adds the fractional time norm
  double n_bound = 2.0;  // H^{-N} weight for the fractional norm
};

struct LpcheckOptions {
  std::string config_path;
  int trials = 50;
  std::uint64_t seed = 1;
  double s = 1.0;
  double eps = 0.5;
};

struct MagcheckOptions {
  std::string config_path;
  int trials = 50;
  std::uint64_t seed = 1;
};

int cmd_simulate(const SimulateOptions& opt);
int cmd_decay(const DecayOptions& opt);
int cmd_twin(const TwinOptions& opt);
int cmd_regsweep(const RegsweepOptions& opt);
int cmd_lpcheck(const LpcheckOptions& opt);
int cmd_magcheck(const MagcheckOptions& opt);

}  // namespace ferrocli
