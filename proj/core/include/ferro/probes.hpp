#pragma once

#include <map>
#include <random>
#include <string>

#include "ferro/dyadic.hpp"
#include "ferro/field.hpp"

namespace ferro {

// Gradient-to-scale ratio ||grad u||_{L2} / (2^j ||u||_{L2}) of a field
// supported in dyadic block j. For such fields the ratio is pinned to the
// block annulus [2^{j-1}, 2^{j+2}] divided by 2^j.
double bernstein_ratio(const SpectralField& u, int j);

struct BernsteinReport {
  int j = 0;
  int trials = 0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

// Random fields restricted to block j; rejects blocks the grid cannot hold.
BernsteinReport bernstein_probe(int j, int trials, const DyadicPartition& part,
                                std::mt19937_64& rng);

struct CommutatorReport {
  double theta = 0.0;
  double lhs = 0.0;   // <v.grad(B), B>_{H^theta}
  double rhs = 0.0;   // ||grad v||_{L2} ||grad B||_{H^theta} ||B||_{H^theta}
  double ratio = 0.0; // lhs / rhs, 0 when rhs vanishes
};

// v must be two-component and divergence free (relative defect <= 1e-10);
// B is scalar or two-component with zero mean.
CommutatorReport commutator_probe(const SpectralField& v,
                                  const SpectralField& b, double theta);

// One evaluation of a named product/commutator estimate. The terms map holds
// every norm entering either side so that scaling behaviour can be recomputed
// from the pieces without rerunning the probe.
struct InequalityReport {
  std::string kind;
  double s = 0.0;
  double eps = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs / rhs, 0 when rhs vanishes
  std::map<std::string, double> terms;
};

// Inputs for the probe kinds; each kind reads the subset it needs:
//   lorentz:        m (2), f (scalar forcing), u (2)
//   m_cross_h:      m (2), f (scalar forcing), omega (scalar)
//   ts_commutator:  v (scalar), w (scalar)
//   higreg:         v (2, div-free), w (scalar)
struct ProbeFields {
  const SpectralField* m = nullptr;
  const SpectralField* f = nullptr;
  const SpectralField* u = nullptr;
  const SpectralField* omega = nullptr;
  const SpectralField* v = nullptr;
  const SpectralField* w = nullptr;
};

InequalityReport inequality_probe(const std::string& kind,
                                  const ProbeFields& fields, double s,
                                  double eps, const DyadicPartition& part);

}  // namespace ferro
