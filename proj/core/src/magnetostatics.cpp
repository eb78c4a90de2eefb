#include "ferro/magnetostatics.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "ferro/errors.hpp"
#include "ferro/norms.hpp"
#include "ferro/operators.hpp"

namespace ferro {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

MagnetoSolution solve_h(const SpectralField& m, const SpectralField& f) {
  if (m.components() != 2) throw Error("solve_h: M must have two components");
  if (f.components() != 1) throw Error("solve_h: F must be scalar");
  const Grid& g = m.grid();
  if (!(g == f.grid())) throw Error("solve_h: grid mismatch");
  const double mean = std::abs(f.at(0, 0, 0));
  const double scale = f.max_abs();
  if (mean > 1e-12 * (scale > 0.0 ? scale : 1.0)) {
    std::ostringstream msg;
    msg << "solve_h: F must have zero mean; |coeff(0)| = " << mean;
    throw Error(msg.str());
  }

  MagnetoSolution sol{SpectralField(g, 2), SpectralField(g, 2)};
  for (int i1 = 0; i1 < g.n1; ++i1) {
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const double x1 = g.xi1(i1), x2 = g.xi2(i2);
      const double k2 = x1 * x1 + x2 * x2;
      if (k2 == 0.0) continue;
      const std::complex<double> dot =
          (x1 * m.at(0, i1, i2) + x2 * m.at(1, i1, i2)) / k2;
      const std::complex<double> pot = kI * f.at(0, i1, i2) / k2;
      sol.g_f.at(0, i1, i2) = -x1 * pot;
      sol.g_f.at(1, i1, i2) = -x2 * pot;
      sol.h.at(0, i1, i2) = -x1 * dot + sol.g_f.at(0, i1, i2);
      sol.h.at(1, i1, i2) = -x2 * dot + sol.g_f.at(1, i1, i2);
    }
  }
  return sol;
}

PointwiseBoundReport pointwise_bound_check(const MagnetoSolution& sol,
                                           const SpectralField& m,
                                           const SpectralField& f) {
  const Grid& g = m.grid();
  PointwiseBoundReport report;
  bool first = true;
  for (int i1 = 0; i1 < g.n1; ++i1) {
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const double k2 = g.xi_norm2(i1, i2);
      if (k2 == 0.0) continue;
      const double h2 = std::norm(sol.h.at(0, i1, i2)) +
                        std::norm(sol.h.at(1, i1, i2));
      const double m2 =
          std::norm(m.at(0, i1, i2)) + std::norm(m.at(1, i1, i2));
      const double f2 = std::norm(f.at(0, i1, i2)) / k2;
      const double slack = 2.0 * m2 + f2 - h2;
      const double slack_young = 2.0 * m2 + 2.0 * f2 - h2;
      if (first) {
        report.min_slack = slack;
        report.min_slack_young = slack_young;
        first = false;
      } else {
        report.min_slack = std::min(report.min_slack, slack);
        report.min_slack_young = std::min(report.min_slack_young, slack_young);
      }
      report.scale = std::max(report.scale, 2.0 * m2 + f2 + h2);
    }
  }
  return report;
}

double hs_bound_check(const MagnetoSolution& sol, const SpectralField& m,
                      double s) {
  const double num = sobolev_norm_direct(sol.h, s);
  const double den =
      sobolev_norm_direct(m, s) + sobolev_norm_direct(sol.g_f, s);
  if (den == 0.0) return 0.0;
  return num / den;
}

DeltaHReport delta_h_identities(const SpectralField& m_a,
                                const SpectralField& m_b) {
  SpectralField dm = m_a;
  dm -= m_b;
  SpectralField dh = q_project(dm);
  dh *= -1.0;
  DeltaHReport report;
  const double dm_norm = sobolev_norm_direct(dm, -0.5);
  const double dh_norm = sobolev_norm_direct(dh, -0.5);
  report.ratio_minus_half = dm_norm > 0.0 ? dh_norm / dm_norm : 0.0;
  // ||grad dH||_{H^{-1/2}} carries weight |xi|^{-1+2} = |xi|, i.e. H^{1/2} of dH
  report.grad_dh_minus_half = sobolev_norm_direct(dh, 0.5);
  report.div_dm_minus_half = sobolev_norm_direct(divergence(dm), -0.5);
  return report;
}

}  // namespace ferro
