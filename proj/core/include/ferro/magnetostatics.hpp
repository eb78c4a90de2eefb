#pragma once

#include "ferro/field.hpp"

namespace ferro {

// Solution of div(H + M) = F, curl H = 0 on the torus, mode by mode:
//   H(xi) = -(xi xi^T/|xi|^2) M(xi) - (i xi/|xi|^2) F(xi),  H(0) = 0,
// together with the forcing potential part G_F = grad(inv_laplacian(F)).
struct MagnetoSolution {
  SpectralField h;    // two components
  SpectralField g_f;  // two components
};

// M has two components, F is scalar with zero mean (rejected otherwise).
MagnetoSolution solve_h(const SpectralField& m, const SpectralField& f);

// Mode-by-mode slack of the pointwise spectral bound
// |H(xi)|^2 <= 2|M(xi)|^2 + |xi|^{-2} |F(xi)|^2.
// min_slack is the minimum over nonzero modes of (rhs - lhs); scale is the
// largest per-mode magnitude of (rhs + lhs). min_slack_young is the same
// quantity for the weaker bound with the F-term doubled, which is what a
// Cauchy-Schwarz/Young argument actually delivers.
struct PointwiseBoundReport {
  double min_slack = 0.0;
  double min_slack_young = 0.0;
  double scale = 0.0;
};
PointwiseBoundReport pointwise_bound_check(const MagnetoSolution& sol,
                                           const SpectralField& m,
                                           const SpectralField& f);

// ||H||_{Hs} / (||M||_{Hs} + ||G_F||_{Hs}); never exceeds 1 beyond round-off.
double hs_bound_check(const MagnetoSolution& sol, const SpectralField& m,
                      double s);

// For a magnetization difference dM = m_a - m_b, the induced field difference
// dH = -Q dM satisfies ||dH||_{H^{-1/2}} <= ||dM||_{H^{-1/2}} (mode by mode)
// and the exact identity ||grad dH||_{H^{-1/2}} = ||div dM||_{H^{-1/2}}.
struct DeltaHReport {
  double ratio_minus_half = 0.0;  // ||dH||_{H^{-1/2}} / ||dM||_{H^{-1/2}}
  double grad_dh_minus_half = 0.0;   // ||grad dH||_{H^{-1/2}}
  double div_dm_minus_half = 0.0;    // ||div dM||_{H^{-1/2}}
};
DeltaHReport delta_h_identities(const SpectralField& m_a,
                                const SpectralField& m_b);

}  // namespace ferro
