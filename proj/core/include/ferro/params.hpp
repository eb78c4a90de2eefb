#pragma once

#include <algorithm>

#include "ferro/errors.hpp"

namespace ferro {

// Physical constants of the ferrofluid system. All default to 1 so the
// dissipation-rate constant below comes out as a legible 1/2.
struct FerroParams {
  double rho0 = 1.0;       // mass density
  double k = 1.0;          // micro-inertia
  double eta = 1.0;        // shear viscosity
  double zeta = 1.0;       // vortex viscosity
  double eta_prime = 1.0;  // spin viscosity
  double mu0 = 1.0;        // permeability
  double sigma = 1.0;      // magnetization diffusivity
  double tau = 1.0;        // relaxation time
  double chi0 = 1.0;       // susceptibility

  void validate() const {
    const double all[] = {rho0, k,     eta, zeta, eta_prime,
                          mu0,  sigma, tau, chi0};
    for (double v : all)
      if (!(v > 0.0))
        throw Error("FerroParams: all constants must be strictly positive");
  }

  // Rate constant pairing the dissipation with the energy in the L2 energy
  // inequality: min{(eta+zeta)/2, eta_prime/2, 4 zeta, sigma/2, 1/tau,
  // chi0/(2 tau)}.
  double energy_rate_constant() const {
    return std::min({(eta + zeta) / 2.0, eta_prime / 2.0, 4.0 * zeta,
                     sigma / 2.0, 1.0 / tau, chi0 / (2.0 * tau)});
  }
};

}  // namespace ferro
