#pragma once

#include "ferro/field.hpp"

namespace ferro {

// Homogeneous dyadic decomposition of the resolved spectrum.
//
// The radial profile chi equals 1 for r <= 1/2, vanishes for r >= 2, and is
// glued smoothly in between; phi_j(xi) = chi(xi/2^{j+1}) - chi(xi/2^j) is
// supported in the annulus 2^{j-1} <= |xi| <= 2^{j+2}, at most three blocks
// overlap at any mode, and summing phi_j over the full range telescopes to 1
// at every resolved nonzero mode.
struct DyadicPartition {
  Grid grid;
  int j_min = 0;
  int j_max = 0;

  static DyadicPartition make(const Grid& g);

  double chi(double r) const;
  double phi(int j, double r) const;
  bool in_range(int j) const { return j >= j_min && j <= j_max; }
};

// Multiply by phi_j; j must lie in [j_min, j_max].
SpectralField dyadic_block(const SpectralField& f, int j,
                           const DyadicPartition& part);

// Multiply by chi(xi / 2^j); any j is meaningful.
SpectralField low_cutoff(const SpectralField& f, int j,
                         const DyadicPartition& part);

}  // namespace ferro
