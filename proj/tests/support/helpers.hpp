#pragma once

// Small field constructors shared by the test suites.

#include <algorithm>
#include <cmath>
#include <complex>

#include "ferro/field.hpp"

namespace testutil {

// Writes amp at (k1, k2) and the conjugate at the mirror so the field stays
// real. Adds on top of whatever is present.
inline void add_mode(ferro::SpectralField& f, int c, int k1, int k2,
                     std::complex<double> amp) {
  const ferro::Grid& g = f.grid();
  const int ip1 = k1 >= 0 ? k1 : k1 + g.n1;
  const int ip2 = k2 >= 0 ? k2 : k2 + g.n2;
  const int im1 = -k1 >= 0 ? -k1 : -k1 + g.n1;
  const int im2 = -k2 >= 0 ? -k2 : -k2 + g.n2;
  f.at(c, ip1, ip2) += amp;
  f.at(c, im1, im2) += std::conj(amp);
}

// amp*cos(k.x + phase) as a scalar (or chosen component of a) field.
inline void add_cos(ferro::SpectralField& f, int c, int k1, int k2, double amp,
                    double phase = 0.0) {
  add_mode(f, c, k1, k2,
           0.5 * amp * std::complex<double>{std::cos(phase), std::sin(phase)});
}

// amp*sin(k.x) = amp*cos(k.x - pi/2).
inline void add_sin(ferro::SpectralField& f, int c, int k1, int k2,
                    double amp) {
  add_mode(f, c, k1, k2, std::complex<double>{0.0, -0.5 * amp});
}

inline ferro::SpectralField cos_field(const ferro::Grid& g, int k1, int k2,
                                      double amp, double phase = 0.0) {
  ferro::SpectralField f(g, 1);
  add_cos(f, 0, k1, k2, amp, phase);
  return f;
}

// Reads the coefficient at signed wavenumbers.
inline std::complex<double> mode_of(const ferro::SpectralField& f, int c,
                                    int k1, int k2) {
  const ferro::Grid& g = f.grid();
  const int i1 = k1 >= 0 ? k1 : k1 + g.n1;
  const int i2 = k2 >= 0 ? k2 : k2 + g.n2;
  return f.at(c, i1, i2);
}

// Largest coefficient difference between two fields of the same shape.
inline double max_coeff_diff(const ferro::SpectralField& a,
                             const ferro::SpectralField& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.raw().size(); ++i)
    worst = std::max(worst, std::abs(a.raw()[i] - b.raw()[i]));
  return worst;
}

}  // namespace testutil
