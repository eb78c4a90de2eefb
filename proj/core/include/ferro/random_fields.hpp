#pragma once

#include <random>

#include "ferro/field.hpp"

namespace ferro {

// Zero-mean random field with independent complex Gaussian coefficients of
// standard deviation `amplitude` at every mode with 0 < max(|k1|,|k2|) <= band,
// conjugate-symmetrized so samples are real. The draw order depends only on
// `band` and `components`, so one seed produces the same field content on any
// grid that resolves the band; unresolvable bands are rejected.
SpectralField random_band_limited(const Grid& g, int components, int band,
                                  double amplitude, std::mt19937_64& rng);

// Same draws shaped by the spectral envelope exp(-|k|^2/(2 k_c^2)).
SpectralField random_smooth(const Grid& g, int components, int band,
                            double amplitude, double k_c, std::mt19937_64& rng);

// Divergence-free two-component sample (Leray projection of a random field).
SpectralField random_solenoidal(const Grid& g, int band, double amplitude,
                                std::mt19937_64& rng);

}  // namespace ferro
