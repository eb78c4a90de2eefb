#include "ferro/random_fields.hpp"

#include <cmath>

#include "ferro/errors.hpp"
#include "ferro/operators.hpp"

namespace ferro {

namespace {

template <typename Envelope>
SpectralField draw(const Grid& g, int components, int band, double amplitude,
                   std::mt19937_64& rng, Envelope envelope) {
  if (band < 1) throw Error("random field: band must be at least 1");
  if (band > g.n1 / 2 - 1 || band > g.n2 / 2 - 1)
    throw Error("random field: band exceeds the resolvable wavenumbers");
  std::normal_distribution<double> normal(0.0, 1.0);
  const double part_sd = amplitude / std::sqrt(2.0);
  SpectralField out(g, components);
  for (int c = 0; c < components; ++c) {
    for (int k1 = -band; k1 <= band; ++k1) {
      for (int k2 = -band; k2 <= band; ++k2) {
        if (k1 == 0 && k2 == 0) continue;
        const double re = normal(rng), im = normal(rng);
        // keep one representative per conjugate pair
        if (k1 < 0 || (k1 == 0 && k2 < 0)) continue;
        const std::complex<double> z =
            envelope(k1, k2) * part_sd * std::complex<double>(re, im);
        const int i1 = (k1 + g.n1) % g.n1;
        const int i2 = (k2 + g.n2) % g.n2;
        const int j1 = (g.n1 - i1) % g.n1;
        const int j2 = (g.n2 - i2) % g.n2;
        out.at(c, i1, i2) = z;
        out.at(c, j1, j2) = std::conj(z);
      }
    }
  }
  return out;
}

}  // namespace

SpectralField random_band_limited(const Grid& g, int components, int band,
                                  double amplitude, std::mt19937_64& rng) {
  return draw(g, components, band, amplitude, rng,
              [](int, int) { return 1.0; });
}

SpectralField random_smooth(const Grid& g, int components, int band,
                            double amplitude, double k_c,
                            std::mt19937_64& rng) {
  const double inv = 1.0 / (2.0 * k_c * k_c);
  return draw(g, components, band, amplitude, rng, [inv](int k1, int k2) {
    return std::exp(-(k1 * k1 + k2 * k2) * inv);
  });
}

SpectralField random_solenoidal(const Grid& g, int band, double amplitude,
                                std::mt19937_64& rng) {
  return leray_project(random_band_limited(g, 2, band, amplitude, rng));
}

}  // namespace ferro
