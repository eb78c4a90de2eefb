#include "ferro/dyadic.hpp"

#include <cmath>
#include <sstream>

#include "ferro/errors.hpp"

namespace ferro {

DyadicPartition DyadicPartition::make(const Grid& g) {
  DyadicPartition p;
  p.grid = g;
  p.j_min = static_cast<int>(std::floor(std::log2(g.xi_min()))) - 1;
  p.j_max = static_cast<int>(std::ceil(std::log2(g.xi_max()))) + 1;
  return p;
}

double DyadicPartition::chi(double r) const {
  if (r <= 0.5) return 1.0;
  if (r >= 2.0) return 0.0;
  const auto g = [](double t) { return std::exp(-1.0 / t); };
  const double a = g(2.0 - r), b = g(r - 0.5);
  return a / (a + b);
}

double DyadicPartition::phi(int j, double r) const {
  return chi(r * std::exp2(-(j + 1))) - chi(r * std::exp2(-j));
}

SpectralField dyadic_block(const SpectralField& f, int j,
                           const DyadicPartition& part) {
  if (!part.in_range(j)) {
    std::ostringstream msg;
    msg << "dyadic_block: j = " << j << " outside [" << part.j_min << ", "
        << part.j_max << "]";
    throw Error(msg.str());
  }
  const Grid& g = f.grid();
  SpectralField out(g, f.components());
  for (int c = 0; c < f.components(); ++c) {
    for (int i1 = 0; i1 < g.n1; ++i1) {
      for (int i2 = 0; i2 < g.n2; ++i2) {
        const double r = std::sqrt(g.xi_norm2(i1, i2));
        out.at(c, i1, i2) = part.phi(j, r) * f.at(c, i1, i2);
      }
    }
  }
  return out;
}

SpectralField low_cutoff(const SpectralField& f, int j,
                         const DyadicPartition& part) {
  const Grid& g = f.grid();
  const double scale = std::exp2(-j);
  SpectralField out(g, f.components());
  for (int c = 0; c < f.components(); ++c) {
    for (int i1 = 0; i1 < g.n1; ++i1) {
      for (int i2 = 0; i2 < g.n2; ++i2) {
        const double r = std::sqrt(g.xi_norm2(i1, i2));
        out.at(c, i1, i2) = part.chi(r * scale) * f.at(c, i1, i2);
      }
    }
  }
  return out;
}

}  // namespace ferro
