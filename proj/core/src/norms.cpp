#include "ferro/norms.hpp"

#include <cmath>

#include "ferro/errors.hpp"

namespace ferro {

namespace {
double box_measure(const Grid& g) { return g.length * g.length; }

void require_same(const SpectralField& a, const SpectralField& b) {
  if (!(a.grid() == b.grid()) || a.components() != b.components())
    throw Error("inner product: incompatible fields");
}
}  // namespace

double l2_norm(const SpectralField& f) {
  double sum = 0.0;
  for (const auto& v : f.raw()) sum += std::norm(v);
  return std::sqrt(box_measure(f.grid()) * sum);
}

double l2_inner(const SpectralField& a, const SpectralField& b) {
  require_same(a, b);
  double sum = 0.0;
  const auto& ra = a.raw();
  const auto& rb = b.raw();
  for (std::size_t i = 0; i < ra.size(); ++i)
    sum += (std::conj(ra[i]) * rb[i]).real();
  return box_measure(a.grid()) * sum;
}

double sobolev_norm_direct(const SpectralField& f, double s) {
  const Grid& g = f.grid();
  double sum = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    for (int i1 = 0; i1 < g.n1; ++i1) {
      for (int i2 = 0; i2 < g.n2; ++i2) {
        const double k2 = g.xi_norm2(i1, i2);
        if (k2 == 0.0) continue;
        sum += std::pow(k2, s) * std::norm(f.at(c, i1, i2));
      }
    }
  }
  return std::sqrt(box_measure(g) * sum);
}

double sobolev_inner(const SpectralField& a, const SpectralField& b, double s) {
  require_same(a, b);
  const Grid& g = a.grid();
  double sum = 0.0;
  for (int c = 0; c < a.components(); ++c) {
    for (int i1 = 0; i1 < g.n1; ++i1) {
      for (int i2 = 0; i2 < g.n2; ++i2) {
        const double k2 = g.xi_norm2(i1, i2);
        if (k2 == 0.0) continue;
        sum += std::pow(k2, s) *
               (std::conj(a.at(c, i1, i2)) * b.at(c, i1, i2)).real();
      }
    }
  }
  return box_measure(g) * sum;
}

double sobolev_norm_lp(const SpectralField& f, double s,
                       const DyadicPartition& part) {
  double sum = 0.0;
  for (int j = part.j_min; j <= part.j_max; ++j) {
    const double nj = l2_norm(dyadic_block(f, j, part));
    sum += std::exp2(2.0 * s * j) * nj * nj;
  }
  return std::sqrt(sum);
}

double inhomogeneous_norm(const SpectralField& f, double s) {
  const Grid& g = f.grid();
  double sum = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    for (int i1 = 0; i1 < g.n1; ++i1) {
      for (int i2 = 0; i2 < g.n2; ++i2) {
        const double k2 = g.xi_norm2(i1, i2);
        sum += std::pow(1.0 + k2, s) * std::norm(f.at(c, i1, i2));
      }
    }
  }
  return std::sqrt(box_measure(g) * sum);
}

double grad_l2_norm(const SpectralField& f) { return sobolev_norm_direct(f, 1.0); }

}  // namespace ferro
