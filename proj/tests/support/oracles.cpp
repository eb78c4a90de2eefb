#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace oracle {

using ferro::Grid;
using ferro::PhysicalField;
using ferro::SpectralField;

SpectralField dft_forward(const PhysicalField& f) {
  const Grid& g = f.grid();
  SpectralField out(g, f.components());
  const double two_pi = 2.0 * std::numbers::pi;
  for (int c = 0; c < f.components(); ++c)
    for (int i1 = 0; i1 < g.n1; ++i1)
      for (int i2 = 0; i2 < g.n2; ++i2) {
        std::complex<double> acc = 0.0;
        for (int j1 = 0; j1 < g.n1; ++j1)
          for (int j2 = 0; j2 < g.n2; ++j2) {
            const double phase = two_pi * (double(g.k1(i1)) * j1 / g.n1 +
                                           double(g.k2(i2)) * j2 / g.n2);
            acc += f.at(c, j1, j2) *
                   std::complex<double>{std::cos(phase), -std::sin(phase)};
          }
        out.at(c, i1, i2) = acc / double(g.n1 * g.n2);
      }
  return out;
}

PhysicalField dft_inverse(const SpectralField& f) {
  const Grid& g = f.grid();
  PhysicalField out(g, f.components());
  const double two_pi = 2.0 * std::numbers::pi;
  for (int c = 0; c < f.components(); ++c)
    for (int j1 = 0; j1 < g.n1; ++j1)
      for (int j2 = 0; j2 < g.n2; ++j2) {
        std::complex<double> acc = 0.0;
        for (int i1 = 0; i1 < g.n1; ++i1)
          for (int i2 = 0; i2 < g.n2; ++i2) {
            const double phase = two_pi * (double(g.k1(i1)) * j1 / g.n1 +
                                           double(g.k2(i2)) * j2 / g.n2);
            acc += f.at(c, i1, i2) *
                   std::complex<double>{std::cos(phase), std::sin(phase)};
          }
        out.at(c, j1, j2) = acc.real();
      }
  return out;
}

SpectralField convolution_product(const SpectralField& a,
                                  const SpectralField& b) {
  const Grid& g = a.grid();
  const bool a_scalar = a.components() == 1;
  const int out_comps = a_scalar ? b.components() : a.components();
  SpectralField out(g, out_comps);
  const int keep1 = int(g.dealias_fraction * g.n1 / 2);
  const int keep2 = int(g.dealias_fraction * g.n2 / 2);
  const int h1 = g.n1 / 2, h2 = g.n2 / 2;

  auto coeff = [&](const SpectralField& f, int c, int k1, int k2)
      -> std::complex<double> {
    if (k1 < -h1 || k1 >= h1 || k2 < -h2 || k2 >= h2) return 0.0;
    const int i1 = k1 >= 0 ? k1 : k1 + g.n1;
    const int i2 = k2 >= 0 ? k2 : k2 + g.n2;
    return f.at(c, i1, i2);
  };

  for (int c = 0; c < out_comps; ++c) {
    const int ca = a_scalar ? 0 : c;
    const int cb = a_scalar ? c : (b.components() == 1 ? 0 : c);
    for (int k1 = -keep1; k1 <= keep1; ++k1)
      for (int k2 = -keep2; k2 <= keep2; ++k2) {
        std::complex<double> acc = 0.0;
        for (int q1 = -h1; q1 < h1; ++q1)
          for (int q2 = -h2; q2 < h2; ++q2)
            acc += coeff(a, ca, q1, q2) * coeff(b, cb, k1 - q1, k2 - q2);
        const int i1 = k1 >= 0 ? k1 : k1 + g.n1;
        const int i2 = k2 >= 0 ? k2 : k2 + g.n2;
        out.at(c, i1, i2) = acc;
      }
  }
  return out;
}

double l2_norm_sq_quadrature(const PhysicalField& f) {
  const Grid& g = f.grid();
  double acc = 0.0;
  for (double v : f.raw()) acc += v * v;
  return acc * g.length * g.length / double(g.n1 * g.n2);
}

std::array<double, 2> u_omega_mode_solution(const ferro::FerroParams& p,
                                            double xi_norm, double a0,
                                            double b0, double t) {
  const double xi2 = xi_norm * xi_norm;
  const double m11 = -(p.eta + p.zeta) * xi2 / p.rho0;
  const double m12 = -2.0 * p.zeta * xi_norm / p.rho0;
  const double m21 = -2.0 * p.zeta * xi_norm / (p.rho0 * p.k);
  const double m22 = -(p.eta_prime * xi2 + 4.0 * p.zeta) / (p.rho0 * p.k);

  // m12*m21 > 0 so the eigenvalues are real and distinct unless the matrix
  // is exactly degenerate, which these coefficients never are.
  const double tr = m11 + m22;
  const double disc = std::sqrt((m11 - m22) * (m11 - m22) + 4.0 * m12 * m21);
  const double l1 = 0.5 * (tr + disc);
  const double l2 = 0.5 * (tr - disc);

  // Spectral projection: exp(tM) = e^{l1 t} P1 + e^{l2 t} P2 with
  // P1 = (M - l2 I)/(l1 - l2), P2 = I - P1.
  const double e1 = std::exp(l1 * t), e2 = std::exp(l2 * t);
  const double inv = 1.0 / (l1 - l2);
  const double p11 = (m11 - l2) * inv, p12 = m12 * inv;
  const double p21 = m21 * inv, p22 = (m22 - l2) * inv;
  const double a = (e1 * p11 + e2 * (1.0 - p11)) * a0 +
                   (e1 - e2) * p12 * b0;
  const double b = (e1 - e2) * p21 * a0 +
                   (e1 * p22 + e2 * (1.0 - p22)) * b0;
  return {a, b};
}

double m_perp_decay_factor(const ferro::FerroParams& p, double xi_norm2,
                           double t) {
  return std::exp(-(p.sigma * xi_norm2 + 1.0 / p.tau) * t);
}

double m_parallel_decay_factor(const ferro::FerroParams& p, double xi_norm2,
                               double t) {
  return std::exp(-(p.sigma * xi_norm2 + (1.0 + p.chi0) / p.tau) * t);
}

std::vector<double> forced_mode_solution(const ferro::FerroParams& p,
                                         double xi_norm, double k_amp,
                                         double eta_decay,
                                         const std::vector<double>& times,
                                         double dt_fine) {
  const double rate = p.sigma * xi_norm * xi_norm + (1.0 + p.chi0) / p.tau;
  auto g = [&](double t) {
    return -(std::sqrt(k_amp) / 2.0) *
           std::pow(1.0 + t, -(1.0 + eta_decay) / 2.0) / xi_norm;
  };
  auto f = [&](double t, double y) {
    return -rate * y + (p.chi0 / p.tau) * g(t);
  };

  std::vector<double> out;
  double t = 0.0, y = 0.0;
  for (double target : times) {
    while (t < target - 1e-12) {
      const double h = std::min(dt_fine, target - t);
      const double k1 = f(t, y);
      const double k2 = f(t + h / 2, y + h / 2 * k1);
      const double k3 = f(t + h / 2, y + h / 2 * k2);
      const double k4 = f(t + h, y + h * k3);
      y += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
      t += h;
    }
    out.push_back(y);
  }
  return out;
}

double boxcar_bin_power(int m, int S, int P, double dt) {
  // |sum_{s<S} w^{ms}|^2 with w = e^{-2 pi i/P}: geometric sum.
  if (m % P == 0) return double(S) * S * dt * dt;
  const double x = std::numbers::pi * m / P;
  const double num = std::sin(S * x), den = std::sin(x);
  return dt * dt * (num * num) / (den * den);
}

double richardson_order(double err_h, double err_half) {
  return std::log2(err_h / err_half);
}

double log_slope(const std::vector<double>& t, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(y[i] > 0.0)) continue;
    const double x = std::log1p(t[i]), v = std::log(y[i]);
    sx += x;
    sy += v;
    sxx += x * x;
    sxy += x * v;
    ++n;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle
