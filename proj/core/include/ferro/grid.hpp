#pragma once

#include <cstddef>
#include <numbers>

namespace ferro {

// Uniform periodic grid on [0,L)^2.
//
// Spectral storage follows FFT index order: flat index i in [0,n) holds the
// integer wavenumber k = i for i < n/2 and k = i - n otherwise, so k ranges
// over [-n/2, n/2). The physical wavevector is xi = (2*pi/L) * k. Physical
// samples live at x = L*i/n with the second index fastest.
struct Grid {
  int n1 = 0;
  int n2 = 0;
  double length = 0.0;
  double dealias_fraction = 2.0 / 3.0;

  Grid() = default;
  Grid(int n1_, int n2_, double length_, double dealias_fraction_ = 2.0 / 3.0);

  std::size_t size() const { return static_cast<std::size_t>(n1) * n2; }
  std::size_t index(int i1, int i2) const {
    return static_cast<std::size_t>(i1) * n2 + i2;
  }

  int k1(int i1) const { return i1 < n1 / 2 ? i1 : i1 - n1; }
  int k2(int i2) const { return i2 < n2 / 2 ? i2 : i2 - n2; }

  double xi1(int i1) const { return 2.0 * std::numbers::pi / length * k1(i1); }
  double xi2(int i2) const { return 2.0 * std::numbers::pi / length * k2(i2); }
  double xi_norm2(int i1, int i2) const {
    const double a = xi1(i1), b = xi2(i2);
    return a * a + b * b;
  }

  double x1(int i1) const { return length * i1 / n1; }
  double x2(int i2) const { return length * i2 / n2; }

  double dx_min() const { return length / (n1 > n2 ? n1 : n2); }

  // Largest |xi| present on the grid (corner mode).
  double xi_max() const;
  // Smallest nonzero |xi| (lowest mode along an axis).
  double xi_min() const { return 2.0 * std::numbers::pi / length; }

  bool operator==(const Grid&) const = default;
};

}  // namespace ferro
