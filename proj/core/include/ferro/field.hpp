#pragma once

#include <complex>
#include <vector>

#include "ferro/grid.hpp"

namespace ferro {

// Fourier coefficients of a real field with one or two components.
// Coefficient-as-amplitude normalization: the coefficient at wavevector xi is
// the complex amplitude of exp(i xi.x) in the field.
class SpectralField {
 public:
  SpectralField() = default;
  SpectralField(const Grid& g, int components);

  const Grid& grid() const { return grid_; }
  int components() const { return components_; }

  std::complex<double>& at(int c, int i1, int i2) {
    return data_[offset(c) + grid_.index(i1, i2)];
  }
  const std::complex<double>& at(int c, int i1, int i2) const {
    return data_[offset(c) + grid_.index(i1, i2)];
  }

  std::complex<double>* component(int c) { return data_.data() + offset(c); }
  const std::complex<double>* component(int c) const {
    return data_.data() + offset(c);
  }

  std::vector<std::complex<double>>& raw() { return data_; }
  const std::vector<std::complex<double>>& raw() const { return data_; }

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double a);

  double max_abs() const;
  bool is_zero() const;

 private:
  std::size_t offset(int c) const { return static_cast<std::size_t>(c) * grid_.size(); }

  Grid grid_;
  int components_ = 0;
  std::vector<std::complex<double>> data_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double a, SpectralField f);

// Real samples of a field with one or two components, second index fastest.
class PhysicalField {
 public:
  PhysicalField() = default;
  PhysicalField(const Grid& g, int components);

  const Grid& grid() const { return grid_; }
  int components() const { return components_; }

  double& at(int c, int i1, int i2) {
    return data_[offset(c) + grid_.index(i1, i2)];
  }
  double at(int c, int i1, int i2) const {
    return data_[offset(c) + grid_.index(i1, i2)];
  }

  double* component(int c) { return data_.data() + offset(c); }
  const double* component(int c) const { return data_.data() + offset(c); }

  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

  double max_abs() const;

 private:
  std::size_t offset(int c) const { return static_cast<std::size_t>(c) * grid_.size(); }

  Grid grid_;
  int components_ = 0;
  std::vector<double> data_;
};

}  // namespace ferro
