#include "ferro/field.hpp"

#include <cmath>

#include "ferro/errors.hpp"

namespace ferro {

namespace {
void check_compatible(const SpectralField& a, const SpectralField& b) {
  if (!(a.grid() == b.grid()) || a.components() != b.components())
    throw Error("field arithmetic: incompatible grids or component counts");
}
}  // namespace

SpectralField::SpectralField(const Grid& g, int components)
    : grid_(g), components_(components) {
  if (components != 1 && components != 2)
    throw Error("spectral field: component count must be 1 or 2");
  data_.assign(grid_.size() * components_, {0.0, 0.0});
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  check_compatible(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  check_compatible(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double a) {
  for (auto& v : data_) v *= a;
  return *this;
}

double SpectralField::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool SpectralField::is_zero() const {
  for (const auto& v : data_)
    if (v.real() != 0.0 || v.imag() != 0.0) return false;
  return true;
}

SpectralField operator+(SpectralField a, const SpectralField& b) {
  a += b;
  return a;
}

SpectralField operator-(SpectralField a, const SpectralField& b) {
  a -= b;
  return a;
}

SpectralField operator*(double a, SpectralField f) {
  f *= a;
  return f;
}

PhysicalField::PhysicalField(const Grid& g, int components)
    : grid_(g), components_(components) {
  if (components != 1 && components != 2)
    throw Error("physical field: component count must be 1 or 2");
  data_.assign(grid_.size() * components_, 0.0);
}

double PhysicalField::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::fabs(v));
  return m;
}

}  // namespace ferro
