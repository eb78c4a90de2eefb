#pragma once

#include "ferro/field.hpp"

namespace ferro {

// coeff_out(xi) = i * xi_axis * coeff_in(xi); axis is 0 or 1.
SpectralField derivative(const SpectralField& f, int axis);

// Gradient of a scalar field: (d1 f, d2 f).
SpectralField gradient(const SpectralField& f);

// Divergence of a two-component field.
SpectralField divergence(const SpectralField& v);

// coeff_out(xi) = -coeff_in(xi)/|xi|^2, zero mode mapped to zero.
SpectralField inverse_laplacian(const SpectralField& f);

// P = I - Q per mode; the zero mode is left unchanged.
SpectralField leray_project(const SpectralField& v);

// Q v = (xi xi^T / |xi|^2) v per mode; the zero mode is mapped to zero.
SpectralField q_project(const SpectralField& v);

// Scalar curl of a two-component field: d1 v2 - d2 v1.
SpectralField curl2d(const SpectralField& v);

// Rotated gradient of a scalar: (d2 w, -d1 w).
SpectralField perp_grad(const SpectralField& w);

// Zero all coefficients with |xi| > radius, and the mean mode.
SpectralField jn_truncate(SpectralField f, double radius);

// Zero coefficients with |k1| > fraction*n1/2 or |k2| > fraction*n2/2.
SpectralField dealias(SpectralField f);

// Pointwise physical product a*b transformed back to coefficients and
// dealiased. Scalar*scalar, or scalar*vector (componentwise).
SpectralField product_dealias(const SpectralField& a, const SpectralField& b);

// Same product formed from already-transformed physical samples.
SpectralField product_dealias(const PhysicalField& a, const PhysicalField& b);

// Advection u.grad(f) for two-component u and scalar or vector f, dealiased.
SpectralField advect(const SpectralField& u, const SpectralField& f);

// Single component of a multi-component field as a scalar field.
SpectralField component_field(const SpectralField& f, int c);

// Scalar cross product a1*b2 - a2*b1 of two-component fields, dealiased.
SpectralField cross2d(const SpectralField& a, const SpectralField& b);

}  // namespace ferro
