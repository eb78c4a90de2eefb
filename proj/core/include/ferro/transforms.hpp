#pragma once

#include "ferro/field.hpp"

namespace ferro {

// Forward transform of real samples: divides by n1*n2 so a pure mode
// A*exp(i xi.x) yields the coefficient A at xi.
SpectralField forward_transform(const PhysicalField& f);

// Inverse transform back to real samples. Rejects coefficients whose
// Hermitian symmetry defect exceeds 1e-10 relative to the largest magnitude.
PhysicalField inverse_transform(const SpectralField& f);

// Largest |coeff(-xi) - conj(coeff(xi))| over all modes and components.
double hermitian_defect(const SpectralField& f);

// Symmetrize in place: coeff(xi) <- (coeff(xi) + conj(coeff(-xi)))/2.
void hermitian_symmetrize(SpectralField& f);

}  // namespace ferro
