#pragma once

#include "ferro/dyadic.hpp"
#include "ferro/field.hpp"

namespace ferro {

// Plancherel L2 norm: sqrt(L^2 * sum over modes and components |coeff|^2).
double l2_norm(const SpectralField& f);

// Real L2 inner product, summed over components.
double l2_inner(const SpectralField& a, const SpectralField& b);

// Homogeneous Sobolev norm by direct summation of |xi|^{2s} |coeff|^2 * L^2
// over nonzero modes.
double sobolev_norm_direct(const SpectralField& f, double s);

// Homogeneous Sobolev inner product <a, b>_{H^s}.
double sobolev_inner(const SpectralField& a, const SpectralField& b, double s);

// Littlewood-Paley route: sqrt(sum_j 2^{2js} ||block_j f||_{L2}^2).
double sobolev_norm_lp(const SpectralField& f, double s,
                       const DyadicPartition& part);

// Inhomogeneous norm with weight (1+|xi|^2)^s.
double inhomogeneous_norm(const SpectralField& f, double s);

// L2 norm of the gradient, summed over components.
double grad_l2_norm(const SpectralField& f);

}  // namespace ferro
