#pragma once

#include "ferro/dyadic.hpp"
#include "ferro/field.hpp"

namespace ferro {

// Low-high paraproduct T_a b = sum_j S_{j-1} a * block_j b for scalar fields,
// with products formed in physical space and dealiased.
SpectralField paraproduct(const SpectralField& a, const SpectralField& b,
                          const DyadicPartition& part);

// Complementary form T'_b a = sum_j block_j a * S_{j+2} b, so that
// a*b = paraproduct(a, b) + paraproduct_prime(a, b) for zero-mean fields.
SpectralField paraproduct_prime(const SpectralField& a, const SpectralField& b,
                                const DyadicPartition& part);

// Remainder R(a, b) = sum over |nu| <= 1 of sum_j block_j a * block_{j+nu} b,
// so that a*b = T_a b + T_b a + R(a, b) for zero-mean fields.
SpectralField remainder(const SpectralField& a, const SpectralField& b,
                        const DyadicPartition& part);

}  // namespace ferro
