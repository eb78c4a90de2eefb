#include "ferro/paraproduct.hpp"

#include <vector>

#include "ferro/errors.hpp"
#include "ferro/operators.hpp"
#include "ferro/transforms.hpp"

namespace ferro {

namespace {

void require_scalar_pair(const SpectralField& a, const SpectralField& b) {
  if (a.components() != 1 || b.components() != 1)
    throw Error("paraproduct: scalar fields expected");
  if (!(a.grid() == b.grid())) throw Error("paraproduct: grid mismatch");
}

std::vector<PhysicalField> physical_blocks(const SpectralField& f,
                                           const DyadicPartition& part) {
  std::vector<PhysicalField> blocks;
  blocks.reserve(part.j_max - part.j_min + 1);
  for (int j = part.j_min; j <= part.j_max; ++j)
    blocks.push_back(inverse_transform(dyadic_block(f, j, part)));
  return blocks;
}

void accumulate_product(PhysicalField& acc, const PhysicalField& a,
                        const PhysicalField& b) {
  double* pa = acc.component(0);
  const double* x = a.component(0);
  const double* y = b.component(0);
  for (std::size_t i = 0; i < acc.grid().size(); ++i) pa[i] += x[i] * y[i];
}

}  // namespace

SpectralField paraproduct(const SpectralField& a, const SpectralField& b,
                          const DyadicPartition& part) {
  require_scalar_pair(a, b);
  PhysicalField acc(a.grid(), 1);
  for (int j = part.j_min; j <= part.j_max; ++j) {
    const PhysicalField low = inverse_transform(low_cutoff(a, j - 1, part));
    const PhysicalField block = inverse_transform(dyadic_block(b, j, part));
    accumulate_product(acc, low, block);
  }
  return dealias(forward_transform(acc));
}

SpectralField paraproduct_prime(const SpectralField& a, const SpectralField& b,
                                const DyadicPartition& part) {
  require_scalar_pair(a, b);
  PhysicalField acc(a.grid(), 1);
  for (int j = part.j_min; j <= part.j_max; ++j) {
    const PhysicalField block = inverse_transform(dyadic_block(a, j, part));
    const PhysicalField low = inverse_transform(low_cutoff(b, j + 2, part));
    accumulate_product(acc, block, low);
  }
  return dealias(forward_transform(acc));
}

SpectralField remainder(const SpectralField& a, const SpectralField& b,
                        const DyadicPartition& part) {
  require_scalar_pair(a, b);
  const std::vector<PhysicalField> ba = physical_blocks(a, part);
  const std::vector<PhysicalField> bb = physical_blocks(b, part);
  const int count = part.j_max - part.j_min + 1;
  PhysicalField acc(a.grid(), 1);
  for (int ja = 0; ja < count; ++ja) {
    for (int nu = -1; nu <= 1; ++nu) {
      const int jb = ja + nu;
      if (jb < 0 || jb >= count) continue;
      accumulate_product(acc, ba[ja], bb[jb]);
    }
  }
  return dealias(forward_transform(acc));
}

}  // namespace ferro
