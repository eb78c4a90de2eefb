#include <cmath>
#include <random>

#include "doctest.h"
#include "ferro/dyadic.hpp"
#include "ferro/errors.hpp"
#include "ferro/norms.hpp"
#include "ferro/random_fields.hpp"
#include "support/helpers.hpp"

using namespace ferro;

TEST_CASE("cutoff profile has the declared plateaus") {
  const DyadicPartition part = DyadicPartition::make(Grid(32, 32, 2.0));
  CHECK(part.chi(0.0) == 1.0);
  CHECK(part.chi(0.5) == 1.0);
  CHECK(part.chi(2.0) == 0.0);
  CHECK(part.chi(5.0) == 0.0);
  const double mid = part.chi(1.0);
  CHECK(mid > 0.0);
  CHECK(mid < 1.0);
  // monotone decreasing on the glue region
  CHECK(part.chi(0.7) >= part.chi(1.3));
}

TEST_CASE("block profiles are supported in their annuli") {
  const DyadicPartition part = DyadicPartition::make(Grid(64, 64, 2.0 * std::numbers::pi));
  for (int j = part.j_min; j <= part.j_max; ++j) {
    const double lo = std::ldexp(1.0, j - 1);
    const double hi = std::ldexp(1.0, j + 2);
    CHECK(part.phi(j, lo * 0.99) == 0.0);
    CHECK(part.phi(j, hi * 1.01) == 0.0);
    CHECK(part.phi(j, std::ldexp(1.0, j)) > 0.0);
  }
}

TEST_CASE("at most three blocks overlap anywhere") {
  const DyadicPartition part = DyadicPartition::make(Grid(64, 64, 2.0 * std::numbers::pi));
  for (double r = 0.3; r < 50.0; r *= 1.07) {
    int live = 0;
    for (int j = part.j_min; j <= part.j_max; ++j)
      if (part.phi(j, r) > 0.0) ++live;
    CHECK(live <= 3);
  }
}

TEST_CASE("block profiles sum to one on the resolved annulus") {
  const Grid g(64, 64, 2.0 * std::numbers::pi);
  const DyadicPartition part = DyadicPartition::make(g);
  // telescoping: sum_j phi_j = chi(xi/2^{j_max+1}) - chi(xi/2^{j_min});
  // both ends sit on their plateaus for every resolved nonzero mode
  for (int i1 = 0; i1 < g.n1; ++i1)
    for (int i2 = 0; i2 < g.n2; ++i2) {
      if (i1 == 0 && i2 == 0) continue;
      const double r = std::sqrt(g.xi_norm2(i1, i2));
      double total = 0.0;
      for (int j = part.j_min; j <= part.j_max; ++j) total += part.phi(j, r);
      CHECK(std::abs(total - 1.0) < 1e-14);
    }
}

TEST_CASE("blocks reassemble the field exactly") {
  const Grid g(32, 32, 2.0 * std::numbers::pi);
  const DyadicPartition part = DyadicPartition::make(g);
  std::mt19937_64 rng(3);
  const SpectralField f = random_band_limited(g, 1, 15, 1.0, rng);
  SpectralField sum(g, 1);
  for (int j = part.j_min; j <= part.j_max; ++j)
    sum += dyadic_block(f, j, part);
  CHECK(testutil::max_coeff_diff(sum, f) < 1e-13);
}

TEST_CASE("index range covers the box modes and the grid corner") {
  const Grid g(128, 128, 2.0 * std::numbers::pi);
  const DyadicPartition part = DyadicPartition::make(g);
  // lowest mode |xi| = 1 needs j_min <= 0; corner |xi| = 64 sqrt(2) needs
  // j_max >= 7
  CHECK(part.j_min <= 0);
  CHECK(part.j_max >= 7);
  CHECK_THROWS_AS((void)dyadic_block(SpectralField(g, 1), part.j_min - 1, part),
                  Error);
  CHECK_THROWS_AS((void)dyadic_block(SpectralField(g, 1), part.j_max + 1, part),
                  Error);
}

TEST_CASE("range shifts with the box size") {
  const DyadicPartition small_box =
      DyadicPartition::make(Grid(32, 32, 2.0 * std::numbers::pi));
  const DyadicPartition big_box =
      DyadicPartition::make(Grid(32, 32, 64.0 * std::numbers::pi));
  // xi_min drops from 1 to 1/32, so the range must extend five octaves lower.
  CHECK(big_box.j_min == small_box.j_min - 5);
}

TEST_CASE("low cutoff is a spectral projection below the scale") {
  const Grid g(32, 32, 2.0 * std::numbers::pi);
  const DyadicPartition part = DyadicPartition::make(g);
  SpectralField f(g, 1);
  testutil::add_mode(f, 0, 2, 0, {1.0, 0.0});   // |xi| = 2
  testutil::add_mode(f, 0, 0, 12, {1.0, 0.0});  // |xi| = 12
  const SpectralField low = low_cutoff(f, 2, part);  // chi(|xi|/4)
  CHECK(std::abs(testutil::mode_of(low, 0, 2, 0)) ==
        doctest::Approx(1.0));  // 2/4 <= 1/2: kept
  CHECK(std::abs(testutil::mode_of(low, 0, 0, 12)) < 1e-14);  // 12/4 >= 2
  const double mid = std::abs(testutil::mode_of(low_cutoff(f, 4, part), 0, 0, 12));
  CHECK(mid > 0.0);  // 12/16 sits inside the glue region
  CHECK(mid < 1.0);
}
