#include "doctest.h"
#include "ferro/errors.hpp"
#include "ferro/field.hpp"
#include "support/helpers.hpp"

using namespace ferro;

TEST_CASE("wavenumbers follow FFT index order") {
  const Grid g(8, 8, 2.0 * std::numbers::pi);
  CHECK(g.k1(0) == 0);
  CHECK(g.k1(3) == 3);
  CHECK(g.k1(4) == -4);
  CHECK(g.k1(7) == -1);
  CHECK(g.xi1(1) == doctest::Approx(1.0));
  CHECK(g.xi1(7) == doctest::Approx(-1.0));
}

TEST_CASE("physical wavevector scales with the box length") {
  const Grid g(16, 16, 4.0 * std::numbers::pi);
  CHECK(g.xi1(1) == doctest::Approx(0.5));
  CHECK(g.xi_min() == doctest::Approx(0.5));
  CHECK(g.xi_norm2(1, 2) == doctest::Approx(0.25 + 1.0));
}

TEST_CASE("corner mode sets the spectral radius") {
  const Grid g(16, 8, 2.0 * std::numbers::pi);
  // Largest magnitudes are |k1| = 8 and |k2| = 4.
  CHECK(g.xi_max() == doctest::Approx(std::sqrt(64.0 + 16.0)));
}

TEST_CASE("grid construction rejects bad shapes") {
  CHECK_THROWS_AS(Grid(7, 8, 1.0), Error);
  CHECK_THROWS_AS(Grid(8, 8, -1.0), Error);
  CHECK_THROWS_AS(Grid(4, 8, 1.0), Error);
}

TEST_CASE("sample positions cover [0, L)") {
  const Grid g(8, 8, 2.0);
  CHECK(g.x1(0) == 0.0);
  CHECK(g.x1(4) == doctest::Approx(1.0));
  CHECK(g.x1(7) == doctest::Approx(1.75));
  CHECK(g.dx_min() == doctest::Approx(0.25));
}

TEST_CASE("field arithmetic is componentwise") {
  const Grid g(8, 8, 1.0);
  SpectralField a(g, 2), b(g, 2);
  testutil::add_mode(a, 0, 1, 0, {1.0, 0.0});
  testutil::add_mode(b, 0, 1, 0, {0.0, 2.0});
  testutil::add_mode(b, 1, 2, 1, {1.0, 1.0});
  SpectralField c = a + b;
  CHECK(std::abs(testutil::mode_of(c, 0, 1, 0) -
                 std::complex<double>{1.0, 2.0}) < 1e-15);
  c -= b;
  CHECK(testutil::max_coeff_diff(c, a) < 1e-15);
  c = 2.0 * a;
  CHECK(std::abs(testutil::mode_of(c, 0, 1, 0) -
                 std::complex<double>{2.0, 0.0}) < 1e-15);
  CHECK(c.max_abs() == doctest::Approx(2.0));
  CHECK(!c.is_zero());
  CHECK(SpectralField(g, 2).is_zero());
}

TEST_CASE("mismatched shapes are rejected") {
  const Grid g1(8, 8, 1.0), g2(16, 8, 1.0);
  SpectralField a(g1, 1), b(g2, 1), c(g1, 2);
  CHECK_THROWS_AS(a += b, Error);
  CHECK_THROWS_AS(a += c, Error);
}
