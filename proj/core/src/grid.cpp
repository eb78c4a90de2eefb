#include "ferro/grid.hpp"

#include <cmath>

#include "ferro/errors.hpp"

namespace ferro {

Grid::Grid(int n1_, int n2_, double length_, double dealias_fraction_)
    : n1(n1_), n2(n2_), length(length_), dealias_fraction(dealias_fraction_) {
  if (n1 < 8 || n2 < 8) throw Error("grid: n1 and n2 must be at least 8");
  if (n1 % 2 != 0 || n2 % 2 != 0) throw Error("grid: n1 and n2 must be even");
  if (!(length > 0.0)) throw Error("grid: box length must be positive");
  if (!(dealias_fraction > 0.0) || dealias_fraction > 1.0)
    throw Error("grid: dealias fraction must lie in (0, 1]");
}

double Grid::xi_max() const {
  const double a = 2.0 * std::numbers::pi / length * (n1 / 2);
  const double b = 2.0 * std::numbers::pi / length * (n2 / 2);
  return std::hypot(a, b);
}

}  // namespace ferro
