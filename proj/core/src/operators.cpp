#include "ferro/operators.hpp"

#include <cmath>
#include <complex>

#include "ferro/errors.hpp"
#include "ferro/transforms.hpp"

namespace ferro {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};

void require_vector(const SpectralField& v, const char* op) {
  if (v.components() != 2)
    throw Error(std::string(op) + ": expected a two-component field");
}

void require_scalar(const SpectralField& f, const char* op) {
  if (f.components() != 1)
    throw Error(std::string(op) + ": expected a scalar field");
}
}  // namespace

SpectralField derivative(const SpectralField& f, int axis) {
  if (axis != 0 && axis != 1) throw Error("derivative: axis must be 0 or 1");
  const Grid& g = f.grid();
  SpectralField out(g, f.components());
  for (int c = 0; c < f.components(); ++c) {
    for (int i1 = 0; i1 < g.n1; ++i1) {
      for (int i2 = 0; i2 < g.n2; ++i2) {
        const double xi = axis == 0 ? g.xi1(i1) : g.xi2(i2);
        out.at(c, i1, i2) = kI * xi * f.at(c, i1, i2);
      }
    }
  }
  return out;
}

SpectralField gradient(const SpectralField& f) {
  require_scalar(f, "gradient");
  const Grid& g = f.grid();
  SpectralField out(g, 2);
  for (int i1 = 0; i1 < g.n1; ++i1) {
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const std::complex<double> v = f.at(0, i1, i2);
      out.at(0, i1, i2) = kI * g.xi1(i1) * v;
      out.at(1, i1, i2) = kI * g.xi2(i2) * v;
    }
  }
  return out;
}

SpectralField divergence(const SpectralField& v) {
  require_vector(v, "divergence");
  const Grid& g = v.grid();
  SpectralField out(g, 1);
  for (int i1 = 0; i1 < g.n1; ++i1) {
    for (int i2 = 0; i2 < g.n2; ++i2) {
      out.at(0, i1, i2) = kI * (g.xi1(i1) * v.at(0, i1, i2) +
                                g.xi2(i2) * v.at(1, i1, i2));
    }
  }
  return out;
}

SpectralField inverse_laplacian(const SpectralField& f) {
  const Grid& g = f.grid();
  SpectralField out(g, f.components());
  for (int c = 0; c < f.components(); ++c) {
    for (int i1 = 0; i1 < g.n1; ++i1) {
      for (int i2 = 0; i2 < g.n2; ++i2) {
        const double k2 = g.xi_norm2(i1, i2);
        out.at(c, i1, i2) = k2 > 0.0 ? -f.at(c, i1, i2) / k2
                                     : std::complex<double>{0.0, 0.0};
      }
    }
  }
  return out;
}

SpectralField q_project(const SpectralField& v) {
  require_vector(v, "q_project");
  const Grid& g = v.grid();
  SpectralField out(g, 2);
  for (int i1 = 0; i1 < g.n1; ++i1) {
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const double x1 = g.xi1(i1), x2 = g.xi2(i2);
      const double k2 = x1 * x1 + x2 * x2;
      if (k2 == 0.0) continue;
      const std::complex<double> dot =
          (x1 * v.at(0, i1, i2) + x2 * v.at(1, i1, i2)) / k2;
      out.at(0, i1, i2) = x1 * dot;
      out.at(1, i1, i2) = x2 * dot;
    }
  }
  return out;
}

SpectralField leray_project(const SpectralField& v) {
  require_vector(v, "leray_project");
  SpectralField out = v;
  out -= q_project(v);
  return out;
}

SpectralField curl2d(const SpectralField& v) {
  require_vector(v, "curl2d");
  const Grid& g = v.grid();
  SpectralField out(g, 1);
  for (int i1 = 0; i1 < g.n1; ++i1) {
    for (int i2 = 0; i2 < g.n2; ++i2) {
      out.at(0, i1, i2) = kI * (g.xi1(i1) * v.at(1, i1, i2) -
                                g.xi2(i2) * v.at(0, i1, i2));
    }
  }
  return out;
}

SpectralField perp_grad(const SpectralField& w) {
  require_scalar(w, "perp_grad");
  const Grid& g = w.grid();
  SpectralField out(g, 2);
  for (int i1 = 0; i1 < g.n1; ++i1) {
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const std::complex<double> v = w.at(0, i1, i2);
      out.at(0, i1, i2) = kI * g.xi2(i2) * v;
      out.at(1, i1, i2) = -kI * g.xi1(i1) * v;
    }
  }
  return out;
}

SpectralField jn_truncate(SpectralField f, double radius) {
  if (!(radius > 0.0)) throw Error("jn_truncate: radius must be positive");
  const Grid& g = f.grid();
  const double r2 = radius * radius;
  for (int c = 0; c < f.components(); ++c) {
    for (int i1 = 0; i1 < g.n1; ++i1) {
      for (int i2 = 0; i2 < g.n2; ++i2) {
        const double k2 = g.xi_norm2(i1, i2);
        if (k2 == 0.0 || k2 > r2) f.at(c, i1, i2) = 0.0;
      }
    }
  }
  return f;
}

SpectralField dealias(SpectralField f) {
  const Grid& g = f.grid();
  const double b1 = g.dealias_fraction * g.n1 / 2.0;
  const double b2 = g.dealias_fraction * g.n2 / 2.0;
  for (int c = 0; c < f.components(); ++c) {
    for (int i1 = 0; i1 < g.n1; ++i1) {
      const bool cut1 = std::abs(g.k1(i1)) > b1;
      for (int i2 = 0; i2 < g.n2; ++i2) {
        if (cut1 || std::abs(g.k2(i2)) > b2) f.at(c, i1, i2) = 0.0;
      }
    }
  }
  return f;
}

SpectralField product_dealias(const PhysicalField& a, const PhysicalField& b) {
  const Grid& g = a.grid();
  if (!(g == b.grid())) throw Error("product: grid mismatch");
  const bool a_scalar = a.components() == 1;
  const bool b_scalar = b.components() == 1;
  if (!a_scalar && !b_scalar)
    throw Error("product: at least one factor must be scalar");
  const int nc = a_scalar ? b.components() : a.components();
  PhysicalField prod(g, nc);
  for (int c = 0; c < nc; ++c) {
    const double* pa = a.component(a_scalar ? 0 : c);
    const double* pb = b.component(b_scalar ? 0 : c);
    double* pc = prod.component(c);
    for (std::size_t i = 0; i < g.size(); ++i) pc[i] = pa[i] * pb[i];
  }
  return dealias(forward_transform(prod));
}

SpectralField product_dealias(const SpectralField& a, const SpectralField& b) {
  if (a.is_zero() || b.is_zero()) {
    const bool a_scalar = a.components() == 1;
    return SpectralField(a.grid(), a_scalar ? b.components() : a.components());
  }
  return product_dealias(inverse_transform(a), inverse_transform(b));
}

SpectralField advect(const SpectralField& u, const SpectralField& f) {
  require_vector(u, "advect");
  if (u.is_zero() || f.is_zero()) return SpectralField(f.grid(), f.components());
  const PhysicalField pu = inverse_transform(u);
  PhysicalField pu1(u.grid(), 1), pu2(u.grid(), 1);
  for (std::size_t i = 0; i < u.grid().size(); ++i) {
    pu1.raw()[i] = pu.component(0)[i];
    pu2.raw()[i] = pu.component(1)[i];
  }
  SpectralField out = product_dealias(pu1, inverse_transform(derivative(f, 0)));
  out += product_dealias(pu2, inverse_transform(derivative(f, 1)));
  return out;
}

SpectralField component_field(const SpectralField& f, int c) {
  if (c < 0 || c >= f.components())
    throw Error("component_field: component index out of range");
  SpectralField out(f.grid(), 1);
  const std::complex<double>* src = f.component(c);
  for (std::size_t i = 0; i < f.grid().size(); ++i) out.raw()[i] = src[i];
  return out;
}

SpectralField cross2d(const SpectralField& a, const SpectralField& b) {
  require_vector(a, "cross2d");
  require_vector(b, "cross2d");
  if (!(a.grid() == b.grid())) throw Error("cross2d: grid mismatch");
  if (a.is_zero() || b.is_zero()) return SpectralField(a.grid(), 1);
  SpectralField out = product_dealias(component_field(a, 0), component_field(b, 1));
  out -= product_dealias(component_field(a, 1), component_field(b, 0));
  return out;
}

}  // namespace ferro
