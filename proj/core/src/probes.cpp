#include "ferro/probes.hpp"

#include <algorithm>
#include <cmath>

#include "ferro/errors.hpp"
#include "ferro/magnetostatics.hpp"
#include "ferro/norms.hpp"
#include "ferro/operators.hpp"
#include "ferro/paraproduct.hpp"
#include "ferro/random_fields.hpp"

namespace ferro {

namespace {

void require_solenoidal(const SpectralField& v, const char* who) {
  if (v.components() != 2)
    throw Error(std::string(who) + ": v must have two components");
  const double defect = l2_norm(divergence(v));
  const double scale = grad_l2_norm(v);
  if (defect > 1e-10 * std::max(scale, 1.0))
    throw Error(std::string(who) + ": v is not divergence free");
}

void require_zero_mean(const SpectralField& f, const char* who) {
  double mean = 0.0;
  for (int c = 0; c < f.components(); ++c)
    mean = std::max(mean, std::abs(f.at(c, 0, 0)));
  if (mean > 1e-12 * std::max(f.max_abs(), 1.0))
    throw Error(std::string(who) + ": field has nonzero mean");
}

double safe_ratio(double lhs, double rhs) {
  return rhs != 0.0 ? lhs / rhs : 0.0;
}

const SpectralField& pick(const SpectralField* f, const char* kind,
                          const char* name) {
  if (f == nullptr)
    throw Error(std::string("inequality_probe: kind '") + kind +
                "' needs field '" + name + "'");
  return *f;
}

InequalityReport lorentz_probe(const SpectralField& m, const SpectralField& f,
                               const SpectralField& u, double s, double eps) {
  InequalityReport r;
  r.kind = "lorentz";
  r.s = s;
  r.eps = eps;
  const MagnetoSolution sol = solve_h(m, f);
  r.lhs = sobolev_inner(advect(m, sol.h), u, s);

  const double m_l2 = l2_norm(m);
  const double grad_m_l2 = grad_l2_norm(m);
  const double grad_g_l2 = grad_l2_norm(sol.g_f);
  const double u_hs = sobolev_norm_direct(u, s);
  const double m_hs = sobolev_norm_direct(m, s);
  const double grad_u_hs = sobolev_norm_direct(u, s + 1.0);
  const double grad_m_hs = sobolev_norm_direct(m, s + 1.0);
  const double grad_g_hs = sobolev_norm_direct(sol.g_f, s + 1.0);
  r.terms = {{"m_l2", m_l2},           {"grad_m_l2", grad_m_l2},
             {"grad_g_l2", grad_g_l2}, {"u_hs", u_hs},
             {"m_hs", m_hs},           {"grad_u_hs", grad_u_hs},
             {"grad_m_hs", grad_m_hs}, {"grad_g_hs", grad_g_hs}};

  r.rhs = eps * (grad_u_hs * grad_u_hs + grad_m_hs * grad_m_hs) +
          (1.0 / eps) *
              ((1.0 + m_l2 * m_l2) * grad_m_l2 * grad_m_l2 +
               grad_g_l2 * grad_g_l2) *
              (u_hs * u_hs + m_hs * m_hs) +
          grad_g_hs * grad_g_hs;
  r.ratio = safe_ratio(r.lhs, r.rhs);
  return r;
}

InequalityReport m_cross_h_probe(const SpectralField& m, const SpectralField& f,
                                 const SpectralField& omega, double s,
                                 double eps) {
  InequalityReport r;
  r.kind = "m_cross_h";
  r.s = s;
  r.eps = eps;
  const MagnetoSolution sol = solve_h(m, f);
  r.lhs = sobolev_inner(cross2d(m, sol.h), omega, s);

  const double m_l2 = l2_norm(m);
  const double grad_m_l2 = grad_l2_norm(m);
  const double h_l2 = l2_norm(sol.h);
  const double grad_h_l2 = grad_l2_norm(sol.h);
  const double omega_hs = sobolev_norm_direct(omega, s);
  const double m_hs = sobolev_norm_direct(m, s);
  const double g_hs = sobolev_norm_direct(sol.g_f, s);
  const double grad_m_hs = sobolev_norm_direct(m, s + 1.0);
  const double grad_g_hs = sobolev_norm_direct(sol.g_f, s + 1.0);
  r.terms = {{"m_l2", m_l2},           {"grad_m_l2", grad_m_l2},
             {"h_l2", h_l2},           {"grad_h_l2", grad_h_l2},
             {"omega_hs", omega_hs},   {"m_hs", m_hs},
             {"g_hs", g_hs},           {"grad_m_hs", grad_m_hs},
             {"grad_g_hs", grad_g_hs}};

  r.rhs = eps * omega_hs * omega_hs + eps * grad_m_hs * grad_m_hs +
          0.5 * eps * grad_g_hs * grad_g_hs +
          (1.0 / eps) *
              (m_l2 * m_l2 * grad_m_l2 * grad_m_l2 +
               h_l2 * h_l2 * grad_h_l2 * grad_h_l2) *
              m_hs * m_hs +
          (1.0 / eps) * m_l2 * m_l2 * grad_m_l2 * grad_m_l2 * g_hs * g_hs;
  r.ratio = safe_ratio(r.lhs, r.rhs);
  return r;
}

// Block-localized commutator with the transport part of the paraproduct:
// || block_j(T_v w) - S_{j-1} v block_j w || against ||grad v|| times the
// L2 mass of w in blocks within distance 5 of j. Reports the worst block.
InequalityReport ts_probe(const SpectralField& v, const SpectralField& w,
                          double s, double eps, const DyadicPartition& part) {
  InequalityReport r;
  r.kind = "ts_commutator";
  r.s = s;
  r.eps = eps;
  const double grad_v = grad_l2_norm(v);
  const SpectralField tvw = paraproduct(v, w, part);

  std::vector<double> block_mass(part.j_max - part.j_min + 1, 0.0);
  for (int j = part.j_min; j <= part.j_max; ++j)
    block_mass[j - part.j_min] = l2_norm(dyadic_block(w, j, part));

  double worst = 0.0;
  int worst_j = part.j_min;
  double worst_lhs = 0.0, worst_rhs = 0.0;
  for (int j = part.j_min; j <= part.j_max; ++j) {
    SpectralField diff = dyadic_block(tvw, j, part);
    diff -= product_dealias(low_cutoff(v, j - 1, part),
                            dyadic_block(w, j, part));
    const double lhs = l2_norm(diff);
    double mass = 0.0;
    for (int q = std::max(part.j_min, j - 5);
         q <= std::min(part.j_max, j + 5); ++q)
      mass += block_mass[q - part.j_min];
    const double rhs = grad_v * mass;
    if (rhs > 0.0 && lhs / rhs > worst) {
      worst = lhs / rhs;
      worst_j = j;
      worst_lhs = lhs;
      worst_rhs = rhs;
    }
  }
  r.lhs = worst_lhs;
  r.rhs = worst_rhs;
  r.ratio = worst;
  r.terms = {{"grad_v_l2", grad_v}, {"worst_j", double(worst_j)}};
  return r;
}

// Weighted sum over blocks of the two paraproduct remainders that drive the
// higher-regularity energy estimate, against the dissipation-absorbing bound.
InequalityReport higreg_probe(const SpectralField& v, const SpectralField& w,
                              double s, double eps,
                              const DyadicPartition& part) {
  InequalityReport r;
  r.kind = "higreg";
  r.s = s;
  r.eps = eps;
  require_solenoidal(v, "inequality_probe[higreg]");

  // T'_{grad w} v = sum_q (block_q v).grad(S_{q+2} w), assembled once.
  SpectralField tprime(v.grid(), 1);
  for (int q = part.j_min; q <= part.j_max; ++q)
    tprime += advect(dyadic_block(v, q, part), low_cutoff(w, q + 2, part));

  double lhs = 0.0, i1_sum = 0.0, i2_sum = 0.0;
  for (int j = part.j_min; j <= part.j_max; ++j) {
    const SpectralField wj = dyadic_block(w, j, part);
    // T_v.grad(w_j) localizes to blocks within distance 3 of j.
    SpectralField transport(v.grid(), 1);
    for (int q = std::max(part.j_min, j - 3);
         q <= std::min(part.j_max, j + 3); ++q)
      transport += advect(low_cutoff(v, q - 1, part),
                          dyadic_block(wj, q, part));
    transport -= advect(low_cutoff(v, j - 1, part), wj);
    const double i1 = l2_inner(transport, wj);
    const double i2 = l2_inner(dyadic_block(tprime, j, part), wj);
    i1_sum += i1;
    i2_sum += i2;
    lhs += std::pow(2.0, 2.0 * j * s) * (i1 + i2);
  }
  r.lhs = lhs;

  const double grad_v_l2 = grad_l2_norm(v);
  const double grad_w_l2 = grad_l2_norm(w);
  const double v_hs = sobolev_norm_direct(v, s);
  const double w_hs = sobolev_norm_direct(w, s);
  const double grad_w_hs = sobolev_norm_direct(w, s + 1.0);
  r.terms = {{"grad_v_l2", grad_v_l2}, {"grad_w_l2", grad_w_l2},
             {"v_hs", v_hs},           {"w_hs", w_hs},
             {"grad_w_hs", grad_w_hs}, {"i1_sum", i1_sum},
             {"i2_sum", i2_sum}};
  r.rhs = (1.0 / eps) * (grad_v_l2 * grad_v_l2 * w_hs * w_hs +
                         grad_w_l2 * grad_w_l2 * v_hs * v_hs) +
          eps * grad_w_hs * grad_w_hs;
  r.ratio = safe_ratio(r.lhs, r.rhs);
  return r;
}

}  // namespace

double bernstein_ratio(const SpectralField& u, int j) {
  const double base = l2_norm(u);
  if (base == 0.0) throw Error("bernstein_ratio: zero field");
  return grad_l2_norm(u) / (std::pow(2.0, j) * base);
}

BernsteinReport bernstein_probe(int j, int trials, const DyadicPartition& part,
                                std::mt19937_64& rng) {
  const Grid& g = part.grid;
  const int half = std::min(g.n1, g.n2) / 2;
  if (std::pow(2.0, j + 2) > g.xi_min() * half)
    throw Error("bernstein_probe: block outer radius exceeds the grid");
  if (trials < 1) throw Error("bernstein_probe: trials must be >= 1");

  BernsteinReport rep;
  rep.j = j;
  rep.trials = trials;
  rep.min_ratio = 1e300;
  rep.max_ratio = 0.0;
  for (int t = 0; t < trials; ++t) {
    SpectralField f = random_band_limited(g, 1, half - 1, 1.0, rng);
    f = dyadic_block(f, j, part);
    const double r = bernstein_ratio(f, j);
    rep.min_ratio = std::min(rep.min_ratio, r);
    rep.max_ratio = std::max(rep.max_ratio, r);
  }
  return rep;
}

CommutatorReport commutator_probe(const SpectralField& v,
                                  const SpectralField& b, double theta) {
  if (!(theta > -1.0))
    throw Error("commutator_probe: theta must exceed -1");
  require_solenoidal(v, "commutator_probe");
  require_zero_mean(b, "commutator_probe");
  CommutatorReport r;
  r.theta = theta;
  r.lhs = sobolev_inner(advect(v, b), b, theta);
  r.rhs = grad_l2_norm(v) * sobolev_norm_direct(b, theta + 1.0) *
          sobolev_norm_direct(b, theta);
  r.ratio = safe_ratio(r.lhs, r.rhs);
  return r;
}

InequalityReport inequality_probe(const std::string& kind,
                                  const ProbeFields& fields, double s,
                                  double eps, const DyadicPartition& part) {
  if (!(s > 0.0 && s <= 4.0))
    throw Error("inequality_probe: s must lie in (0, 4]");
  if (!(eps > 0.0 && eps < 1.0))
    throw Error("inequality_probe: eps must lie in (0, 1)");
  const char* k = kind.c_str();
  if (kind == "lorentz")
    return lorentz_probe(pick(fields.m, k, "m"), pick(fields.f, k, "f"),
                         pick(fields.u, k, "u"), s, eps);
  if (kind == "m_cross_h")
    return m_cross_h_probe(pick(fields.m, k, "m"), pick(fields.f, k, "f"),
                           pick(fields.omega, k, "omega"), s, eps);
  if (kind == "ts_commutator")
    return ts_probe(pick(fields.v, k, "v"), pick(fields.w, k, "w"), s, eps,
                    part);
  if (kind == "higreg")
    return higreg_probe(pick(fields.v, k, "v"), pick(fields.w, k, "w"), s, eps,
                        part);
  throw Error("inequality_probe: unknown kind '" + kind + "'");
}

}  // namespace ferro
