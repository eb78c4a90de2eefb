#include "ferro/transforms.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>
#include <vector>

#include "ferro/errors.hpp"

namespace ferro {

namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// Plan creation is not thread safe in FFTW; execution through the new-array
// interface is. Plans are created once per grid shape with FFTW_UNALIGNED so
// they apply to any caller buffer.
PlanPair& plans_for(int n1, int n2) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, PlanPair> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(n1, n2);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<std::complex<double>> scratch(static_cast<std::size_t>(n1) * n2);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  PlanPair p;
  p.forward = fftw_plan_dft_2d(n1, n2, buf, buf, FFTW_FORWARD,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.backward = fftw_plan_dft_2d(n1, n2, buf, buf, FFTW_BACKWARD,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p.forward || !p.backward) throw Error("fftw plan creation failed");
  return cache.emplace(key, p).first->second;
}

}  // namespace

SpectralField forward_transform(const PhysicalField& f) {
  const Grid& g = f.grid();
  SpectralField out(g, f.components());
  const double scale = 1.0 / static_cast<double>(g.size());
  PlanPair& plans = plans_for(g.n1, g.n2);
  std::vector<std::complex<double>> buf(g.size());
  for (int c = 0; c < f.components(); ++c) {
    const double* src = f.component(c);
    for (std::size_t i = 0; i < g.size(); ++i) buf[i] = {src[i], 0.0};
    auto* raw = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_execute_dft(plans.forward, raw, raw);
    std::complex<double>* dst = out.component(c);
    for (std::size_t i = 0; i < g.size(); ++i) dst[i] = buf[i] * scale;
  }
  // The c2c transform leaves roundoff-sized asymmetry on real input. Pin the
  // output to exact Hermitian symmetry: multiplier algebra then preserves it
  // exactly, so even fields that are pure cancellation residue stay valid
  // inputs for the inverse transform's symmetry guard.
  hermitian_symmetrize(out);
  return out;
}

double hermitian_defect(const SpectralField& f) {
  const Grid& g = f.grid();
  double worst = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    const std::complex<double>* d = f.component(c);
    for (int i1 = 0; i1 < g.n1; ++i1) {
      const int p1 = (g.n1 - i1) % g.n1;
      for (int i2 = 0; i2 < g.n2; ++i2) {
        const int p2 = (g.n2 - i2) % g.n2;
        const std::complex<double> defect =
            d[g.index(p1, p2)] - std::conj(d[g.index(i1, i2)]);
        worst = std::max(worst, std::abs(defect));
      }
    }
  }
  return worst;
}

void hermitian_symmetrize(SpectralField& f) {
  const Grid& g = f.grid();
  for (int c = 0; c < f.components(); ++c) {
    std::complex<double>* d = f.component(c);
    for (int i1 = 0; i1 < g.n1; ++i1) {
      const int p1 = (g.n1 - i1) % g.n1;
      for (int i2 = 0; i2 < g.n2; ++i2) {
        const int p2 = (g.n2 - i2) % g.n2;
        const std::size_t a = g.index(i1, i2), b = g.index(p1, p2);
        if (b < a) continue;
        const std::complex<double> mean =
            0.5 * (d[a] + std::conj(d[b]));
        d[a] = mean;
        d[b] = std::conj(mean);
      }
    }
  }
}

PhysicalField inverse_transform(const SpectralField& f) {
  const Grid& g = f.grid();
  const double defect = hermitian_defect(f);
  const double scale = f.max_abs();
  if (defect > 1e-10 * (scale > 0.0 ? scale : 1.0)) {
    std::ostringstream msg;
    msg << "inverse transform: Hermitian symmetry defect " << defect
        << " exceeds 1e-10 relative to peak magnitude " << scale;
    throw Error(msg.str());
  }
  PhysicalField out(g, f.components());
  PlanPair& plans = plans_for(g.n1, g.n2);
  std::vector<std::complex<double>> buf(g.size());
  for (int c = 0; c < f.components(); ++c) {
    const std::complex<double>* src = f.component(c);
    for (std::size_t i = 0; i < g.size(); ++i) buf[i] = src[i];
    auto* raw = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_execute_dft(plans.backward, raw, raw);
    double* dst = out.component(c);
    for (std::size_t i = 0; i < g.size(); ++i) dst[i] = buf[i].real();
  }
  return out;
}

}  // namespace ferro
