#include "ferro/forcing.hpp"

#include <cmath>

#include "ferro/errors.hpp"

namespace ferro {

namespace {

// Place the amplitude of cos(mode.x) at the conjugate mode pair.
SpectralField cosine_mode(const Grid& g, std::array<int, 2> mode, double amp) {
  SpectralField f(g, 1);
  const int half1 = g.n1 / 2, half2 = g.n2 / 2;
  // Both the mode and its conjugate must be representable.
  if (std::abs(mode[0]) > half1 - 1 || std::abs(mode[1]) > half2 - 1)
    throw Error("forcing: mode not resolvable on this grid");
  const int ip1 = mode[0] >= 0 ? mode[0] : mode[0] + g.n1;
  const int ip2 = mode[1] >= 0 ? mode[1] : mode[1] + g.n2;
  const int im1 = -mode[0] >= 0 ? -mode[0] : -mode[0] + g.n1;
  const int im2 = -mode[1] >= 0 ? -mode[1] : -mode[1] + g.n2;
  f.at(0, ip1, ip2) += amp / 2.0;
  f.at(0, im1, im2) += amp / 2.0;
  return f;
}

}  // namespace

ForcingSpec ForcingSpec::make_decaying_mode(double k_amp, double eta_dec,
                                            std::array<int, 2> mode) {
  if (!(k_amp > 0.0)) throw Error("forcing: K must be positive");
  if (!(eta_dec > 0.0 && eta_dec < 1.0))
    throw Error("forcing: eta_decay must lie in (0, 1)");
  if (mode[0] == 0 && mode[1] == 0)
    throw Error("forcing: mode must be nonzero");
  ForcingSpec s;
  s.kind = Kind::decaying_mode;
  s.amplitude = k_amp;
  s.eta_decay = eta_dec;
  s.mode = mode;
  return s;
}

ForcingSpec ForcingSpec::make_field(SpectralField profile) {
  if (profile.components() != 1)
    throw Error("forcing: profile must be scalar");
  if (std::abs(profile.at(0, 0, 0)) >
      1e-12 * std::max(profile.max_abs(), 1.0))
    throw Error("forcing: profile must have zero mean");
  ForcingSpec s;
  s.kind = Kind::field;
  s.profile = std::move(profile);
  return s;
}

SpectralField ForcingSpec::evaluate(const Grid& g, double t) const {
  switch (kind) {
    case Kind::none:
      return SpectralField(g, 1);
    case Kind::decaying_mode: {
      const double a =
          std::sqrt(amplitude) * std::pow(1.0 + t, -(1.0 + eta_decay) / 2.0);
      return cosine_mode(g, mode, a);
    }
    case Kind::field:
      if (!(profile.grid() == g)) throw Error("forcing: profile grid mismatch");
      return profile;
  }
  throw Error("forcing: bad kind");
}

SpectralField ForcingSpec::evaluate_dt(const Grid& g, double t) const {
  switch (kind) {
    case Kind::none:
      return SpectralField(g, 1);
    case Kind::decaying_mode: {
      const double da = std::sqrt(amplitude) * (-(1.0 + eta_decay) / 2.0) *
                        std::pow(1.0 + t, -(3.0 + eta_decay) / 2.0);
      return cosine_mode(g, mode, da);
    }
    case Kind::field:
      return SpectralField(g, 1);
  }
  throw Error("forcing: bad kind");
}

}  // namespace ferro
