#pragma once

#include <array>

#include "ferro/field.hpp"

namespace ferro {

// Applied magnetic source F entering div(H + M) = F. Three shapes:
//   none:          F = 0
//   decaying_mode: F(t,x) = sqrt(K) (1+t)^{-(1+eta_decay)/2} cos(mode.x),
//                  so ||F(t)||_{L2}^2 = (K/2) L^2 (1+t)^{-(1+eta_decay)}
//   field:         a fixed spectral profile, constant in time
struct ForcingSpec {
  enum class Kind { none, decaying_mode, field };

  Kind kind = Kind::none;
  double amplitude = 1.0;   // K
  double eta_decay = 0.5;   // exponent in (0,1)
  std::array<int, 2> mode = {1, 0};
  SpectralField profile;    // Kind::field only

  static ForcingSpec make_none() { return {}; }
  static ForcingSpec make_decaying_mode(double k_amp, double eta_dec,
                                        std::array<int, 2> mode);
  static ForcingSpec make_field(SpectralField profile);

  bool active() const { return kind != Kind::none; }

  // Scalar F at time t on grid g; zero-mean by construction.
  SpectralField evaluate(const Grid& g, double t) const;
  // Time derivative of F at time t.
  SpectralField evaluate_dt(const Grid& g, double t) const;
};

}  // namespace ferro
