#pragma once

#include "ferro/field.hpp"

namespace ferro {

// Prognostic variables: velocity u (2), micro-rotation omega (scalar in 2D),
// magnetization m (2). The demagnetizing field is derived, never stored here.
struct FerroState {
  double t = 0.0;
  SpectralField u;
  SpectralField omega;
  SpectralField m;
};

inline FerroState zero_state(const Grid& g, double t = 0.0) {
  return FerroState{t, SpectralField(g, 2), SpectralField(g, 1),
                    SpectralField(g, 2)};
}

}  // namespace ferro
