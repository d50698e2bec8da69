#pragma once

#include <string>
#include <vector>

#include "qhj/orthopoly.hpp"
#include "qhj/riccati.hpp"

namespace qhj {

enum class PoleKind {
  Node,      // root of the wave-function polynomial factor
  Boundary,  // x = +-1 for the polar coordinate
  Origin     // rho = 0 for the radial coordinate
};

struct Pole {
  Complex location;
  Complex residue;  // exact residue; 0 marks a removable point kept for bookkeeping
  PoleKind kind = PoleKind::Node;
};

/// A per-coordinate complex momentum function in the adimensional
/// variable (hbar = 1): its values, closed-form derivative, exact pole
/// set, the Riccati coefficients it satisfies, and the real zeros of its
/// numerator polynomial (the anti-node locations on the closed physical
/// domain).
struct MomentumFunction {
  std::string label;   // "xi" | "phi" | "x" | "rho"
  ComplexFn evaluate;
  ComplexFn derivative;
  std::vector<Pole> poles;
  RiccatiCoefficients riccati;
  RootSet numerator_zeros;

  double domain_lo = 0.0;  // open physical interval on the real axis
  double domain_hi = 0.0;

  int action_sign = +1;    // -1 for the x coordinate (dx = -sin(theta) dtheta)
  int action_target = 0;   // quantized J/hbar this function must integrate to
  bool periodic = false;   // phi: J is the real period average, not a complex contour
  bool identically_zero = false;  // phi with m = 0 and x with l = 0
};

}  // namespace qhj
