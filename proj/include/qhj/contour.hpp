#pragma once

#include <vector>

#include "qhj/momentum.hpp"

namespace qhj {

/// Positively oriented ellipse in the complex plane with sample-doubling
/// quadrature controls.  samples is the initial count (>= 16, rounded up
/// to a power of two).
struct Contour {
  Complex center{0.0, 0.0};
  double radius_x = 1.0;
  double radius_y = 1.0;
  int samples = 32;
};

struct QuadratureResult {
  Complex value{0.0, 0.0};
  int samples_used = 0;
  bool converged = false;
};

/// Trapezoid rule on the ellipse parametrization, doubling samples until
/// two successive refinements agree to 1e-11 absolute or 2^16 samples are
/// reached (the trapezoid rule is spectrally accurate on periodic
/// analytic integrands).  Summation is fixed-order, so the value is
/// reproducible bit for bit for a given sample count.
QuadratureResult integrate_closed(const ComplexFn& f, const Contour& c);

/// Approximate minimum distance from a point to the contour curve.
double min_distance_to(const Contour& c, Complex point);

bool encloses(const Contour& c, Complex point);

/// Contour for action integrals: a circle centred at the pole centroid
/// with radius 1.5 x (max pole distance) + 1 for xi and rho, and the
/// ellipse (2.0, 0.75) for x so that the boundary poles at +-1 are kept
/// inside.
Contour auto_contour(const MomentumFunction& p);

struct ActionResult {
  Complex J_over_hbar{0.0, 0.0};
  int target = 0;
  double deviation = 0.0;  // |J/hbar - target|
  int samples_used = 0;
  bool converged = false;  // deviation and |Im(J/hbar)| both below tol
};

/// J/hbar = sign * (1/2pi) closed-contour integral of p.  For the
/// periodic phi coordinate the integral is the real period average
/// instead.  An explicit contour must keep distance >= 0.05 from every
/// declared pole and enclose all of them; the auto contour is retried
/// once with enlarged radii before failing.
ActionResult action_variable(const MomentumFunction& p, double tol = 1e-8);
ActionResult action_variable(const MomentumFunction& p, const Contour& c, double tol = 1e-8);

/// (1/2pi i) x integral of f over a small circle about a simple pole.
Complex residue_at(const ComplexFn& f, Complex pole, double radius);

/// Same, but rejects a radius that reaches another declared pole of p.
Complex residue_at(const MomentumFunction& p, Complex pole, double radius);

/// Argument principle: nearest integer to (1/2pi i) x integral of f'/f,
/// i.e. the number of zeros minus poles enclosed.  Throws if the
/// quadrature lands farther than 0.2 from an integer.
int count_zeros_and_poles(const ComplexFn& f, const ComplexFn& f_derivative,
                          const Contour& c);

struct NodeReport {
  std::vector<double> nodes;      // node-pole locations, sorted
  std::vector<double> antinodes;  // zeros of p on the closed physical domain
  int net_winding = 0;            // Z - P from the argument principle
  bool counts_consistent = false;
};

/// Nodes and anti-nodes of the underlying wave function, with the counts
/// cross-checked against the argument principle over a contour that
/// encloses every declared pole and numerator zero.
NodeReport nodes_and_antinodes(const MomentumFunction& p);

}  // namespace qhj
