#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace qhj {

using Complex = std::complex<double>;
using ComplexFn = std::function<Complex(Complex)>;

struct MomentumFunction;

/// Coefficients of the complex nonlinear Riccati equation
///
///   dp/dq = P(q) + Q(q) p + R(q) p^2
///
/// on an open real interval where R is non-zero and differentiable.
struct RiccatiCoefficients {
  ComplexFn P;
  ComplexFn Q;
  ComplexFn R;
  ComplexFn R_derivative;
  double domain_lo = 0.0;
  double domain_hi = 0.0;
};

/// Builds a coefficient record and checks R against zero at sample points
/// across (lo, hi).  Throws std::invalid_argument if R vanishes.
RiccatiCoefficients make_riccati(ComplexFn P, ComplexFn Q, ComplexFn R,
                                 ComplexFn R_derivative, double lo, double hi);

/// The linearizing substitution p = -(1/R) u'/u turns the Riccati equation
/// into  u'' - T u' + S u = 0  with S = P R and T = Q + R'/R.
struct LinearForm {
  ComplexFn S;
  ComplexFn T;
};

LinearForm derive_linear_form(const RiccatiCoefficients& coeffs);

struct ResidualReport {
  std::vector<double> grid;
  std::vector<Complex> residuals;  // dp/dq - (P + Q p + R p^2) per point
  double sup_norm = 0.0;
};

/// Substitutes a candidate momentum function (with its closed-form
/// derivative) into the Riccati equation on a real grid.  Grid points
/// must stay at distance >= 1e-3 from every declared pole of p; a closer
/// point is rejected with a message naming it.
ResidualReport riccati_residual(const RiccatiCoefficients& coeffs,
                                const MomentumFunction& p,
                                std::span<const double> grid);

/// Independent reconstruction of the momentum function from the
/// wave-function side:  p(q) = -(1/R(q)) u'(q)/u(q).
/// Throws std::domain_error when |u(q)| < 1e-13 (evaluation at a node).
Complex log_derivative_oracle(const std::function<Complex(double)>& u,
                              const std::function<Complex(double)>& u_derivative,
                              const ComplexFn& R, double q);

}  // namespace qhj
