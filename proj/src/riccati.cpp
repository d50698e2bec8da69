#include "qhj/riccati.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qhj/momentum.hpp"

namespace qhj {

RiccatiCoefficients make_riccati(ComplexFn P, ComplexFn Q, ComplexFn R,
                                 ComplexFn R_derivative, double lo, double hi) {
  RiccatiCoefficients c{std::move(P), std::move(Q), std::move(R),
                        std::move(R_derivative), lo, hi};
  // unbounded domains are sampled on a desk-scale window
  const double slo = std::isfinite(lo) ? lo : -10.0;
  const double shi = std::isfinite(hi) ? hi : 10.0;
  constexpr int kSamples = 32;  // even, so the domain midpoint is sampled
  for (int i = 1; i < kSamples; ++i) {
    const double q = slo + (shi - slo) * i / kSamples;  // interior points only
    if (std::abs(c.R(Complex(q, 0.0))) < 1e-13)
      throw std::invalid_argument("make_riccati: R vanishes inside the domain at q = " +
                                  std::to_string(q));
  }
  return c;
}

LinearForm derive_linear_form(const RiccatiCoefficients& coeffs) {
  LinearForm lf;
  lf.S = [P = coeffs.P, R = coeffs.R](Complex q) { return P(q) * R(q); };
  lf.T = [Q = coeffs.Q, R = coeffs.R, dR = coeffs.R_derivative](Complex q) {
    return Q(q) + dR(q) / R(q);
  };
  return lf;
}

ResidualReport riccati_residual(const RiccatiCoefficients& coeffs,
                                const MomentumFunction& p,
                                std::span<const double> grid) {
  constexpr double kPoleCutoff = 1e-3;
  ResidualReport report;
  report.grid.assign(grid.begin(), grid.end());
  report.residuals.reserve(grid.size());
  for (double q : grid) {
    if (q <= coeffs.domain_lo || q >= coeffs.domain_hi)
      throw std::invalid_argument("riccati_residual: grid point " + std::to_string(q) +
                                  " lies outside the coefficient domain");
    for (const Pole& pole : p.poles) {
      if (std::abs(Complex(q, 0.0) - pole.location) < kPoleCutoff)
        throw std::invalid_argument("riccati_residual: grid point " + std::to_string(q) +
                                    " is within 1e-3 of a pole at " +
                                    std::to_string(pole.location.real()));
    }
    const Complex z(q, 0.0);
    const Complex pv = p.evaluate(z);
    const Complex rhs = coeffs.P(z) + coeffs.Q(z) * pv + coeffs.R(z) * pv * pv;
    const Complex res = p.derivative(z) - rhs;
    report.residuals.push_back(res);
    report.sup_norm = std::max(report.sup_norm, std::abs(res));
  }
  return report;
}

Complex log_derivative_oracle(const std::function<Complex(double)>& u,
                              const std::function<Complex(double)>& u_derivative,
                              const ComplexFn& R, double q) {
  const Complex uq = u(q);
  if (std::abs(uq) < 1e-13)
    throw std::domain_error("log_derivative_oracle: u vanishes at q = " + std::to_string(q) +
                            " (evaluation at a node)");
  return -(1.0 / R(Complex(q, 0.0))) * (u_derivative(q) / uq);
}

}  // namespace qhj
