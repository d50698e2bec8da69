#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qhj/momentum.hpp"

namespace qhj {

// Quantum numbers.  All momentum-function work happens in the paper-style
// adimensional variables with hbar = 1; dimensional constants enter only
// through the spectrum formulas below.

struct HOQuantumNumbers {
  std::array<int, 3> n{0, 0, 0};
  std::array<double, 3> omega{1.0, 1.0, 1.0};
};

struct HydrogenQuantumNumbers {
  int n = 1;
  int ell = 0;
  int m = 0;
  double mass = 1.0;
  double k = 1.0;  // Coulomb strength e1*e2
};

/// Throw std::invalid_argument naming the violated constraint.
void validate(const HOQuantumNumbers& q);
void validate(const HydrogenQuantumNumbers& q);

// Riccati coefficient triples per coordinate.  The quantized parameter is
// exposed as a continuous argument so tests can perturb it away from its
// eigenvalue (negative controls); the momentum builders pass the exact
// quantized value.
RiccatiCoefficients ho_riccati(double kappa_bar);                        // kappa_bar = 2n+1
RiccatiCoefficients hydrogen_phi_riccati(double kappa_bar_phi);          // kappa_bar_phi = m^2
RiccatiCoefficients hydrogen_x_riccati(double kappa_bar_theta, int m_abs);  // kappa_bar_theta = l(l+1)
RiccatiCoefficients hydrogen_rho_riccati(double lambda, int ell);        // lambda = n

// Momentum functions with exact pole/residue data.

/// p(xi) = -i [ xi - H_{n+1}(xi)/H_n(xi) ]; n simple poles at the roots of
/// H_n, residue -i each.
MomentumFunction ho_momentum(int n);

/// p(phi) = m, a constant of motion; no poles.
MomentumFunction hydrogen_p_phi(int m);

/// p(x) = i [ -l x/(1-x^2) + ((l+|m|)/(1-x^2)) Q_{l-1,|m|}(x)/Q_{l,|m|}(x) ]
/// in the reduced-polynomial representation; l-|m| interior node poles of
/// residue +i plus boundary poles at x = +-1 of residue i|m|/2 each
/// (removable when m = 0, kept in the list for bookkeeping).
MomentumFunction hydrogen_p_x(int ell, int m);

/// p(rho) = i [ 1/2 - l/rho + L_{n-l-2}^{2l+2}(rho)/L_{n-l-1}^{2l+1}(rho) ];
/// n-l-1 node poles of residue -i plus, for l >= 1, an origin pole of
/// residue -il.
MomentumFunction hydrogen_p_rho(int n, int ell);

/// theta-form evaluation p_theta = sin(theta) * p_x(cos theta) (hbar = 1).
Complex hydrogen_p_theta(const MomentumFunction& p_x, double theta);

// Closed-form eigenfunctions (leading constants fixed to 1), used by the
// log-derivative oracle, the linear-form checks and the figure data.
struct WaveFunction {
  std::function<Complex(double)> value;
  std::function<Complex(double)> derivative;
  std::function<Complex(double)> second_derivative;
};

WaveFunction ho_wave(int n);                    // H_n(xi) exp(-xi^2/2)
WaveFunction hydrogen_wave_phi(int m);          // exp(i m phi)
WaveFunction hydrogen_wave_x(int ell, int m);   // Q_{l,|m|}(x) (1-x^2)^{|m|/2}
WaveFunction hydrogen_wave_rho(int n, int ell); // exp(-rho/2) rho^l L_{n-l-1}^{2l+1}(rho)

// Spectra and angle variables.

struct Spectrum {
  double energy = 0.0;
  std::vector<std::pair<std::string, double>> actions;  // J per coordinate
  std::vector<std::pair<std::string, double>> angles;   // w per coordinate
};

/// E(J) closed forms with hbar explicit; hbar -> 0 at fixed J gives the
/// classical oscillator/Kepler relations.
double ho_energy_of_actions(const std::array<double, 3>& J,
                            const std::array<double, 3>& omega, double hbar);
double hydrogen_energy_of_action(double J_r, double mass, double k, double hbar);
double hydrogen_radial_frequency(double J_r, double mass, double k, double hbar);

Spectrum ho_spectrum(const HOQuantumNumbers& q, double hbar = 1.0);
Spectrum hydrogen_spectrum(const HydrogenQuantumNumbers& q, double hbar = 1.0);

/// Central finite difference of the closed-form E(J) against the analytic
/// angle variable; returns |fd - w|.  delta must lie in (0, hbar/10].
double angle_variable_fd_check_ho(const HOQuantumNumbers& q, int axis,
                                  double delta, double hbar = 1.0);
double angle_variable_fd_check_hydrogen(const HydrogenQuantumNumbers& q,
                                        double delta, double hbar = 1.0);

}  // namespace qhj
