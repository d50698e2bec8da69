"""Quantum Hamilton-Jacobi toolkit.

Momentum functions with exact pole sets, Riccati verification,
contour-integrated action variables and node reports for the 3D harmonic
oscillator and the hydrogen atom.  All momentum-function work happens in
adimensional variables with hbar = 1.
"""

from ._qhj import (
    ActionResult,
    Contour,
    MomentumFunction,
    NodeReport,
    OrthoPoly,
    Pole,
    QuadratureResult,
    ResidualReport,
    RiccatiCoefficients,
    RootSet,
    Spectrum,
    WaveFunction,
    action_variable,
    auto_contour,
    count_zeros_and_poles,
    ho_momentum,
    ho_spectrum,
    ho_wave,
    hydrogen_energy_of_action,
    hydrogen_p_phi,
    hydrogen_p_rho,
    hydrogen_p_theta,
    hydrogen_p_x,
    hydrogen_radial_frequency,
    hydrogen_spectrum,
    hydrogen_wave_phi,
    hydrogen_wave_rho,
    hydrogen_wave_x,
    integrate_closed,
    log_derivative_oracle,
    nodes_and_antinodes,
    residue_at,
    riccati_residual,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
