// Momentum functions, pole/residue bookkeeping, spectra and angle
// variables for the two model systems.
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "qhj/systems.hpp"

using namespace qhj;

namespace {
constexpr Complex I{0.0, 1.0};

int count_kind(const MomentumFunction& p, PoleKind kind) {
  int c = 0;
  for (const Pole& pole : p.poles) c += (pole.kind == kind);
  return c;
}
}  // namespace

TEST_CASE("oscillator ground state: p = i xi, no poles") {
  const MomentumFunction p = ho_momentum(0);
  CHECK(p.poles.empty());
  for (double xi : {-1.4, 0.0, 0.35, 2.0})
    CHECK(std::abs(p.evaluate({xi, 0.0}) - I * xi) < 1e-14);
  CHECK(p.action_target == 0);
}

TEST_CASE("oscillator n = 3: poles at the H_3 roots with residue -i") {
  const MomentumFunction p = ho_momentum(3);
  REQUIRE(p.poles.size() == 3);
  const double expected[] = {-std::sqrt(1.5), 0.0, std::sqrt(1.5)};
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(p.poles[i].location - Complex(expected[i], 0.0)) < 1e-10);
    CHECK(std::abs(p.poles[i].residue - (-I)) < 1e-12);
    CHECK(p.poles[i].kind == PoleKind::Node);
  }
}

TEST_CASE("momentum functions are purely imaginary on the real axis") {
  for (double q : {-1.9, 0.4, 1.1}) {
    CHECK(std::abs(ho_momentum(4).evaluate({q, 0.0}).real()) < 1e-12);
  }
  for (double x : {-0.8, 0.1, 0.6}) {
    CHECK(std::abs(hydrogen_p_x(3, 1).evaluate({x, 0.0}).real()) < 1e-12);
  }
  for (double rho : {0.9, 3.3, 11.0}) {
    CHECK(std::abs(hydrogen_p_rho(5, 1).evaluate({rho, 0.0}).real()) < 1e-12);
  }
  // phi is the exception: real constant
  CHECK(std::abs(hydrogen_p_phi(2).evaluate({0.7, 0.0}) - Complex{2.0, 0.0}) == 0.0);
}

TEST_CASE("phi momentum is the constant m") {
  CHECK(std::abs(hydrogen_p_phi(0).evaluate({1.0, 0.0})) == 0.0);
  CHECK(hydrogen_p_phi(0).identically_zero);
  const MomentumFunction p = hydrogen_p_phi(-2);
  for (double phi : {0.0, 2.2, 6.1})
    CHECK(std::abs(p.evaluate({phi, 0.0}) - Complex{-2.0, 0.0}) == 0.0);
  CHECK(p.poles.empty());
  CHECK(std::abs(p.derivative({1.0, 0.0})) == 0.0);
  CHECK(p.action_target == -2);
}

TEST_CASE("polar momentum with l = |m|: pure boundary-pole form") {
  const MomentumFunction p = hydrogen_p_x(2, 2);
  CHECK(count_kind(p, PoleKind::Node) == 0);
  CHECK(count_kind(p, PoleKind::Boundary) == 2);
  for (double x : {-0.5, 0.2, 0.8}) {
    const Complex want = -I * 2.0 * x / (1.0 - x * x);
    CHECK(std::abs(p.evaluate({x, 0.0}) - want) < 1e-13);
  }
  // boundary residue i|m|/2
  for (const Pole& pole : p.poles)
    CHECK(std::abs(pole.residue - I) < 1e-14);
}

TEST_CASE("polar momentum l = 3, m = 0: interior poles at the P_3 roots") {
  const MomentumFunction p = hydrogen_p_x(3, 0);
  std::vector<double> nodes;
  for (const Pole& pole : p.poles)
    if (pole.kind == PoleKind::Node) {
      nodes.push_back(pole.location.real());
      CHECK(std::abs(pole.residue - I) < 1e-12);
    }
  REQUIRE(nodes.size() == 3);
  CHECK(nodes[0] == doctest::Approx(-std::sqrt(0.6)).epsilon(1e-10));
  CHECK(nodes[1] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(nodes[2] == doctest::Approx(std::sqrt(0.6)).epsilon(1e-10));
  // m = 0 boundary entries are removable: residue 0
  for (const Pole& pole : p.poles)
    if (pole.kind == PoleKind::Boundary) CHECK(std::abs(pole.residue) == 0.0);
}

TEST_CASE("polar momentum l = 1, m = 0 reduces to i/x") {
  const MomentumFunction p = hydrogen_p_x(1, 0);
  for (double x : {-0.7, 0.25, 0.9})
    CHECK(std::abs(p.evaluate({x, 0.0}) - I / x) < 1e-13);
  REQUIRE(count_kind(p, PoleKind::Node) == 1);
}

TEST_CASE("theta-form evaluation p_theta = sin(theta) p_x(cos theta)") {
  const MomentumFunction p = hydrogen_p_x(1, 0);
  for (double theta : {0.4, 0.7, 2.3})
    CHECK(std::abs(hydrogen_p_theta(p, theta) - I * std::tan(theta)) < 1e-12);
}

TEST_CASE("radial momentum of nodeless states: p = i(1/2 - l/rho)") {
  for (int ell : {0, 1, 3}) {
    const MomentumFunction p = hydrogen_p_rho(ell + 1, ell);
    CHECK(count_kind(p, PoleKind::Node) == 0);
    CHECK(count_kind(p, PoleKind::Origin) == (ell >= 1 ? 1 : 0));
    for (double rho : {0.4, 2.0, 8.5})
      CHECK(std::abs(p.evaluate({rho, 0.0}) - I * (0.5 - double(ell) / rho)) < 1e-13);
  }
}

TEST_CASE("radial momentum n = 6, l = 0: five node poles at the L_5^1 roots") {
  const MomentumFunction p = hydrogen_p_rho(6, 0);
  REQUIRE(count_kind(p, PoleKind::Node) == 5);
  CHECK(count_kind(p, PoleKind::Origin) == 0);
  const OrthoPoly lag = OrthoPoly::laguerre(5, 1);
  for (const Pole& pole : p.poles) {
    CHECK(std::abs(lag.eval(pole.location)) < 1e-8);  // sits on a Laguerre root
    CHECK(std::abs(pole.residue - (-I)) < 1e-12);
  }
}

TEST_CASE("origin pole carries residue -i l") {
  const MomentumFunction p = hydrogen_p_rho(5, 2);
  bool found = false;
  for (const Pole& pole : p.poles)
    if (pole.kind == PoleKind::Origin) {
      found = true;
      CHECK(std::abs(pole.location) == 0.0);
      CHECK(std::abs(pole.residue - (-2.0 * I)) < 1e-14);
    }
  CHECK(found);
}

TEST_CASE("node poles coincide with wave-function zeros") {
  auto check = [](const MomentumFunction& p, const WaveFunction& u) {
    for (const Pole& pole : p.poles) {
      if (pole.kind != PoleKind::Node) continue;
      const double q = pole.location.real();
      const double h = 1e-7;
      // simple zero: u changes sign across the pole and is tiny at it
      const double left = u.value(q - h).real(), right = u.value(q + h).real();
      CHECK(left * right < 0.0);
      CHECK(std::abs(u.value(q)) <= 1e-10 * std::max({1.0, std::abs(left) / h, std::abs(right) / h}));
    }
  };
  check(ho_momentum(7), ho_wave(7));
  check(hydrogen_p_x(5, 2), hydrogen_wave_x(5, 2));
  check(hydrogen_p_rho(7, 2), hydrogen_wave_rho(7, 2));
}

TEST_CASE("node counts follow the quantum numbers") {
  for (int n : {0, 1, 5, 12}) CHECK(count_kind(ho_momentum(n), PoleKind::Node) == n);
  for (int ell = 0; ell <= 5; ++ell)
    for (int m = 0; m <= ell; ++m)
      CHECK(count_kind(hydrogen_p_x(ell, m), PoleKind::Node) == ell - m);
  for (int n = 1; n <= 6; ++n)
    for (int ell = 0; ell < n; ++ell)
      CHECK(count_kind(hydrogen_p_rho(n, ell), PoleKind::Node) == n - ell - 1);
}

TEST_CASE("anti-node counts and strict interleaving with nodes") {
  auto interleaved = [](const MomentumFunction& p) {
    std::vector<double> nodes;
    for (const Pole& pole : p.poles)
      if (pole.kind == PoleKind::Node) nodes.push_back(pole.location.real());
    std::sort(nodes.begin(), nodes.end());
    const auto& anti = p.numerator_zeros.roots;
    REQUIRE(anti.size() == nodes.size() + 1);
    for (size_t i = 0; i < nodes.size(); ++i) {
      CHECK(anti[i] < nodes[i]);
      CHECK(nodes[i] < anti[i + 1]);
    }
  };
  for (int n : {0, 1, 3, 8}) {
    const MomentumFunction p = ho_momentum(n);
    CHECK(p.numerator_zeros.count() == n + 1);
    interleaved(p);
  }
  for (auto [ell, m] : std::vector<std::pair<int, int>>{{1, 0}, {3, 0}, {3, 2}, {4, 4}, {5, 1}}) {
    const MomentumFunction p = hydrogen_p_x(ell, m);
    CHECK(p.numerator_zeros.count() == ell - m + 1);
    interleaved(p);
  }
  for (auto [n, ell] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {4, 0}, {4, 1}, {6, 0}, {7, 3}}) {
    const MomentumFunction p = hydrogen_p_rho(n, ell);
    CHECK(p.numerator_zeros.count() == n - ell);
    interleaved(p);
  }
}

TEST_CASE("oscillator anti-nodes sit at the extrema of u") {
  for (int n : {0, 2, 5}) {
    const MomentumFunction p = ho_momentum(n);
    const WaveFunction u = ho_wave(n);
    for (double a : p.numerator_zeros.roots) {
      const double h = 1e-6;
      const double dl = u.derivative(a - h).real(), dr = u.derivative(a + h).real();
      CHECK(dl * dr < 0.0);  // sign change of u' across the anti-node
    }
  }
}

TEST_CASE("ground states have no nodes") {
  CHECK(ho_momentum(0).poles.empty());
  CHECK(count_kind(hydrogen_p_rho(1, 0), PoleKind::Node) == 0);
  CHECK(hydrogen_p_x(0, 0).poles.empty());
  CHECK(hydrogen_p_x(0, 0).identically_zero);
}

TEST_CASE("oscillator spectrum values") {
  {
    const Spectrum s = ho_spectrum({{0, 0, 0}, {1.0, 1.0, 1.0}});
    CHECK(s.energy == doctest::Approx(1.5));
  }
  {
    const Spectrum s = ho_spectrum({{3, 0, 0}, {1.0, 1.0, 1.0}});
    CHECK(s.energy == doctest::Approx(4.5));
    for (const auto& [name, w] : s.angles) CHECK(w == doctest::Approx(1.0));
    CHECK(s.actions[0].second == doctest::Approx(3.0));
  }
  {
    const Spectrum s = ho_spectrum({{1, 2, 3}, {2.0, 3.0, 4.0}});
    CHECK(s.energy == doctest::Approx(24.5));
  }
}

TEST_CASE("hydrogen spectrum values") {
  {
    const Spectrum s = hydrogen_spectrum({1, 0, 0});
    CHECK(s.energy == doctest::Approx(-0.5).epsilon(1e-14));
    for (const auto& [name, J] : s.actions) CHECK(J == doctest::Approx(0.0));
  }
  {
    const Spectrum s = hydrogen_spectrum({2, 1, 1});
    CHECK(s.energy == doctest::Approx(-0.125).epsilon(1e-14));
    CHECK(s.actions[0].second == doctest::Approx(1.0));  // J_phi
    CHECK(s.actions[1].second == doctest::Approx(1.0));  // J_theta
    CHECK(s.actions[2].second == doctest::Approx(1.0));  // J_r
  }
  {
    const Spectrum s = hydrogen_spectrum({3, 2, -1});
    CHECK(s.angles.back().second == doctest::Approx(1.0 / 27.0).epsilon(1e-14));
  }
  // Bohr ratio E_1/E_n = n^2
  const double e1 = hydrogen_spectrum({1, 0, 0}).energy;
  for (int n = 2; n <= 10; ++n) {
    const double en = hydrogen_spectrum({n, 0, 0}).energy;
    CHECK(e1 / en == doctest::Approx(double(n) * n).epsilon(1e-13));
  }
}

TEST_CASE("angle variables against finite differences of E(J)") {
  CHECK(angle_variable_fd_check_ho({{2, 0, 1}, {1.0, 2.0, 0.5}}, 0, 1e-5) <= 1e-10);
  CHECK(angle_variable_fd_check_ho({{0, 0, 0}, {1.0, 1.0, 1.0}}, 2, 1e-5) <= 1e-10);
  CHECK(angle_variable_fd_check_hydrogen({2, 0, 0}, 1e-5) <= 1e-6);
  CHECK(angle_variable_fd_check_hydrogen({1, 0, 0}, 1e-5) <= 1e-6);
  // n = 1 analytic frequency in units m = k = hbar = 1
  CHECK(hydrogen_radial_frequency(0.0, 1.0, 1.0, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("hbar -> 0 at fixed J recovers the classical relations") {
  const std::array<double, 3> J{0.7, 1.3, 0.2};
  const std::array<double, 3> omega{1.0, 2.0, 3.0};
  const double classical = J[0] * omega[0] + J[1] * omega[1] + J[2] * omega[2];
  CHECK(ho_energy_of_actions(J, omega, 1e-9) == doctest::Approx(classical).epsilon(1e-8));

  const double J_r = 2.5;
  CHECK(hydrogen_energy_of_action(J_r, 1.0, 1.0, 1e-9) ==
        doctest::Approx(-0.5 / (J_r * J_r)).epsilon(1e-8));
  CHECK(hydrogen_radial_frequency(J_r, 1.0, 1.0, 1e-9) ==
        doctest::Approx(1.0 / (J_r * J_r * J_r)).epsilon(1e-8));
}

TEST_CASE("invalid quantum numbers name the violated constraint") {
  CHECK_THROWS_WITH_AS(validate(HydrogenQuantumNumbers{2, 5, 0}),
                       doctest::Contains("0 <= l <= n-1"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(validate(HydrogenQuantumNumbers{2, 1, 2}),
                       doctest::Contains("|m| <= l"), std::invalid_argument);
  CHECK_THROWS_AS(validate(HOQuantumNumbers{{-1, 0, 0}, {1, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(hydrogen_p_rho(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(hydrogen_p_x(2, 3), std::invalid_argument);
}
