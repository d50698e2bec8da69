// Contour quadrature, residues, the argument principle and action
// variables.  Reference values are textbook residue computations.
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qhj/contour.hpp"
#include "qhj/systems.hpp"

using namespace qhj;

namespace {
constexpr Complex I{0.0, 1.0};
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

TEST_CASE("defining residue case: 1/z over the unit circle") {
  const Contour c{{0.0, 0.0}, 1.0, 1.0, 32};
  const auto q = integrate_closed([](Complex z) { return 1.0 / z; }, c);
  CHECK(q.converged);
  CHECK(std::abs(q.value - kTwoPi * I) < 1e-12);
}

TEST_CASE("entire integrand integrates to zero") {
  const Contour c{{0.4, -0.2}, 1.7, 0.9, 32};
  const auto q = integrate_closed([](Complex z) { return z; }, c);
  CHECK(q.converged);
  CHECK(std::abs(q.value) < 1e-12);
}

TEST_CASE("consecutive Hermite ratio integrates to -2 pi i n") {
  const Contour c{{0.0, 0.0}, 5.0, 5.0, 64};
  auto f = [](Complex z) {
    return OrthoPoly::hermite(4).eval(z) / OrthoPoly::hermite(3).eval(z);
  };
  const auto q = integrate_closed(f, c);
  CHECK(q.converged);
  CHECK(std::abs(q.value - (-kTwoPi * I * 3.0)) < 1e-10);
}

TEST_CASE("quadrature is insensitive to further sample doubling once converged") {
  auto f = [](Complex z) { return (z * z + 2.0) / ((z - 0.3) * (z + Complex{0.1, 0.4})); };
  const Contour coarse{{0.0, 0.0}, 2.0, 1.3, 32};
  const auto q1 = integrate_closed(f, coarse);
  Contour fine = coarse;
  fine.samples = q1.samples_used * 2;
  const auto q2 = integrate_closed(f, fine);
  CHECK(q1.converged);
  CHECK(std::abs(q1.value - q2.value) < 1e-12);
}

TEST_CASE("numerical residues match the residue law") {
  const MomentumFunction ho3 = ho_momentum(3);
  CHECK(std::abs(residue_at(ho3, {0.0, 0.0}, 0.3) - (-I)) < 1e-11);

  const MomentumFunction px = hydrogen_p_x(3, 0);
  CHECK(std::abs(residue_at(px, {std::sqrt(0.6), 0.0}, 0.1) - I) < 1e-11);

  // x/(1-x^2) has residue -1/2 at both boundary points
  auto f = [](Complex z) { return z / (1.0 - z * z); };
  CHECK(std::abs(residue_at(f, {1.0, 0.0}, 0.2) - Complex{-0.5, 0.0}) < 1e-11);
  CHECK(std::abs(residue_at(f, {-1.0, 0.0}, 0.2) - Complex{-0.5, 0.0}) < 1e-11);
}

TEST_CASE("residue circle may not reach a neighbouring pole") {
  const MomentumFunction ho3 = ho_momentum(3);  // poles at 0, +-sqrt(1.5)
  CHECK_THROWS_AS(residue_at(ho3, {0.0, 0.0}, 1.3), std::invalid_argument);
}

TEST_CASE("residue sum reproduces the full contour integral") {
  auto check = [](const MomentumFunction& p) {
    const Contour c = auto_contour(p);
    const auto whole = integrate_closed(p.evaluate, c);
    Complex sum{0.0, 0.0};
    for (const Pole& pole : p.poles) sum += pole.residue;
    CHECK(whole.converged);
    CHECK(std::abs(whole.value - kTwoPi * I * sum) < 1e-9);
  };
  check(ho_momentum(4));
  check(hydrogen_p_x(2, 1));
  check(hydrogen_p_x(4, 0));
  check(hydrogen_p_rho(5, 2));
}

TEST_CASE("argument principle counts") {
  const Contour big{{0.0, 0.0}, 5.0, 5.0, 64};
  // H_3 has three zeros inside
  CHECK(count_zeros_and_poles(
            [](Complex z) { return OrthoPoly::hermite(3).eval(z); },
            [](Complex z) { return OrthoPoly::hermite(3).eval_derivative(z); }, big) == 3);
  // p for n = 3: n+1 zeros against n poles
  const MomentumFunction p = ho_momentum(3);
  CHECK(count_zeros_and_poles(p.evaluate, p.derivative, big) == 1);
  // nothing inside
  CHECK(count_zeros_and_poles([](Complex z) { return z * z + 100.0; },
                              [](Complex z) { return 2.0 * z; },
                              Contour{{0.0, 0.0}, 1.0, 1.0, 32}) == 0);
}

TEST_CASE("action variables hit their quantized targets") {
  {
    const ActionResult r = action_variable(ho_momentum(3));
    CHECK(r.converged);
    CHECK(r.target == 3);
    CHECK(r.deviation < 1e-9);
  }
  {
    const ActionResult r = action_variable(hydrogen_p_x(3, 0));
    CHECK(r.converged);
    CHECK(r.target == 3);
    CHECK(r.deviation < 1e-9);
  }
  {
    const ActionResult r = action_variable(hydrogen_p_rho(6, 0));
    CHECK(r.converged);
    CHECK(r.target == 5);
    CHECK(r.deviation < 1e-9);
  }
  {
    const ActionResult r = action_variable(hydrogen_p_phi(-2));
    CHECK(r.converged);
    CHECK(r.J_over_hbar.real() == doctest::Approx(-2.0).epsilon(1e-12));
  }
}

TEST_CASE("small quantization sweep") {
  for (int n = 0; n <= 8; ++n) {
    const ActionResult r = action_variable(ho_momentum(n));
    CHECK(r.converged);
    CHECK(r.deviation < 1e-8);
    CHECK(std::abs(r.J_over_hbar.imag()) < 1e-8);
  }
  for (int n = 1; n <= 5; ++n)
    for (int ell = 0; ell < n; ++ell) {
      CHECK(action_variable(hydrogen_p_rho(n, ell)).deviation < 1e-8);
      for (int m = -ell; m <= ell; ++m) {
        CHECK(action_variable(hydrogen_p_x(ell, m)).deviation < 1e-8);
        CHECK(action_variable(hydrogen_p_phi(m)).deviation < 1e-8);
      }
    }
}

TEST_CASE("J is contour independent while the enclosed poles are unchanged") {
  auto check = [](const MomentumFunction& p) {
    const ActionResult base = action_variable(p);
    Contour c = auto_contour(p);
    c.radius_x *= 1.5;
    c.radius_y *= 1.5;
    const ActionResult scaled = action_variable(p, c);
    Contour e = auto_contour(p);
    e.radius_y *= 0.6;  // poles are real, squeezing the minor axis keeps them inside
    const ActionResult squeezed = action_variable(p, e);
    CHECK(std::abs(scaled.J_over_hbar - base.J_over_hbar) < 1e-10);
    CHECK(std::abs(squeezed.J_over_hbar - base.J_over_hbar) < 1e-10);
  };
  check(ho_momentum(5));
  check(hydrogen_p_x(4, 2));
  check(hydrogen_p_rho(5, 1));
}

TEST_CASE("explicit contour that misses a pole is rejected") {
  const MomentumFunction p = ho_momentum(3);  // poles out to +-1.22
  const Contour tight{{0.0, 0.0}, 0.5, 0.5, 32};
  CHECK_THROWS_AS(action_variable(p, tight), std::invalid_argument);
}

TEST_CASE("node reports") {
  {
    const NodeReport r = nodes_and_antinodes(ho_momentum(0));
    CHECK(r.nodes.empty());
    REQUIRE(r.antinodes.size() == 1);
    CHECK(r.antinodes[0] == doctest::Approx(0.0));
    CHECK(r.net_winding == 1);
    CHECK(r.counts_consistent);
  }
  {
    const NodeReport r = nodes_and_antinodes(ho_momentum(3));
    CHECK(r.nodes.size() == 3);
    CHECK(r.antinodes.size() == 4);
    CHECK(r.net_winding == 1);
    CHECK(r.counts_consistent);
  }
  {
    const NodeReport r = nodes_and_antinodes(hydrogen_p_rho(6, 0));
    CHECK(r.nodes.size() == 5);
    CHECK(r.counts_consistent);
  }
  {
    // m = 0: boundary anti-nodes at +-1 are kept in the physical list
    const NodeReport r = nodes_and_antinodes(hydrogen_p_x(3, 0));
    CHECK(r.nodes.size() == 3);
    REQUIRE(r.antinodes.size() == 4);
    CHECK(r.antinodes.front() == doctest::Approx(-1.0));
    CHECK(r.antinodes.back() == doctest::Approx(1.0));
    CHECK(r.net_winding == -1);
    CHECK(r.counts_consistent);
  }
  {
    const NodeReport r = nodes_and_antinodes(hydrogen_p_phi(0));
    CHECK(r.nodes.empty());
    CHECK(r.antinodes.empty());
    CHECK(r.counts_consistent);
  }
}
