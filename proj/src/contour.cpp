#include "qhj/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qhj {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxSamples = 1 << 16;
constexpr double kQuadTol = 1e-11;
constexpr double kPoleClearance = 0.05;

int initial_samples(int requested) {
  int n = 16;
  while (n < requested && n < kMaxSamples) n <<= 1;
  return n;
}

Complex trapezoid_pass(const ComplexFn& f, const Contour& c, int n) {
  Complex sum{0.0, 0.0};
  for (int j = 0; j < n; ++j) {
    const double t = kTwoPi * j / n;
    const Complex z = c.center + Complex(c.radius_x * std::cos(t), c.radius_y * std::sin(t));
    const Complex dz(-c.radius_x * std::sin(t), c.radius_y * std::cos(t));
    sum += f(z) * dz;
  }
  return sum * (kTwoPi / n);
}

// real period average for the periodic phi coordinate
QuadratureResult period_average(const ComplexFn& f, int samples) {
  int n = initial_samples(samples);
  auto pass = [&f](int m) {
    Complex s{0.0, 0.0};
    for (int j = 0; j < m; ++j) s += f(Complex(kTwoPi * j / m, 0.0));
    return s / double(m);
  };
  Complex prev = pass(n);
  QuadratureResult out{prev, n, false};
  while (n < kMaxSamples) {
    n <<= 1;
    const Complex cur = pass(n);
    out.samples_used = n;
    out.value = cur;
    if (std::abs(cur - prev) < kQuadTol) {
      out.converged = true;
      break;
    }
    prev = cur;
  }
  return out;
}

}  // namespace

QuadratureResult integrate_closed(const ComplexFn& f, const Contour& c) {
  if (c.radius_x <= 0.0 || c.radius_y <= 0.0)
    throw std::invalid_argument("integrate_closed: contour radii must be positive");
  int n = initial_samples(c.samples);
  Complex prev = trapezoid_pass(f, c, n);
  QuadratureResult out{prev, n, false};
  while (n < kMaxSamples) {
    n <<= 1;
    const Complex cur = trapezoid_pass(f, c, n);
    out.samples_used = n;
    out.value = cur;
    if (std::abs(cur - prev) < kQuadTol) {
      out.converged = true;
      break;
    }
    prev = cur;
  }
  return out;
}

double min_distance_to(const Contour& c, Complex point) {
  double best = std::numeric_limits<double>::infinity();
  constexpr int kScan = 4096;
  for (int j = 0; j < kScan; ++j) {
    const double t = kTwoPi * j / kScan;
    const Complex z = c.center + Complex(c.radius_x * std::cos(t), c.radius_y * std::sin(t));
    best = std::min(best, std::abs(z - point));
  }
  return best;
}

bool encloses(const Contour& c, Complex point) {
  const double dx = (point.real() - c.center.real()) / c.radius_x;
  const double dy = (point.imag() - c.center.imag()) / c.radius_y;
  return dx * dx + dy * dy < 1.0;
}

Contour auto_contour(const MomentumFunction& p) {
  Contour c;
  if (p.label == "x") {
    c.center = Complex{0.0, 0.0};
    c.radius_x = 2.0;
    c.radius_y = 0.75;
    return c;
  }
  if (p.poles.empty()) {
    c.center = Complex{0.0, 0.0};
    c.radius_x = c.radius_y = 1.0;
    return c;
  }
  double centroid = 0.0;
  for (const Pole& pole : p.poles) centroid += pole.location.real();
  centroid /= double(p.poles.size());
  double spread = 0.0;
  for (const Pole& pole : p.poles)
    spread = std::max(spread, std::abs(pole.location.real() - centroid));
  c.center = Complex(centroid, 0.0);
  c.radius_x = c.radius_y = 1.5 * spread + 1.0;
  return c;
}

namespace {

bool contour_admissible(const MomentumFunction& p, const Contour& c) {
  for (const Pole& pole : p.poles) {
    if (!encloses(c, pole.location)) return false;
    if (min_distance_to(c, pole.location) < kPoleClearance) return false;
  }
  return true;
}

ActionResult action_from_contour(const MomentumFunction& p, const Contour& c, double tol) {
  const QuadratureResult q = integrate_closed(p.evaluate, c);
  ActionResult r;
  r.J_over_hbar = double(p.action_sign) * q.value / kTwoPi;
  r.target = p.action_target;
  r.deviation = std::abs(r.J_over_hbar - Complex(double(p.action_target), 0.0));
  r.samples_used = q.samples_used;
  r.converged = q.converged && r.deviation < tol && std::abs(r.J_over_hbar.imag()) < tol;
  return r;
}

}  // namespace

ActionResult action_variable(const MomentumFunction& p, double tol) {
  if (p.periodic) {
    const QuadratureResult q = period_average(p.evaluate, 32);
    ActionResult r;
    r.J_over_hbar = q.value;
    r.target = p.action_target;
    r.deviation = std::abs(r.J_over_hbar - Complex(double(p.action_target), 0.0));
    r.samples_used = q.samples_used;
    r.converged = q.converged && r.deviation < tol && std::abs(r.J_over_hbar.imag()) < tol;
    return r;
  }
  Contour c = auto_contour(p);
  if (!contour_admissible(p, c)) {
    c.radius_x *= 1.5;
    c.radius_y *= 1.5;
    if (!contour_admissible(p, c))
      throw std::runtime_error("action_variable: auto contour failed the pole-distance check");
  }
  return action_from_contour(p, c, tol);
}

ActionResult action_variable(const MomentumFunction& p, const Contour& c, double tol) {
  if (p.periodic) return action_variable(p, tol);
  if (!contour_admissible(p, c))
    throw std::invalid_argument(
        "action_variable: contour must enclose every declared pole at distance >= 0.05");
  return action_from_contour(p, c, tol);
}

Complex residue_at(const ComplexFn& f, Complex pole, double radius) {
  if (radius <= 0.0) throw std::invalid_argument("residue_at: radius must be positive");
  Contour c{pole, radius, radius, 32};
  const QuadratureResult q = integrate_closed(f, c);
  if (!q.converged)
    throw std::runtime_error("residue_at: quadrature did not converge on the pole circle");
  return q.value / (kTwoPi * kI);
}

Complex residue_at(const MomentumFunction& p, Complex pole, double radius) {
  for (const Pole& other : p.poles) {
    if (std::abs(other.location - pole) < 1e-12) continue;
    if (std::abs(other.location - pole) <= radius + kPoleClearance)
      throw std::invalid_argument("residue_at: circle of radius " + std::to_string(radius) +
                                  " reaches another declared pole");
  }
  return residue_at(p.evaluate, pole, radius);
}

int count_zeros_and_poles(const ComplexFn& f, const ComplexFn& f_derivative,
                          const Contour& c) {
  auto integrand = [&f, &f_derivative](Complex z) { return f_derivative(z) / f(z); };
  const QuadratureResult q = integrate_closed(integrand, c);
  const Complex w = q.value / (kTwoPi * kI);
  const double nearest = std::round(w.real());
  if (!q.converged || std::abs(w.real() - nearest) > 0.2 || std::abs(w.imag()) > 0.2)
    throw std::runtime_error("count_zeros_and_poles: winding number " +
                             std::to_string(w.real()) +
                             " is not close to an integer (ill-conditioned contour)");
  return static_cast<int>(nearest);
}

NodeReport nodes_and_antinodes(const MomentumFunction& p) {
  NodeReport report;
  for (const Pole& pole : p.poles)
    if (pole.kind == PoleKind::Node) report.nodes.push_back(pole.location.real());
  std::sort(report.nodes.begin(), report.nodes.end());
  report.antinodes = p.numerator_zeros.roots;

  if (p.identically_zero || p.periodic) {
    // constant momentum function: no zeros, no poles, nothing to count
    report.counts_consistent = true;
    return report;
  }

  // contour enclosing every pole and every numerator zero
  std::vector<double> pts;
  for (const Pole& pole : p.poles) pts.push_back(pole.location.real());
  pts.insert(pts.end(), report.antinodes.begin(), report.antinodes.end());
  double centroid = 0.0;
  for (double v : pts) centroid += v;
  if (!pts.empty()) centroid /= double(pts.size());
  double spread = 0.0;
  for (double v : pts) spread = std::max(spread, std::abs(v - centroid));
  Contour c{Complex(centroid, 0.0), 1.5 * spread + 1.0, 1.5 * spread + 1.0, 64};

  report.net_winding = count_zeros_and_poles(p.evaluate, p.derivative, c);

  // Anti-nodes sitting on the closed-domain boundary (x = +-1 with m = 0,
  // rho = 0 with l = 0) cancel against the denominator and are not zeros
  // of p itself; genuine poles are the declared ones with residue != 0.
  int genuine_zeros = 0;
  for (double a : report.antinodes) {
    if (a <= p.domain_lo || a >= p.domain_hi) continue;
    bool removable = false;
    for (const Pole& pole : p.poles)
      if (std::abs(pole.location - Complex(a, 0.0)) < 1e-9) removable = true;
    if (!removable) ++genuine_zeros;
  }
  int genuine_poles = 0;
  for (const Pole& pole : p.poles)
    if (std::abs(pole.residue) > 1e-12) ++genuine_poles;

  report.counts_consistent = (report.net_winding == genuine_zeros - genuine_poles);
  return report;
}

}  // namespace qhj
