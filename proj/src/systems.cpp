#include "qhj/systems.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace qhj {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();

double bisect_root(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0)
    throw std::logic_error("bisect_root: endpoints do not bracket a sign change");
  for (int it = 0; it < 200 && b - a > 1e-15 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (fa * fm < 0.0) {
      b = mid;
      fb = fm;
    } else {
      a = mid;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

double newton_polish(const std::function<double(double)>& f,
                     const std::function<double(double)>& df, double x) {
  for (int it = 0; it < 3; ++it) {
    const double d = df(x);
    if (d == 0.0) break;
    const double step = f(x) / d;
    x -= step;
    if (std::abs(step) < 1e-15 * (1.0 + std::abs(x))) break;
  }
  return x;
}

// Zeros of the momentum-function numerator on the closed physical domain:
// one zero between consecutive node poles plus the outermost ones, found
// by bracketed bisection and polished by Newton.
RootSet antinodes_from_brackets(const std::function<double(double)>& f,
                                const std::function<double(double)>& df,
                                const std::vector<std::pair<double, double>>& brackets) {
  RootSet out;
  for (const auto& [a, b] : brackets) {
    double r = bisect_root(f, a, b);
    r = newton_polish(f, df, r);
    out.roots.push_back(r);
    out.refined_residual = std::max(out.refined_residual, std::abs(f(r)));
  }
  return out;
}

double real_eval(const OrthoPoly& p, double x) { return p.eval(Complex(x, 0.0)).real(); }
double real_deriv(const OrthoPoly& p, double x) { return p.eval_derivative(Complex(x, 0.0)).real(); }

RootSet ho_antinodes(int n) {
  const OrthoPoly hn = OrthoPoly::hermite(n);
  const OrthoPoly hm1 = n >= 1 ? OrthoPoly::hermite(n - 1) : hn;
  // N(xi) = 2n H_{n-1} - xi H_n, the polynomial factor of u'(xi)
  auto f = [&](double x) {
    return (n >= 1 ? 2.0 * n * real_eval(hm1, x) : 0.0) - x * real_eval(hn, x);
  };
  auto df = [&](double x) {
    return (n >= 1 ? 2.0 * n * real_deriv(hm1, x) : 0.0) - real_eval(hn, x) -
           x * real_deriv(hn, x);
  };
  const double edge = std::sqrt(2.0 * n + 1.0) + 1.0;  // extrema stay inside the turning region
  std::vector<std::pair<double, double>> brackets;
  if (n == 0) {
    brackets.emplace_back(-edge, edge);
  } else {
    const RootSet nodes = hn.roots();
    brackets.emplace_back(-edge, nodes.roots.front());
    for (int i = 0; i + 1 < nodes.count(); ++i)
      brackets.emplace_back(nodes.roots[i], nodes.roots[i + 1]);
    brackets.emplace_back(nodes.roots.back(), edge);
  }
  return antinodes_from_brackets(f, df, brackets);
}

RootSet x_antinodes(int ell, int m_abs) {
  RootSet out;
  if (ell == 0) return out;  // p is identically zero; no extremum structure
  const OrthoPoly q = OrthoPoly::reduced_legendre(ell, m_abs);
  const RootSet nodes = q.degree() > 0 ? q.roots() : RootSet{};
  if (m_abs == 0) {
    // u = P_l: boundary maxima at +-1 plus the critical points of P_l,
    // which interlace its nodes
    auto f = [&](double x) { return real_deriv(q, x); };
    auto df = [&](double x) { return q.eval_second_derivative(Complex(x, 0.0)).real(); };
    std::vector<std::pair<double, double>> brackets;
    for (int i = 0; i + 1 < nodes.count(); ++i)
      brackets.emplace_back(nodes.roots[i], nodes.roots[i + 1]);
    out = antinodes_from_brackets(f, df, brackets);
    out.roots.insert(out.roots.begin(), -1.0);
    out.roots.push_back(1.0);
    return out;
  }
  // N(x) = (l+|m|) Q_{l-1} - l x Q_l does not vanish at +-1 for m != 0
  const OrthoPoly qm1 = OrthoPoly::reduced_legendre(ell - 1, m_abs);
  const double c = ell + m_abs;
  auto f = [&](double x) {
    return c * real_eval(qm1, x) - ell * x * real_eval(q, x);
  };
  auto df = [&](double x) {
    return c * real_deriv(qm1, x) - ell * real_eval(q, x) - ell * x * real_deriv(q, x);
  };
  std::vector<std::pair<double, double>> brackets;
  if (nodes.count() == 0) {
    brackets.emplace_back(-1.0, 1.0);
  } else {
    brackets.emplace_back(-1.0, nodes.roots.front());
    for (int i = 0; i + 1 < nodes.count(); ++i)
      brackets.emplace_back(nodes.roots[i], nodes.roots[i + 1]);
    brackets.emplace_back(nodes.roots.back(), 1.0);
  }
  return antinodes_from_brackets(f, df, brackets);
}

RootSet rho_antinodes(int n, int ell) {
  const int n_r = n - ell - 1;
  const OrthoPoly lag = OrthoPoly::laguerre(n_r, 2 * ell + 1);
  const OrthoPoly lam = OrthoPoly::laguerre(n_r - 1, 2 * ell + 2);
  // N(rho) = (rho/2 - l) L + rho Lambda, the polynomial factor of u'(rho)
  auto f = [&](double x) {
    return (0.5 * x - ell) * real_eval(lag, x) + x * real_eval(lam, x);
  };
  auto df = [&](double x) {
    return 0.5 * real_eval(lag, x) + (0.5 * x - ell) * real_deriv(lag, x) +
           real_eval(lam, x) + x * real_deriv(lam, x);
  };
  const RootSet nodes = n_r > 0 ? lag.roots() : RootSet{};
  const double hi = (nodes.count() ? nodes.roots.back() : 0.0) + 2.0 * n + 2.0;
  std::vector<std::pair<double, double>> brackets;
  if (ell >= 1) {
    if (nodes.count() == 0) {
      brackets.emplace_back(0.0, hi);
    } else {
      brackets.emplace_back(0.0, nodes.roots.front());
      for (int i = 0; i + 1 < nodes.count(); ++i)
        brackets.emplace_back(nodes.roots[i], nodes.roots[i + 1]);
      brackets.emplace_back(nodes.roots.back(), hi);
    }
    return antinodes_from_brackets(f, df, brackets);
  }
  // l = 0: u(0) != 0 and the origin is the first anti-node of the full
  // wave function; the remaining extrema interlace the nodes from above
  for (int i = 0; i + 1 < nodes.count(); ++i)
    brackets.emplace_back(nodes.roots[i], nodes.roots[i + 1]);
  if (nodes.count()) brackets.emplace_back(nodes.roots.back(), hi);
  RootSet out = antinodes_from_brackets(f, df, brackets);
  out.roots.insert(out.roots.begin(), 0.0);
  return out;
}

}  // namespace

void validate(const HOQuantumNumbers& q) {
  for (int s = 0; s < 3; ++s) {
    if (q.n[s] < 0)
      throw std::invalid_argument("harmonic oscillator: n must be >= 0 on every axis");
    if (q.n[s] > 100)
      throw std::invalid_argument("harmonic oscillator: n capped at 100");
    if (!(q.omega[s] > 0.0))
      throw std::invalid_argument("harmonic oscillator: omega must be positive");
  }
}

void validate(const HydrogenQuantumNumbers& q) {
  if (q.n < 1) throw std::invalid_argument("hydrogen: n must be >= 1");
  if (q.n > 100) throw std::invalid_argument("hydrogen: n capped at 100");
  if (q.ell < 0 || q.ell > q.n - 1)
    throw std::invalid_argument("hydrogen: requires 0 <= l <= n-1");
  if (std::abs(q.m) > q.ell) throw std::invalid_argument("hydrogen: requires |m| <= l");
  if (!(q.mass > 0.0)) throw std::invalid_argument("hydrogen: mass must be positive");
  if (!(q.k > 0.0)) throw std::invalid_argument("hydrogen: k must be positive");
}

RiccatiCoefficients ho_riccati(double kappa_bar) {
  return make_riccati(
      [kappa_bar](Complex z) { return kI * (kappa_bar - z * z); },
      [](Complex) { return Complex{0.0, 0.0}; },
      [](Complex) { return -kI; },
      [](Complex) { return Complex{0.0, 0.0}; }, -kInf, kInf);
}

RiccatiCoefficients hydrogen_phi_riccati(double kappa_bar_phi) {
  return make_riccati(
      [kappa_bar_phi](Complex) { return kI * kappa_bar_phi; },
      [](Complex) { return Complex{0.0, 0.0}; },
      [](Complex) { return -kI; },
      [](Complex) { return Complex{0.0, 0.0}; }, -kInf, kInf);
}

RiccatiCoefficients hydrogen_x_riccati(double kappa_bar_theta, int m_abs) {
  const double m2 = double(m_abs) * m_abs;
  return make_riccati(
      [kappa_bar_theta, m2](Complex z) {
        const Complex w = 1.0 - z * z;
        return -kI / w * (kappa_bar_theta - m2 / w);
      },
      [](Complex z) { return 2.0 * z / (1.0 - z * z); },
      [](Complex) { return kI; },
      [](Complex) { return Complex{0.0, 0.0}; }, -1.0, 1.0);
}

RiccatiCoefficients hydrogen_rho_riccati(double lambda, int ell) {
  const double ll1 = double(ell) * (ell + 1);
  return make_riccati(
      [lambda, ll1](Complex z) { return kI * (-0.25 + lambda / z - ll1 / (z * z)); },
      [](Complex z) { return -2.0 / z; },
      [](Complex) { return -kI; },
      [](Complex) { return Complex{0.0, 0.0}; }, 0.0, kInf);
}

MomentumFunction ho_momentum(int n) {
  if (n < 0 || n > 100)
    throw std::invalid_argument("ho_momentum: n must lie in [0, 100]");
  const OrthoPoly hn = OrthoPoly::hermite(n);
  const OrthoPoly hn1 = OrthoPoly::hermite(n + 1);

  MomentumFunction p;
  p.label = "xi";
  p.evaluate = [hn, hn1](Complex z) { return -kI * (z - hn1.eval(z) / hn.eval(z)); };
  p.derivative = [hn, hn1](Complex z) {
    const Complex a = hn.eval(z), da = hn.eval_derivative(z);
    const Complex b = hn1.eval(z), db = hn1.eval_derivative(z);
    return -kI * (1.0 - (db * a - b * da) / (a * a));
  };
  if (n > 0) {
    for (double r : hn.roots().roots)
      p.poles.push_back({Complex(r, 0.0), -kI, PoleKind::Node});
  }
  p.riccati = ho_riccati(2.0 * n + 1.0);
  p.numerator_zeros = ho_antinodes(n);
  p.domain_lo = -kInf;
  p.domain_hi = kInf;
  p.action_target = n;
  return p;
}

MomentumFunction hydrogen_p_phi(int m) {
  MomentumFunction p;
  p.label = "phi";
  p.evaluate = [m](Complex) { return Complex(double(m), 0.0); };
  p.derivative = [](Complex) { return Complex{0.0, 0.0}; };
  p.riccati = hydrogen_phi_riccati(double(m) * m);
  p.domain_lo = -kInf;
  p.domain_hi = kInf;
  p.action_target = m;
  p.periodic = true;
  p.identically_zero = (m == 0);
  return p;
}

MomentumFunction hydrogen_p_x(int ell, int m) {
  const int m_abs = std::abs(m);
  if (ell < 0 || m_abs > ell)
    throw std::invalid_argument("hydrogen_p_x: requires 0 <= |m| <= l");
  const OrthoPoly q = OrthoPoly::reduced_legendre(ell, m_abs);
  const OrthoPoly qm1 = OrthoPoly::reduced_legendre(ell - 1, m_abs);
  const double c = ell + m_abs;

  MomentumFunction p;
  p.label = "x";
  p.evaluate = [q, qm1, ell, c](Complex z) {
    const Complex w = 1.0 - z * z;
    return kI * (-double(ell) * z + c * qm1.eval(z) / q.eval(z)) / w;
  };
  p.derivative = [q, qm1, ell, c](Complex z) {
    const Complex w = 1.0 - z * z;
    const Complex qv = q.eval(z), dq = q.eval_derivative(z);
    const Complex g = -double(ell) * z + c * qm1.eval(z) / qv;
    const Complex dg = -double(ell) + c * (qm1.eval_derivative(z) * qv - qm1.eval(z) * dq) / (qv * qv);
    return kI * (dg * w + 2.0 * z * g) / (w * w);
  };
  if (ell >= 1) {
    if (q.degree() > 0) {
      for (double r : q.roots().roots)
        p.poles.push_back({Complex(r, 0.0), kI, PoleKind::Node});
    }
    // residue i|m|/2 at both ends; removable (zero) when m = 0
    const Complex bres = kI * (0.5 * m_abs);
    p.poles.push_back({Complex(-1.0, 0.0), bres, PoleKind::Boundary});
    p.poles.push_back({Complex(1.0, 0.0), bres, PoleKind::Boundary});
  }
  p.riccati = hydrogen_x_riccati(double(ell) * (ell + 1), m_abs);
  p.numerator_zeros = x_antinodes(ell, m_abs);
  p.domain_lo = -1.0;
  p.domain_hi = 1.0;
  p.action_sign = -1;  // dx = -sin(theta) dtheta
  p.action_target = ell;
  p.identically_zero = (ell == 0);
  return p;
}

MomentumFunction hydrogen_p_rho(int n, int ell) {
  if (n < 1 || ell < 0 || ell > n - 1)
    throw std::invalid_argument("hydrogen_p_rho: requires 1 <= l+1 <= n");
  const int n_r = n - ell - 1;
  const OrthoPoly lag = OrthoPoly::laguerre(n_r, 2 * ell + 1);
  const OrthoPoly lam = OrthoPoly::laguerre(n_r - 1, 2 * ell + 2);

  MomentumFunction p;
  p.label = "rho";
  p.evaluate = [lag, lam, ell](Complex z) {
    return kI * (0.5 - double(ell) / z + lam.eval(z) / lag.eval(z));
  };
  p.derivative = [lag, lam, ell](Complex z) {
    const Complex lv = lag.eval(z), dl = lag.eval_derivative(z);
    return kI * (double(ell) / (z * z) + (lam.eval_derivative(z) * lv - lam.eval(z) * dl) / (lv * lv));
  };
  if (n_r > 0) {
    for (double r : lag.roots().roots)
      p.poles.push_back({Complex(r, 0.0), -kI, PoleKind::Node});
  }
  if (ell >= 1)
    p.poles.push_back({Complex{0.0, 0.0}, -kI * double(ell), PoleKind::Origin});
  p.riccati = hydrogen_rho_riccati(double(n), ell);
  p.numerator_zeros = rho_antinodes(n, ell);
  p.domain_lo = 0.0;
  p.domain_hi = kInf;
  p.action_target = n - 1;
  return p;
}

Complex hydrogen_p_theta(const MomentumFunction& p_x, double theta) {
  return std::sin(theta) * p_x.evaluate(Complex(std::cos(theta), 0.0));
}

WaveFunction ho_wave(int n) {
  const OrthoPoly h = OrthoPoly::hermite(n);
  WaveFunction w;
  w.value = [h](double xi) { return h.eval(Complex(xi, 0.0)) * std::exp(-0.5 * xi * xi); };
  w.derivative = [h](double xi) {
    const Complex z(xi, 0.0);
    return (h.eval_derivative(z) - xi * h.eval(z)) * std::exp(-0.5 * xi * xi);
  };
  w.second_derivative = [h](double xi) {
    const Complex z(xi, 0.0);
    return (h.eval_second_derivative(z) - 2.0 * xi * h.eval_derivative(z) +
            (xi * xi - 1.0) * h.eval(z)) *
           std::exp(-0.5 * xi * xi);
  };
  return w;
}

WaveFunction hydrogen_wave_phi(int m) {
  WaveFunction w;
  w.value = [m](double phi) { return std::exp(kI * double(m) * phi); };
  w.derivative = [m](double phi) { return kI * double(m) * std::exp(kI * double(m) * phi); };
  w.second_derivative = [m](double phi) {
    return -double(m) * m * std::exp(kI * double(m) * phi);
  };
  return w;
}

WaveFunction hydrogen_wave_x(int ell, int m) {
  const int m_abs = std::abs(m);
  if (ell < 0 || m_abs > ell)
    throw std::invalid_argument("hydrogen_wave_x: requires 0 <= |m| <= l");
  const OrthoPoly q = OrthoPoly::reduced_legendre(ell, m_abs);
  WaveFunction w;
  w.value = [q, m_abs](double x) {
    const double s = 1.0 - x * x;
    return q.eval(Complex(x, 0.0)) * std::pow(s, 0.5 * m_abs);
  };
  w.derivative = [q, m_abs](double x) {
    const Complex z(x, 0.0);
    const double s = 1.0 - x * x;
    if (m_abs == 0) return q.eval_derivative(z);
    return (q.eval_derivative(z) * s - double(m_abs) * x * q.eval(z)) *
           std::pow(s, 0.5 * m_abs - 1.0);
  };
  w.second_derivative = [q, m_abs](double x) {
    const Complex z(x, 0.0);
    if (m_abs == 0) return q.eval_second_derivative(z);
    const double s = 1.0 - x * x, m = m_abs;
    const Complex qv = q.eval(z), dq = q.eval_derivative(z), d2q = q.eval_second_derivative(z);
    return d2q * std::pow(s, 0.5 * m) - 2.0 * m * x * dq * std::pow(s, 0.5 * m - 1.0) +
           qv * (m * (m - 2.0) * x * x * std::pow(s, 0.5 * m - 2.0) -
                 m * std::pow(s, 0.5 * m - 1.0));
  };
  return w;
}

WaveFunction hydrogen_wave_rho(int n, int ell) {
  if (n < 1 || ell < 0 || ell > n - 1)
    throw std::invalid_argument("hydrogen_wave_rho: requires 1 <= l+1 <= n");
  const OrthoPoly lag = OrthoPoly::laguerre(n - ell - 1, 2 * ell + 1);
  WaveFunction w;
  auto envelope = [ell](double rho) { return std::pow(rho, double(ell)) * std::exp(-0.5 * rho); };
  w.value = [lag, envelope](double rho) { return envelope(rho) * lag.eval(Complex(rho, 0.0)); };
  w.derivative = [lag, envelope, ell](double rho) {
    const Complex z(rho, 0.0);
    const double g = double(ell) / rho - 0.5;  // f'/f for the envelope
    return envelope(rho) * (g * lag.eval(z) + lag.eval_derivative(z));
  };
  w.second_derivative = [lag, envelope, ell](double rho) {
    const Complex z(rho, 0.0);
    const double g = double(ell) / rho - 0.5;
    const double g2 = double(ell) * (ell - 1) / (rho * rho) - double(ell) / rho + 0.25;  // f''/f
    return envelope(rho) *
           (g2 * lag.eval(z) + 2.0 * g * lag.eval_derivative(z) + lag.eval_second_derivative(z));
  };
  return w;
}

double ho_energy_of_actions(const std::array<double, 3>& J,
                            const std::array<double, 3>& omega, double hbar) {
  double e = 0.0;
  for (int s = 0; s < 3; ++s) e += omega[s] * (J[s] + 0.5 * hbar);
  return e;
}

double hydrogen_energy_of_action(double J_r, double mass, double k, double hbar) {
  const double d = J_r + hbar;
  return -0.5 * mass * k * k / (d * d);
}

double hydrogen_radial_frequency(double J_r, double mass, double k, double hbar) {
  const double d = J_r + hbar;
  return mass * k * k / (d * d * d);
}

Spectrum ho_spectrum(const HOQuantumNumbers& q, double hbar) {
  validate(q);
  Spectrum s;
  const std::array<std::string, 3> names{"x", "y", "z"};
  std::array<double, 3> J{};
  for (int i = 0; i < 3; ++i) {
    J[i] = q.n[i] * hbar;
    s.actions.emplace_back(names[i], J[i]);
    s.angles.emplace_back(names[i], q.omega[i]);
  }
  s.energy = ho_energy_of_actions(J, q.omega, hbar);
  return s;
}

Spectrum hydrogen_spectrum(const HydrogenQuantumNumbers& q, double hbar) {
  validate(q);
  Spectrum s;
  const double J_r = (q.n - 1) * hbar;
  s.actions.emplace_back("phi", q.m * hbar);
  s.actions.emplace_back("theta", q.ell * hbar);
  s.actions.emplace_back("r", J_r);
  s.energy = hydrogen_energy_of_action(J_r, q.mass, q.k, hbar);
  s.angles.emplace_back("r", hydrogen_radial_frequency(J_r, q.mass, q.k, hbar));
  return s;
}

double angle_variable_fd_check_ho(const HOQuantumNumbers& q, int axis,
                                  double delta, double hbar) {
  validate(q);
  if (axis < 0 || axis > 2) throw std::invalid_argument("axis must be 0, 1 or 2");
  if (!(delta > 0.0) || delta > hbar / 10.0)
    throw std::invalid_argument("delta must lie in (0, hbar/10]");
  std::array<double, 3> J{};
  for (int i = 0; i < 3; ++i) J[i] = q.n[i] * hbar;
  std::array<double, 3> Jp = J, Jm = J;
  Jp[axis] += delta;
  Jm[axis] -= delta;
  const double fd =
      (ho_energy_of_actions(Jp, q.omega, hbar) - ho_energy_of_actions(Jm, q.omega, hbar)) /
      (2.0 * delta);
  return std::abs(fd - q.omega[axis]);
}

double angle_variable_fd_check_hydrogen(const HydrogenQuantumNumbers& q,
                                        double delta, double hbar) {
  validate(q);
  if (!(delta > 0.0) || delta > hbar / 10.0)
    throw std::invalid_argument("delta must lie in (0, hbar/10]");
  const double J_r = (q.n - 1) * hbar;
  const double fd = (hydrogen_energy_of_action(J_r + delta, q.mass, q.k, hbar) -
                     hydrogen_energy_of_action(J_r - delta, q.mass, q.k, hbar)) /
                    (2.0 * delta);
  return std::abs(fd - hydrogen_radial_frequency(J_r, q.mass, q.k, hbar));
}

}  // namespace qhj
