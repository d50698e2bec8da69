#include "qhj/orthopoly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qhj {

namespace {

double double_factorial_odd(int m) {
  // (2m-1)!! with the empty-product convention for m = 0
  double v = 1.0;
  for (int k = 1; k <= m; ++k) v *= 2.0 * k - 1.0;
  return v;
}

}  // namespace

OrthoPoly OrthoPoly::hermite(int n) {
  if (n < 0) throw std::invalid_argument("hermite: n must be >= 0");
  if (n > 100) throw std::invalid_argument("hermite: degree capped at 100");
  return OrthoPoly(PolyFamily::Hermite, n, 0);
}

OrthoPoly OrthoPoly::reduced_legendre(int ell, int m_abs) {
  if (m_abs < 0) throw std::invalid_argument("reduced_legendre: |m| must be >= 0");
  if (ell < m_abs - 1)
    throw std::invalid_argument("reduced_legendre: requires l >= |m|-1 (l = |m|-1 is the zero polynomial)");
  if (ell - m_abs > 100) throw std::invalid_argument("reduced_legendre: degree capped at 100");
  return OrthoPoly(PolyFamily::ReducedLegendre, ell, m_abs);
}

OrthoPoly OrthoPoly::laguerre(int n, int alpha) {
  if (n < -1) throw std::invalid_argument("laguerre: requires n >= -1 (n = -1 is the zero polynomial)");
  if (alpha < 0) throw std::invalid_argument("laguerre: alpha must be >= 0");
  if (n > 100) throw std::invalid_argument("laguerre: degree capped at 100");
  return OrthoPoly(PolyFamily::Laguerre, n, alpha);
}

int OrthoPoly::degree() const {
  switch (family_) {
    case PolyFamily::Hermite: return a_;
    case PolyFamily::ReducedLegendre: return a_ - b_;
    case PolyFamily::Laguerre: return a_;
  }
  return -1;
}

Complex OrthoPoly::eval(Complex z) const {
  if (is_zero()) return {0.0, 0.0};
  switch (family_) {
    case PolyFamily::Hermite: {
      const int n = a_;
      Complex pm1 = 1.0, p = 2.0 * z;  // H_0, H_1
      if (n == 0) return pm1;
      for (int k = 1; k < n; ++k) {
        Complex next = 2.0 * z * p - 2.0 * double(k) * pm1;
        pm1 = p;
        p = next;
      }
      return p;
    }
    case PolyFamily::ReducedLegendre: {
      const int m = b_;
      Complex pm1 = 0.0;                        // Q_{m-1,m}
      Complex p = double_factorial_odd(m);      // Q_{m,m} = (2m-1)!!
      for (int L = m; L < a_; ++L) {
        Complex next = ((2.0 * L + 1.0) * z * p - double(L + m) * pm1) / double(L - m + 1);
        pm1 = p;
        p = next;
      }
      return p;
    }
    case PolyFamily::Laguerre: {
      const int n = a_, alpha = b_;
      Complex pm1 = 0.0, p = 1.0;  // L_{-1}, L_0
      for (int k = 0; k < n; ++k) {
        Complex next = ((2.0 * k + 1.0 + alpha - z) * p - double(k + alpha) * pm1) / double(k + 1);
        pm1 = p;
        p = next;
      }
      return p;
    }
  }
  return {0.0, 0.0};
}

Complex OrthoPoly::eval_derivative(Complex z) const {
  if (is_zero()) return {0.0, 0.0};
  switch (family_) {
    case PolyFamily::Hermite:
      return a_ == 0 ? Complex{0.0, 0.0}
                     : 2.0 * double(a_) * hermite(a_ - 1).eval(z);
    case PolyFamily::ReducedLegendre: {
      const int m = b_;
      Complex pm1 = 0.0, p = double_factorial_odd(m);
      Complex dm1 = 0.0, d = 0.0;  // the starting values are constants
      for (int L = m; L < a_; ++L) {
        const double c1 = 2.0 * L + 1.0, c2 = double(L + m), c3 = double(L - m + 1);
        Complex next = (c1 * z * p - c2 * pm1) / c3;
        Complex dnext = (c1 * (p + z * d) - c2 * dm1) / c3;
        pm1 = p; p = next;
        dm1 = d; d = dnext;
      }
      return d;
    }
    case PolyFamily::Laguerre:
      return a_ <= 0 ? Complex{0.0, 0.0}
                     : -laguerre(a_ - 1, b_ + 1).eval(z);
  }
  return {0.0, 0.0};
}

Complex OrthoPoly::eval_second_derivative(Complex z) const {
  if (is_zero()) return {0.0, 0.0};
  switch (family_) {
    case PolyFamily::Hermite:
      return a_ <= 1 ? Complex{0.0, 0.0}
                     : 4.0 * double(a_) * double(a_ - 1) * hermite(a_ - 2).eval(z);
    case PolyFamily::ReducedLegendre: {
      const int m = b_;
      Complex pm1 = 0.0, p = double_factorial_odd(m);
      Complex dm1 = 0.0, d = 0.0;
      Complex em1 = 0.0, e = 0.0;
      for (int L = m; L < a_; ++L) {
        const double c1 = 2.0 * L + 1.0, c2 = double(L + m), c3 = double(L - m + 1);
        Complex next = (c1 * z * p - c2 * pm1) / c3;
        Complex dnext = (c1 * (p + z * d) - c2 * dm1) / c3;
        Complex enext = (c1 * (2.0 * d + z * e) - c2 * em1) / c3;
        pm1 = p; p = next;
        dm1 = d; d = dnext;
        em1 = e; e = enext;
      }
      return e;
    }
    case PolyFamily::Laguerre:
      return a_ <= 1 ? Complex{0.0, 0.0}
                     : laguerre(a_ - 2, b_ + 2).eval(z);
  }
  return {0.0, 0.0};
}

RootSet OrthoPoly::roots() const {
  const int d = degree();
  if (d < 0) throw std::invalid_argument("roots: the zero polynomial has no well-defined root set");
  RootSet out;
  if (d == 0) return out;

  // Jacobi matrix of the orthonormalized recurrence; its eigenvalues are
  // the polynomial's roots (Golub-Welsch, eigenvalues only).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd sub = Eigen::VectorXd::Zero(d > 1 ? d - 1 : 1);
  switch (family_) {
    case PolyFamily::Hermite:
      for (int k = 1; k < d; ++k) sub[k - 1] = std::sqrt(0.5 * k);
      break;
    case PolyFamily::ReducedLegendre: {
      const double m = b_;
      for (int j = 1; j < d; ++j)
        sub[j - 1] = std::sqrt(j * (j + 2.0 * m) /
                               ((2.0 * j + 2.0 * m - 1.0) * (2.0 * j + 2.0 * m + 1.0)));
      break;
    }
    case PolyFamily::Laguerre: {
      const double alpha = b_;
      for (int k = 0; k < d; ++k) diag[k] = 2.0 * k + alpha + 1.0;
      for (int k = 1; k < d; ++k) sub[k - 1] = std::sqrt(k * (k + alpha));
      break;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(std::max(d - 1, 0)), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("roots: tridiagonal eigenvalue iteration failed");

  out.roots.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + d);

  // Newton polish; eigenvalues are already accurate, five steps at most.
  double worst = 0.0;
  for (double& x : out.roots) {
    for (int it = 0; it < 5; ++it) {
      const double f = eval(Complex(x, 0.0)).real();
      const double df = eval_derivative(Complex(x, 0.0)).real();
      if (df == 0.0) break;
      const double step = f / df;
      x -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(x))) break;
    }
    worst = std::max(worst, std::abs(eval(Complex(x, 0.0)).real()));
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.refined_residual = worst;
  return out;
}

}  // namespace qhj
