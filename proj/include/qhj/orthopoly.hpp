#pragma once

#include <complex>
#include <vector>

namespace qhj {

using Complex = std::complex<double>;

enum class PolyFamily { Hermite, ReducedLegendre, Laguerre };

/// Real roots of an orthogonal polynomial, sorted ascending.
struct RootSet {
  std::vector<double> roots;
  double refined_residual = 0.0;  // max |p(root)| after Newton refinement

  int count() const { return static_cast<int>(roots.size()); }
};

/// One member of the three polynomial families behind the momentum
/// functions:
///
///   Hermite          H_n           (physicists' convention)
///   ReducedLegendre  Q_{l,|m|}(x) = P_l^{|m|}(x) / (1-x^2)^{|m|/2}
///                    (Ferrers, no Condon-Shortley phase; a true
///                    polynomial of degree l-|m|)
///   Laguerre         L_n^alpha     (associated, integer alpha >= 0)
///
/// Degree -1 members (ReducedLegendre with l = |m|-1, Laguerre with
/// n = -1) stand for the identically-zero polynomial; eval and
/// eval_derivative return 0 for them.
class OrthoPoly {
 public:
  static OrthoPoly hermite(int n);
  static OrthoPoly reduced_legendre(int ell, int m_abs);
  static OrthoPoly laguerre(int n, int alpha);

  PolyFamily family() const { return family_; }
  int degree() const;
  bool is_zero() const { return degree() < 0; }

  /// Value at z by forward three-term recurrence.
  Complex eval(Complex z) const;

  /// Exact derivative from the family's derivative identity:
  ///   H_n'        = 2n H_{n-1}
  ///   dL_n^a/dz   = -L_{n-1}^{a+1}
  ///   Q_{l,m}'    : the l-recurrence differentiated term by term, which
  ///                 is the polynomial form of
  ///                 (1-x^2) dP_l^m/dx = -l x P_l^m + (l+m) P_{l-1}^m
  Complex eval_derivative(Complex z) const;

  /// Exact second derivative (iterated identities); used by the
  /// linear-form consistency checks.
  Complex eval_second_derivative(Complex z) const;

  /// All roots, computed as eigenvalues of the family's symmetric
  /// tridiagonal Jacobi matrix and then Newton-polished with
  /// eval/eval_derivative.  Degree 0 gives an empty set; calling this
  /// on the zero polynomial is an error.
  RootSet roots() const;

 private:
  OrthoPoly(PolyFamily f, int a, int b) : family_(f), a_(a), b_(b) {}

  PolyFamily family_;
  int a_;  // Hermite n / Legendre l / Laguerre n
  int b_;  // Legendre |m| / Laguerre alpha
};

}  // namespace qhj
