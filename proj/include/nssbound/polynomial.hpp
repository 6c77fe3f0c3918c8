#pragma once

#include <span>
#include <vector>

#include "nssbound/types.hpp"

namespace nssbound {

/// Real polynomial of degree at most 4, coefficients in ascending order.
class RealPolynomial {
 public:
  static constexpr int kMaxDegree = 4;

  /// The zero polynomial.
  RealPolynomial() = default;

  /// Trailing (highest-degree) coefficients below 1e-14 relative to the
  /// largest one are dropped. Throws InvalidArgument above degree 4.
  explicit RealPolynomial(std::vector<double> ascending);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const double> coefficients() const { return coeffs_; }
  double coefficient(int power) const;
  double max_abs_coefficient() const;

  double operator()(double x) const;
  RealPolynomial derivative() const;

 private:
  std::vector<double> coeffs_;
};

struct PhysicalRoots {
  std::vector<double> roots;  // ascending
  std::vector<int> multiplicities;
};

/// Real-T quartic for the two-weight ancilla (m, n):
/// T^4 (m+1)(n+1) - T^3 (m+n+3) - T^2 (m+n+2mn+1) + T (m+n-1) + mn.
RealPolynomial quartic_real(int m, int n);

/// The complex-T condition for the two-weight ancilla. It mixes T* and |T|^2,
/// so it is evaluated rather than solved:
/// |T|^4 (m+1)(n+1) - |T|^2 T* (m+n+3) - 2 T*^2 - |T|^2 (m+n+2mn-1) + T* (m+n-1) + mn.
Complex quartic_complex(int m, int n, Complex t);

/// The same condition written with Jacobi polynomials at 2|T|^2 - 1
/// (left-hand side minus right-hand side). Needs m, n >= 0.
Complex jacobi_constraint(int m, int n, Complex t);

/// All real roots in [-1, 1]: critical points of the derivative split the
/// interval into monotone pieces, sign changes are bisected to full
/// precision, touching roots are taken at critical points. Roots closer
/// than 1e-9 are merged; multiplicities come from derivative residuals at
/// 1e-8. Throws DegenerateError for the zero polynomial and InvalidArgument
/// for a non-zero constant.
PhysicalRoots solve_physical_roots(const RealPolynomial& p);

/// Number of distinct real roots in (a, b] from a Sturm sequence.
int sturm_root_count(const RealPolynomial& p, double a, double b);

struct AdjacentRoots {
  double t_plus = 0.0;   // +sqrt(n / (n + 2))
  double t_minus = 0.0;  // -sqrt(n / (n + 2))
  double t3 = 0.0;       // (1 - sqrt(n^2 + 2n + 2)) / (n + 1)
};

/// Physical roots of quartic_real(n + 1, n) in closed form.
AdjacentRoots closed_form_adjacent(int n);

/// quartic_real(0, n) / ((n + 1) T):
/// T^3 - (n+3)/(n+1) T^2 - T + (n-1)/(n+1). Requires n >= 1.
RealPolynomial cubic_m_zero(int n);

}  // namespace nssbound
