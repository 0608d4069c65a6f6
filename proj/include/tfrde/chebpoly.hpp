#pragma once

#include <vector>

#include "tfrde/interval.hpp"

namespace tfrde {

/// Polynomial stored as shifted-Chebyshev coefficients on an interval,
/// p(x) = sum_k c[k] T*_k(x; a, b). Immutable after construction.
///
/// Degrees in this project stay below ~30, so all algebra is direct O(d^2);
/// evaluation uses Clenshaw's recurrence on the mapped argument, which is
/// also valid outside [a, b].
class Poly {
 public:
  Poly(Interval iv, std::vector<double> coeffs);

  static Poly zero(const Interval& iv);
  static Poly constant(const Interval& iv, double value);
  /// The identity polynomial p(x) = x.
  static Poly identity(const Interval& iv);
  /// The shifted Chebyshev polynomial T*_k on iv.
  static Poly chebyshev(const Interval& iv, int k);

  const Interval& interval() const { return iv_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  /// Degree of the stored expansion (0 for constants, including zero).
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const;

  double eval(double x) const;
  /// Values of p, p', ..., p^(max_order) at x.
  std::vector<double> derivs_at(double x, int max_order) const;

  Poly derivative() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(double s) const;

 private:
  void require_same_interval(const Poly& o) const;

  Interval iv_;
  std::vector<double> coeffs_;
};

/// T*_k(x; a, b) by the three-term recurrence on the mapped argument
/// (equals cos(k arccos(.)) on [a, b], polynomial extension outside).
double cheb_eval(int k, double x, const Interval& iv);

/// q-th derivative of T*_k at the global point 0 via the terminating
/// hypergeometric closed form. Requires q >= 1; returns 0 for q > k.
double cheb_deriv_at_zero(int k, int q, const Interval& iv);

}  // namespace tfrde
