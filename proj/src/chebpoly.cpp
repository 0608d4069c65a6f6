#include "tfrde/chebpoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace tfrde {

namespace {

std::vector<double> trimmed(std::vector<double> c) {
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
  if (c.empty()) c.push_back(0.0);
  return c;
}

}  // namespace

Poly::Poly(Interval iv, std::vector<double> coeffs)
    : iv_(iv), coeffs_(trimmed(std::move(coeffs))) {}

Poly Poly::zero(const Interval& iv) { return Poly(iv, {0.0}); }

Poly Poly::constant(const Interval& iv, double value) { return Poly(iv, {value}); }

Poly Poly::identity(const Interval& iv) {
  // x = (a+b)/2 + (b-a)/2 T*_1(x)
  return Poly(iv, {iv.midpoint(), 0.5 * iv.length()});
}

Poly Poly::chebyshev(const Interval& iv, int k) {
  if (k < 0) throw std::invalid_argument("chebyshev: k >= 0 required");
  std::vector<double> c(k + 1, 0.0);
  c[k] = 1.0;
  return Poly(iv, std::move(c));
}

bool Poly::is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

double Poly::eval(double x) const {
  const double u = iv_.to_unit(x);
  double b1 = 0.0, b2 = 0.0;
  for (int k = degree(); k >= 1; --k) {
    const double bk = coeffs_[k] + 2.0 * u * b1 - b2;
    b2 = b1;
    b1 = bk;
  }
  return coeffs_[0] + u * b1 - b2;
}

std::vector<double> Poly::derivs_at(double x, int max_order) const {
  std::vector<double> out;
  out.reserve(max_order + 1);
  Poly cur = *this;
  out.push_back(cur.eval(x));
  for (int q = 1; q <= max_order; ++q) {
    cur = cur.derivative();
    out.push_back(cur.eval(x));
  }
  return out;
}

Poly Poly::derivative() const {
  const int d = degree();
  if (d == 0) return zero(iv_);
  // Chebyshev derivative recurrence, then chain-rule factor 2/(b-a).
  std::vector<double> b(d + 2, 0.0);
  for (int k = d; k >= 1; --k) b[k - 1] = b[k + 1] + 2.0 * k * coeffs_[k];
  b[0] *= 0.5;
  b.resize(d);
  const double scale = 2.0 / iv_.length();
  for (double& v : b) v *= scale;
  return Poly(iv_, std::move(b));
}

void Poly::require_same_interval(const Poly& o) const {
  if (!iv_.same_as(o.iv_)) throw std::invalid_argument("Poly: interval mismatch");
}

Poly Poly::operator+(const Poly& o) const {
  require_same_interval(o);
  std::vector<double> c(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return Poly(iv_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
  require_same_interval(o);
  std::vector<double> c(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return Poly(iv_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  require_same_interval(o);
  if (is_zero() || o.is_zero()) return zero(iv_);
  // T_i T_j = (T_{i+j} + T_{|i-j|}) / 2
  std::vector<double> c(coeffs_.size() + o.coeffs_.size() - 1, 0.0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0.0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      const double w = 0.5 * coeffs_[i] * o.coeffs_[j];
      c[i + j] += w;
      c[static_cast<size_t>(std::abs(static_cast<long>(i) - static_cast<long>(j)))] += w;
    }
  }
  return Poly(iv_, std::move(c));
}

Poly Poly::operator*(double s) const {
  std::vector<double> c = coeffs_;
  for (double& v : c) v *= s;
  return Poly(iv_, std::move(c));
}

double cheb_eval(int k, double x, const Interval& iv) {
  if (k < 0) throw std::invalid_argument("cheb_eval: k >= 0 required");
  const double u = iv.to_unit(x);
  if (k == 0) return 1.0;
  double tm = 1.0, t = u;
  for (int j = 2; j <= k; ++j) {
    const double tn = 2.0 * u * t - tm;
    tm = t;
    t = tn;
  }
  return t;
}

double cheb_deriv_at_zero(int k, int q, const Interval& iv) {
  if (q < 1) throw std::invalid_argument("cheb_deriv_at_zero: q >= 1 required");
  if (q > k) return 0.0;
  // T*^(q)_k(0) = k (-1)^(k-q) q! (k+q-1)! (4/L)^q / ((2q)! (k-q)!)
  //               * 2F1(q-k, k+q; q+1/2; a/(a-b)),
  // the 2F1 terminating after k-q+1 terms.
  const long double w = static_cast<long double>(iv.a) / (iv.a - iv.b);
  long double f = 1.0L, term = 1.0L;
  for (int j = 0; j < k - q; ++j) {
    term *= (static_cast<long double>(q - k + j) * (k + q + j)) /
            ((q + 0.5L + j) * (j + 1));
    term *= w;
    f += term;
  }
  const long double logpre = std::lgammal(q + 1.0L) + std::lgammal(k + q + 0.0L) -
                             std::lgammal(2.0L * q + 1.0L) - std::lgammal(k - q + 1.0L) +
                             q * std::logl(4.0L / iv.length());
  const long double sign = ((k - q) % 2 == 0) ? 1.0L : -1.0L;
  return static_cast<double>(k * sign * std::expl(logpre) * f);
}

}  // namespace tfrde
