#pragma once

#include <cmath>
#include <stdexcept>

namespace tfrde {

/// Closed spatial interval [a, b] with a < b.
struct Interval {
  double a = 0.0;
  double b = 1.0;

  Interval() = default;
  Interval(double a_, double b_) : a(a_), b(b_) {
    if (!(a < b)) throw std::invalid_argument("Interval: requires a < b");
  }

  double length() const { return b - a; }
  double midpoint() const { return 0.5 * (a + b); }

  /// Affine map [a,b] -> [-1,1].
  double to_unit(double x) const { return (2.0 * x - a - b) / (b - a); }
  /// Affine map [-1,1] -> [a,b].
  double from_unit(double u) const { return 0.5 * ((b - a) * u + a + b); }

  bool same_as(const Interval& o) const { return a == o.a && b == o.b; }
};

}  // namespace tfrde
