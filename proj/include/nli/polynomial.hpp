#pragma once

namespace nli {

/// c0 + c1*x + c2*x^2
struct Quadratic {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;

  constexpr double operator()(double x) const { return c0 + x * (c1 + x * c2); }
  constexpr double derivative(double x) const { return c1 + 2.0 * c2 * x; }
  constexpr double second_derivative() const { return 2.0 * c2; }

  friend constexpr bool operator==(const Quadratic&, const Quadratic&) = default;
};

}  // namespace nli
