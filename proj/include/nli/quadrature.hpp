#pragma once

#include <array>
#include <cmath>

namespace nli::quadrature {

/// Three-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree <= 5.
struct GaussLegendre3 {
  static constexpr std::array<double, 3> points = {-0.77459666924148337704, 0.0,
                                                   0.77459666924148337704};
  static constexpr std::array<double, 3> weights = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
};

/// Calls fn(x, w) for the three Gauss points of [lo, hi] mapped from [-1, 1].
template <typename Fn>
inline void for_each_gauss_point(double lo, double hi, Fn&& fn) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  for (std::size_t k = 0; k < 3; ++k) {
    fn(mid + half * GaussLegendre3::points[k], half * GaussLegendre3::weights[k]);
  }
}

/// Composite three-point Gauss-Legendre over `panels` equal sub-intervals of [lo, hi].
template <typename Fn>
inline double integrate_composite(double lo, double hi, int panels, Fn&& fn) {
  const double width = (hi - lo) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * width;
    const double b = (p + 1 == panels) ? hi : a + width;
    for_each_gauss_point(a, b, [&](double x, double w) { sum += w * fn(x); });
  }
  return sum;
}

}  // namespace nli::quadrature
