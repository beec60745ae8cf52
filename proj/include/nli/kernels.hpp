#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "nli/geometry.hpp"

namespace nli {

/// Constant diffusivities of the two materials.
struct Material {
  double kappa1 = 1.0;
  double kappa2 = 3.0;

  void validate() const;
};

/// The four choices for the cross-interface amplitudes C12, C21.
///
///  K1: C12 = 3/2 kappa2/delta1^3,           C21 = 3/2 kappa1/delta2^3
///  K2: C12 = 3/2 kappa1/delta1^3,           C21 = 3/2 kappa2/delta2^3
///  K3: C12 = C21 = 3/4 (kappa1/delta1^3 + kappa2/delta2^3)
///  K4: C12 = 3/4 (kappa1+kappa2)/delta1^3,  C21 = 3/4 (kappa1+kappa2)/delta2^3
enum class KernelFamily { K1, K2, K3, K4 };

std::string_view to_string(KernelFamily f);
/// Accepts "k1".."k4" (case-insensitive).
std::optional<KernelFamily> parse_kernel_family(std::string_view s);

/// Piecewise-constant kernel truncated by the horizon of the x side:
///
///   gamma(x, y) = C_pq * chi(|x - y| <= delta_p),  p = side(x), q = side(y).
///
/// Same-side amplitudes are C11 = 3/2 kappa1/delta1^3 and C22 = 3/2 kappa2/delta2^3.
struct Kernel {
  double c11 = 0.0;
  double c12 = 0.0;
  double c21 = 0.0;
  double c22 = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  DomainLayout layout;

  double amplitude(Side x_side, Side y_side) const {
    if (x_side == Side::Left) return y_side == Side::Left ? c11 : c12;
    return y_side == Side::Left ? c21 : c22;
  }
  double horizon(Side x_side) const { return x_side == Side::Left ? delta1 : delta2; }
  double max_horizon() const { return delta1 > delta2 ? delta1 : delta2; }

  /// Kernel with every amplitude multiplied by s.
  Kernel scaled(double s) const;
};

/// Builds a kernel for `layout`, whose horizons must be delta1 and delta2.
Kernel make_kernel(KernelFamily family, const Material& material, const DomainLayout& layout);

/// Point evaluation. Sides come from the region of each point; `x_interface_side`
/// and `y_interface_side` resolve points sitting exactly on x_gamma.
double kernel_eval(const Kernel& k, double x, double y, Side x_interface_side = Side::Left,
                   Side y_interface_side = Side::Left);

/// Evaluation with sides supplied by the caller (element labels during quadrature).
inline double kernel_eval(const Kernel& k, Side x_side, Side y_side, double distance) {
  return distance <= k.horizon(x_side) ? k.amplitude(x_side, y_side) : 0.0;
}

/// Amplitudes for the two-dimensional local limit:
/// C_ii = 4 kappa_i / (pi delta_i^4) and C_ij = Ctilde_ij / delta_i^4 with
/// Ctilde_12 = 4 kappa2 / pi, Ctilde_21 = 4 kappa1 / pi, and scaling exponent -4.
struct KernelConstants2D {
  double c11_2d = 0.0;
  double c22_2d = 0.0;
  double ctilde12 = 0.0;
  double ctilde21 = 0.0;
  int beta = -4;
};

KernelConstants2D kernel_constants_2d(const Material& material, double delta1, double delta2);

}  // namespace nli
