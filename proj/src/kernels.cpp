#include "nli/kernels.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include "nli/errors.hpp"

namespace nli {

void Material::validate() const {
  if (!(kappa1 > 0.0) || !(kappa2 > 0.0) || !std::isfinite(kappa1) || !std::isfinite(kappa2)) {
    throw InvalidArgument("diffusivities must be finite and strictly positive");
  }
}

std::string_view to_string(KernelFamily f) {
  switch (f) {
    case KernelFamily::K1: return "k1";
    case KernelFamily::K2: return "k2";
    case KernelFamily::K3: return "k3";
    case KernelFamily::K4: return "k4";
  }
  return "?";
}

std::optional<KernelFamily> parse_kernel_family(std::string_view s) {
  if (s.size() != 2 || std::tolower(static_cast<unsigned char>(s[0])) != 'k') return std::nullopt;
  switch (s[1]) {
    case '1': return KernelFamily::K1;
    case '2': return KernelFamily::K2;
    case '3': return KernelFamily::K3;
    case '4': return KernelFamily::K4;
    default: return std::nullopt;
  }
}

Kernel Kernel::scaled(double s) const {
  Kernel k = *this;
  k.c11 *= s;
  k.c12 *= s;
  k.c21 *= s;
  k.c22 *= s;
  return k;
}

Kernel make_kernel(KernelFamily family, const Material& material, const DomainLayout& layout) {
  material.validate();
  layout.validate();
  const double k1 = material.kappa1;
  const double k2 = material.kappa2;
  const double d1 = layout.delta1 * layout.delta1 * layout.delta1;
  const double d2 = layout.delta2 * layout.delta2 * layout.delta2;

  Kernel k;
  k.delta1 = layout.delta1;
  k.delta2 = layout.delta2;
  k.layout = layout;
  k.c11 = 1.5 * k1 / d1;
  k.c22 = 1.5 * k2 / d2;
  switch (family) {
    case KernelFamily::K1:
      k.c12 = 1.5 * k2 / d1;
      k.c21 = 1.5 * k1 / d2;
      break;
    case KernelFamily::K2:
      k.c12 = 1.5 * k1 / d1;
      k.c21 = 1.5 * k2 / d2;
      break;
    case KernelFamily::K3:
      k.c12 = 0.75 * (k1 / d1 + k2 / d2);
      k.c21 = k.c12;
      break;
    case KernelFamily::K4:
      k.c12 = 0.75 * (k1 + k2) / d1;
      k.c21 = 0.75 * (k1 + k2) / d2;
      break;
  }
  return k;
}

double kernel_eval(const Kernel& k, double x, double y, Side x_interface_side,
                   Side y_interface_side) {
  const Side p = side_of(k.layout.classify(x, x_interface_side));
  const Side q = side_of(k.layout.classify(y, y_interface_side));
  return kernel_eval(k, p, q, std::abs(x - y));
}

KernelConstants2D kernel_constants_2d(const Material& material, double delta1, double delta2) {
  material.validate();
  if (!(delta1 > 0.0) || !(delta2 > 0.0)) throw InvalidArgument("horizons must be positive");
  constexpr double four_over_pi = 4.0 / std::numbers::pi;
  KernelConstants2D c;
  c.c11_2d = four_over_pi * material.kappa1 / std::pow(delta1, 4);
  c.c22_2d = four_over_pi * material.kappa2 / std::pow(delta2, 4);
  c.ctilde12 = four_over_pi * material.kappa2;
  c.ctilde21 = four_over_pi * material.kappa1;
  c.beta = -4;
  return c;
}

}  // namespace nli
