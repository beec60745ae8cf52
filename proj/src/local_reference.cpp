#include "nli/local_reference.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "nli/errors.hpp"
#include "nli/geometry.hpp"
#include "nli/quadrature.hpp"
#include "nli/solver.hpp"

namespace nli {

namespace {

using Mat4 = std::array<std::array<double, 5>, 4>;  // augmented

std::array<double, 4> solve4(Mat4 m) {
  for (std::size_t c = 0; c < 4; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < 4; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    }
    std::swap(m[c], m[piv]);
    for (std::size_t r = c + 1; r < 4; ++r) {
      const double factor = m[r][c] / m[c][c];
      for (std::size_t k = c; k < 5; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  std::array<double, 4> x{};
  for (std::size_t r = 4; r-- > 0;) {
    double s = m[r][4];
    for (std::size_t k = r + 1; k < 4; ++k) s -= m[r][k] * x[k];
    x[r] = s / m[r][r];
  }
  return x;
}

}  // namespace

LocalSolution local_exact(const Material& material, const SourceTerm& f, double a,
                          double x_gamma, double b) {
  material.validate();
  if (!(a < x_gamma && x_gamma < b)) throw InvalidArgument("local problem needs a < x_gamma < b");
  const double k1 = material.kappa1;
  const double k2 = material.kappa2;
  const double p2 = -f.f1 / (2.0 * k1);
  const double q2 = -f.f2 / (2.0 * k2);
  const double xg = x_gamma;

  // Unknowns: p0, p1 (left piece), q0, q1 (right piece).
  const Mat4 m = {{
      {1.0, a, 0.0, 0.0, -p2 * a * a},
      {0.0, 0.0, 1.0, b, -q2 * b * b},
      {1.0, xg, -1.0, -xg, (q2 - p2) * xg * xg},
      {0.0, k1, 0.0, -k2, 2.0 * xg * (k2 * q2 - k1 * p2)},
  }};
  const auto s = solve4(m);
  return LocalSolution{{s[0], s[1], p2}, {s[2], s[3], q2}, a, x_gamma, b};
}

double LocalFemSolution::operator()(double x) const {
  if (x <= nodes.front()) return values.front();
  if (x >= nodes.back()) return values.back();
  const auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
  const std::size_t e = static_cast<std::size_t>(it - nodes.begin()) - 1;
  const double t = (x - nodes[e]) / (nodes[e + 1] - nodes[e]);
  return (1.0 - t) * values[e] + t * values[e + 1];
}

LocalFemSolution local_fem_solve(const Material& material, const SourceTerm& f, double a,
                                 double x_gamma, double b, double h) {
  material.validate();
  // Reuse the mesh generator for the commensurability checks; the constraint
  // layers are not needed, so give them a single element each.
  const DomainLayout layout{a, x_gamma, b, h, h};
  const Mesh1D mesh(layout, h);
  const auto all = mesh.nodes();
  const std::size_t first = mesh.elements_in(Region::Gamma1);
  const std::size_t last = all.size() - 1 - mesh.elements_in(Region::Gamma2);

  LocalFemSolution sol;
  sol.nodes.assign(all.begin() + first, all.begin() + last + 1);
  const std::size_t n = sol.nodes.size();
  const std::size_t interior = n - 2;
  BandedSymmetricMatrix k(interior, 1);
  std::vector<double> rhs(interior, 0.0);

  for (std::size_t e = 0; e + 1 < n; ++e) {
    const double x0 = sol.nodes[e];
    const double x1 = sol.nodes[e + 1];
    const bool left = 0.5 * (x0 + x1) < x_gamma;
    const double kappa = left ? material.kappa1 : material.kappa2;
    const double fv = left ? f.f1 : f.f2;
    const double stiff = kappa / (x1 - x0);
    double load0 = 0.0, load1 = 0.0;
    quadrature::for_each_gauss_point(x0, x1, [&](double x, double w) {
      const double t = (x - x0) / (x1 - x0);
      load0 += w * fv * (1.0 - t);
      load1 += w * fv * t;
    });
    // Interior unknown index of node i is i - 1.
    const bool in0 = e >= 1;
    const bool in1 = e + 1 <= n - 2;
    if (in0) {
      k.add(e - 1, e - 1, stiff);
      rhs[e - 1] += load0;
    }
    if (in1) {
      k.add(e, e, stiff);
      rhs[e] += load1;
    }
    if (in0 && in1) k.add(e, e - 1, -stiff);
  }

  const auto u = BandedCholeskyFactor::factor(k).solve(rhs);
  sol.values.assign(n, 0.0);
  std::copy(u.begin(), u.end(), sol.values.begin() + 1);
  return sol;
}

double local_fem_l2_error(const LocalFemSolution& fem, const LocalSolution& exact) {
  double sum = 0.0;
  for (std::size_t e = 0; e + 1 < fem.nodes.size(); ++e) {
    const double x0 = fem.nodes[e];
    const double x1 = fem.nodes[e + 1];
    quadrature::for_each_gauss_point(x0, x1, [&](double x, double w) {
      const double t = (x - x0) / (x1 - x0);
      const double d = (1.0 - t) * fem.values[e] + t * fem.values[e + 1] - exact(x);
      sum += w * d * d;
    });
  }
  return std::sqrt(sum);
}

}  // namespace nli
