#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "nli/banded_matrix.hpp"
#include "nli/geometry.hpp"
#include "nli/kernels.hpp"
#include "nli/polynomial.hpp"
#include "nli/quadrature.hpp"

namespace nli {

/// Piecewise-constant source, one value per material side.
struct SourceTerm {
  double f1 = 1.0;
  double f2 = 1.0;

  static SourceTerm constant(double f) { return {f, f}; }
  double value(Side s) const { return s == Side::Left ? f1 : f2; }
};

/// Volume-constraint data: g1 on Gamma_1 and g2 on Gamma_2.
struct ConstraintData {
  Quadratic g1;
  Quadratic g2;

  static ConstraintData constant(double c) { return {{c, 0.0, 0.0}, {c, 0.0, 0.0}}; }
};

using LoadVector = std::vector<double>;

/// One quadrature sample of the double integral over (Omega u Gamma~)^2.
struct InteractionSample {
  const Element& outer;
  double x;
  double wx;
  const Element& inner;
  double y;
  double wy;
  double amplitude;  // gamma(x, y), already truncated
};

/// Visits three Gauss points on every piece of (Omega u Gamma~) intersected with
/// [x - radius, x + radius], the interval being split at element boundaries and
/// at both ball endpoints. Calls fn(element, y, wy).
template <typename Fn>
void for_each_ball_point(const Mesh1D& mesh, double x, double radius, Fn&& fn) {
  const auto nodes = mesh.nodes();
  const double lo = std::max(x - radius, nodes.front());
  const double hi = std::min(x + radius, nodes.back());
  const auto elements = mesh.elements();
  for (std::size_t f = mesh.locate(lo); f < elements.size() && elements[f].x0 < hi; ++f) {
    const Element& ey = elements[f];
    const double s0 = std::max(lo, ey.x0);
    const double s1 = std::min(hi, ey.x1);
    if (!(s1 > s0)) continue;
    quadrature::for_each_gauss_point(s0, s1, [&](double y, double wy) { fn(ey, y, wy); });
  }
}

/// Inner quadrature for a fixed outer point x on side `x_side`: the ball has the
/// x-side horizon and the amplitude follows the side of each inner element.
/// Calls fn(inner_element, y, wy, amplitude).
template <typename Fn>
void for_each_inner_point(const Mesh1D& mesh, const Kernel& kernel, double x, Side x_side,
                          Fn&& fn) {
  for_each_ball_point(mesh, x, kernel.horizon(x_side), [&](const Element& ey, double y,
                                                           double wy) {
    fn(ey, y, wy, kernel.amplitude(x_side, ey.side()));
  });
}

/// Visits every (outer, inner) quadrature pair of the stiffness double integral:
/// three Gauss points per outer element, split inner rule as above.
template <typename Fn>
void for_each_interaction(const Mesh1D& mesh, const Kernel& kernel, Fn&& fn) {
  for (const Element& ex : mesh.elements()) {
    const Side p = ex.side();
    quadrature::for_each_gauss_point(ex.x0, ex.x1, [&](double x, double wx) {
      for_each_inner_point(mesh, kernel, x, p, [&](const Element& ey, double y, double wy,
                                                   double c) {
        fn(InteractionSample{ex, x, wx, ey, y, wy, c});
      });
    });
  }
}

/// Half bandwidth that holds every possible nonzero of the stiffness matrix.
std::size_t stiffness_half_bandwidth(const Mesh1D& mesh, const Kernel& kernel);

/// A_ij = int int gamma(x,y) (phi_j(x) - phi_j(y)) (phi_i(x) - phi_i(y)) dy dx over
/// (Omega u Gamma~)^2, including the rows of constrained DOFs.
BandedSymmetricMatrix assemble_stiffness(const Mesh1D& mesh, const Kernel& kernel);

/// f_i = int_Omega f phi_i dx (constraint layers excluded).
LoadVector assemble_load(const Mesh1D& mesh, const SourceTerm& f);

/// Reduced system over the free DOFs after eliminating the volume constraint.
struct ConstrainedSystem {
  BandedSymmetricMatrix matrix;
  std::vector<double> rhs;
  std::vector<std::size_t> constrained_dofs;
  std::vector<double> constrained_values;
  std::vector<std::size_t> free_dofs;  // free index -> global DOF
  std::size_t full_dim = 0;

  /// Global coefficient vector from the free-DOF solution plus prescribed values.
  std::vector<double> expand(std::span<const double> free_values) const;
};

/// True for DOFs whose node lies in the closed constraint layers.
bool is_constrained_dof(const Mesh1D& mesh, std::size_t dof);

/// Value prescribed at a constrained DOF (g1 on Gamma_1, g2 on Gamma_2).
double constraint_value(const Mesh1D& mesh, const ConstraintData& g, std::size_t dof);

ConstrainedSystem apply_constraints(const BandedSymmetricMatrix& a, std::span<const double> f,
                                    const Mesh1D& mesh, const ConstraintData& g);

}  // namespace nli
