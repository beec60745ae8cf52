#pragma once

#include <functional>
#include <span>
#include <vector>

#include "nli/analysis.hpp"
#include "nli/assembly.hpp"
#include "nli/geometry.hpp"
#include "nli/kernels.hpp"
#include "nli/nonlocal_problem.hpp"

namespace nli {

using ScalarFunction2D = std::function<double(double, double)>;

/// Axis-aligned box [x0, x1] x [y0, y1].
struct Box {
  double x0, x1, y0, y1;
};

/// L u(x) = 2 C int_{|y - x| < delta} (u(y) - u(x)) dy in one dimension.
/// Composite rule: 32 panels x 3 Gauss points over the ball. Throws
/// QuadratureDomainClipped if the ball leaves `domain`.
double nonlocal_operator_apply_1d(const ScalarFunction& u, double x, double amplitude,
                                  double delta, Interval domain);

/// Two-dimensional version over the disk, in polar coordinates: 32 radial
/// panels x 64 angular panels, three Gauss points each way.
double nonlocal_operator_apply_2d(const ScalarFunction2D& u, double x, double y,
                                  double amplitude, double delta, Box domain);

/// Smooth test function with its Laplacian, for operator-limit studies.
struct TestFunction1D {
  ScalarFunction value;
  ScalarFunction laplacian;
};

struct TestFunction2D {
  ScalarFunction2D value;
  ScalarFunction2D laplacian;
};

/// Rows (delta, 0, |L_delta u(x) - kappa u''(x)|, order) with C = 3/2 kappa/delta^3.
StudyReport operator_limit_study_1d(const TestFunction1D& u, double kappa, double x,
                                    std::span<const double> deltas);

/// Rows (delta, 0, |L_delta u(x,y) - kappa Lap u(x,y)|, order) with
/// C = 4 kappa / (pi delta^4).
StudyReport operator_limit_study_2d(const TestFunction2D& u, double kappa, double x, double y,
                                    std::span<const double> deltas);

/// The two 2D moment conditions evaluated by quadrature at a given delta:
///   first  = pi Ctilde delta^beta int_0^delta rho^3 drho    (must equal kappa)
///   second = 2 pi Ctilde delta^beta delta^3 int_0^delta rho drho  (must vanish as delta -> 0)
struct MomentConditions {
  double first = 0.0;
  double second = 0.0;
};

MomentConditions moment_conditions_2d(double ctilde, int beta, double delta);

/// Terms of the nonlocal Green's identity for nodal functions u and v:
///   lhs      = int_Omega v L u dx
///   bilinear = int int (v(y) - v(x)) (u(y) - u(x)) gamma dy dx
///   boundary = 2 int_{Gamma~} v(x) int (u(y) - u(x)) gamma dy dx
///   residual = |lhs + bilinear + boundary|
struct GreenIdentityTerms {
  double lhs = 0.0;
  double bilinear = 0.0;
  double boundary = 0.0;
  double residual = 0.0;

  /// max(|lhs|, |bilinear|, |boundary|)
  double scale() const;
};

/// Requires a kernel symmetric across the interface (C12 == C21 and
/// delta1 == delta2); throws InvalidArgument otherwise.
GreenIdentityTerms green_identity_residual(const Mesh1D& mesh, const Kernel& kernel,
                                           std::span<const double> u,
                                           std::span<const double> v);

/// Left-hand side of the nonlocal strong form at x inside element `element`:
///   -int (u(y) - u(x)) (gamma(x, y) + gamma(y, x)) dy,
/// which reduces to the subdomain equation away from the interface and to the
/// nonlocal flux interface conditions near it.
double strong_form_lhs(const NonlocalSolution& solution, const Kernel& kernel,
                       std::size_t element, double x);

/// max over samples (element-interior points of Omega) of |lhs(x) - f(x)|.
double strong_residual(const NonlocalSolution& solution, const Kernel& kernel,
                       const SourceTerm& f, std::span<const double> samples);

/// Element midpoints of Omega, a convenient sample set.
std::vector<double> omega_midpoints(const Mesh1D& mesh);

}  // namespace nli
