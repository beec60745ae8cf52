#include "nli/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nli/errors.hpp"
#include "nli/quadrature.hpp"

namespace nli {

namespace {

constexpr int kRadialPanels1D = 32;
constexpr int kRadialPanels2D = 32;
constexpr int kAngularPanels2D = 64;

Side other(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

// int (w(y) - w(x)) gamma(x, y) dy for the nodal function w, x on side p.
double inner_difference(const Mesh1D& mesh, const Kernel& kernel, std::span<const double> w,
                        const Element& ex, double x) {
  const double wx = evaluate_on_element(ex, w, x);
  double sum = 0.0;
  for_each_inner_point(mesh, kernel, x, ex.side(),
                       [&](const Element& ey, double y, double wy, double c) {
                         sum += wy * c * (evaluate_on_element(ey, w, y) - wx);
                       });
  return sum;
}

StudyReport limit_report(std::span<const double> deltas, std::vector<double> errors) {
  StudyReport r;
  r.kind = StudyKind::Delta;
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    r.rows.push_back({deltas[k], 0.0, errors[k], std::nullopt});
  }
  const auto orders = observed_orders(errors);
  for (std::size_t k = 0; k < r.rows.size(); ++k) r.rows[k].order = orders[k];
  return r;
}

}  // namespace

double nonlocal_operator_apply_1d(const ScalarFunction& u, double x, double amplitude,
                                  double delta, Interval domain) {
  if (x - delta < domain.lo || x + delta > domain.hi) {
    throw QuadratureDomainClipped("interaction ball leaves the declared 1D domain");
  }
  const double ux = u(x);
  const double integral = quadrature::integrate_composite(
      x - delta, x + delta, kRadialPanels1D, [&](double y) { return u(y) - ux; });
  return 2.0 * amplitude * integral;
}

double nonlocal_operator_apply_2d(const ScalarFunction2D& u, double x, double y,
                                  double amplitude, double delta, Box domain) {
  if (x - delta < domain.x0 || x + delta > domain.x1 || y - delta < domain.y0 ||
      y + delta > domain.y1) {
    throw QuadratureDomainClipped("interaction disk leaves the declared 2D domain");
  }
  const double uxy = u(x, y);
  const double integral = quadrature::integrate_composite(
      0.0, delta, kRadialPanels2D, [&](double rho) {
        const double ring = quadrature::integrate_composite(
            0.0, 2.0 * std::numbers::pi, kAngularPanels2D, [&](double theta) {
              return u(x + rho * std::cos(theta), y + rho * std::sin(theta)) - uxy;
            });
        return rho * ring;
      });
  return 2.0 * amplitude * integral;
}

StudyReport operator_limit_study_1d(const TestFunction1D& u, double kappa, double x,
                                    std::span<const double> deltas) {
  if (deltas.empty()) throw InvalidArgument("operator limit study needs at least one delta");
  std::vector<double> errors;
  for (double d : deltas) {
    const double c = 1.5 * kappa / (d * d * d);
    const Interval domain{x - 2.0 * d, x + 2.0 * d};
    errors.push_back(
        std::abs(nonlocal_operator_apply_1d(u.value, x, c, d, domain) - kappa * u.laplacian(x)));
  }
  return limit_report(deltas, std::move(errors));
}

StudyReport operator_limit_study_2d(const TestFunction2D& u, double kappa, double x, double y,
                                    std::span<const double> deltas) {
  if (deltas.empty()) throw InvalidArgument("operator limit study needs at least one delta");
  std::vector<double> errors;
  for (double d : deltas) {
    const double c = 4.0 * kappa / (std::numbers::pi * std::pow(d, 4));
    const Box domain{x - 2.0 * d, x + 2.0 * d, y - 2.0 * d, y + 2.0 * d};
    errors.push_back(std::abs(nonlocal_operator_apply_2d(u.value, x, y, c, d, domain) -
                              kappa * u.laplacian(x, y)));
  }
  return limit_report(deltas, std::move(errors));
}

MomentConditions moment_conditions_2d(double ctilde, int beta, double delta) {
  const double scale = ctilde * std::pow(delta, beta);
  const double rho3 =
      quadrature::integrate_composite(0.0, delta, 4, [](double r) { return r * r * r; });
  const double rho1 = quadrature::integrate_composite(0.0, delta, 4, [](double r) { return r; });
  MomentConditions m;
  m.first = std::numbers::pi * scale * rho3;
  m.second = 2.0 * std::numbers::pi * scale * std::pow(delta, 3) * rho1;
  return m;
}

double GreenIdentityTerms::scale() const {
  return std::max({std::abs(lhs), std::abs(bilinear), std::abs(boundary)});
}

GreenIdentityTerms green_identity_residual(const Mesh1D& mesh, const Kernel& kernel,
                                           std::span<const double> u,
                                           std::span<const double> v) {
  if (kernel.c12 != kernel.c21 || kernel.delta1 != kernel.delta2) {
    throw InvalidArgument("Green's identity check needs a kernel symmetric across the interface");
  }
  if (u.size() != mesh.dof_count() || v.size() != mesh.dof_count()) {
    throw DimensionMismatch("nodal vectors do not match the mesh");
  }
  GreenIdentityTerms t;
  for (const Element& ex : mesh.elements()) {
    const bool constraint = is_constraint_region(ex.region);
    quadrature::for_each_gauss_point(ex.x0, ex.x1, [&](double x, double wx) {
      const double vx = evaluate_on_element(ex, v, x);
      const double lu = 2.0 * inner_difference(mesh, kernel, u, ex, x);
      (constraint ? t.boundary : t.lhs) += wx * vx * lu;
    });
  }
  for_each_interaction(mesh, kernel, [&](const InteractionSample& s) {
    const double du = evaluate_on_element(s.inner, u, s.y) - evaluate_on_element(s.outer, u, s.x);
    const double dv = evaluate_on_element(s.inner, v, s.y) - evaluate_on_element(s.outer, v, s.x);
    t.bilinear += s.wx * s.wy * s.amplitude * du * dv;
  });
  t.residual = std::abs(t.lhs + t.bilinear + t.boundary);
  return t;
}

double strong_form_lhs(const NonlocalSolution& solution, const Kernel& kernel,
                       std::size_t element, double x) {
  const Mesh1D& mesh = solution.mesh;
  const Element& ex = mesh.elements()[element];
  const auto& coeffs = solution.coefficients;
  const double ux = evaluate_on_element(ex, coeffs, x);
  const Side p = ex.side();
  const Side q = other(p);

  double sum = 0.0;
  // gamma(x, y) over the x-side ball, plus gamma(y, x) for y on the same side.
  for_each_ball_point(mesh, x, kernel.horizon(p), [&](const Element& ey, double y, double wy) {
    const Side ys = ey.side();
    const double c = kernel.amplitude(p, ys) + (ys == p ? kernel.amplitude(p, p) : 0.0);
    sum += wy * c * (evaluate_on_element(ey, coeffs, y) - ux);
  });
  // gamma(y, x) for y across the interface, truncated by the horizon of y's side.
  const double cross = kernel.amplitude(q, p);
  for_each_ball_point(mesh, x, kernel.horizon(q), [&](const Element& ey, double y, double wy) {
    if (ey.side() != q) return;
    sum += wy * cross * (evaluate_on_element(ey, coeffs, y) - ux);
  });
  return -sum;
}

double strong_residual(const NonlocalSolution& solution, const Kernel& kernel,
                       const SourceTerm& f, std::span<const double> samples) {
  const Mesh1D& mesh = solution.mesh;
  double worst = 0.0;
  for (double x : samples) {
    const std::size_t e = mesh.locate(x);
    const Element& ex = mesh.elements()[e];
    if (is_constraint_region(ex.region) || !(x > ex.x0 && x < ex.x1)) {
      throw InvalidArgument("strong residual samples must be element-interior points of Omega");
    }
    worst = std::max(worst, std::abs(strong_form_lhs(solution, kernel, e, x) - f.value(ex.side())));
  }
  return worst;
}

std::vector<double> omega_midpoints(const Mesh1D& mesh) {
  std::vector<double> out;
  for (const Element& e : mesh.elements()) {
    if (!is_constraint_region(e.region)) out.push_back(e.midpoint());
  }
  return out;
}

}  // namespace nli
