#include <cmath>
#include <cstdio>
#include <random>

#include "nli/assembly.hpp"
#include "nli/cli.hpp"
#include "nli/local_reference.hpp"
#include "nli/verification.hpp"

namespace nli::cli {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::vector<double> powers_of_two(int first, int last) {
  std::vector<double> out;
  for (int k = first; k <= last; ++k) out.push_back(std::ldexp(1.0, -k));
  return out;
}

CheckResult order_check(const std::string& name, const StudyReport& r, double target,
                        double tol) {
  bool ok = true;
  std::string detail = "orders";
  for (const auto& row : r.rows) {
    if (!row.order) continue;
    ok = ok && std::abs(*row.order - target) <= tol;
    char buf[16];
    std::snprintf(buf, sizeof buf, " %.3f", *row.order);
    detail += buf;
  }
  return {name, ok, detail};
}

double max_quantity(const StudyReport& r) {
  double m = 0.0;
  for (const auto& row : r.rows) m = std::max(m, row.quantity);
  return m;
}

}  // namespace

std::vector<CheckResult> verify_green() {
  const double delta = 1.0 / 16.0;
  const DomainLayout layout{-0.5, 0.0, 0.5, delta, delta};
  const Mesh1D mesh(layout, 1.0 / 64.0);
  const Kernel kernel = make_kernel(KernelFamily::K3, {1.0, 1.0}, layout);

  std::mt19937_64 rng(20200270);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const std::size_t n = mesh.dof_count();
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = dist(rng);
      v[i] = is_constrained_dof(mesh, i) ? 0.0 : dist(rng);
    }
    const auto t = green_identity_residual(mesh, kernel, u, v);
    worst = std::max(worst, t.residual / t.scale());
  }

  const std::vector<double> zero(n, 0.0), ones(n, 1.0);
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = std::sin(7.0 * mesh.dof_coordinates()[i]);
  const auto tv = green_identity_residual(mesh, kernel, u, zero);
  const auto tc = green_identity_residual(mesh, kernel, ones, u);

  return {
      {"green: 50 random pairs, relative residual <= 1e-10", worst <= 1e-10,
       "max relative residual " + sci(worst)},
      {"green: v = 0 gives zero on both sides",
       tv.lhs == 0.0 && tv.bilinear == 0.0 && tv.boundary == 0.0, "lhs " + sci(tv.lhs)},
      {"green: constant u gives zero on both sides",
       std::abs(tc.lhs) <= 1e-10 && std::abs(tc.bilinear) <= 1e-10,
       "lhs " + sci(tc.lhs) + ", bilinear " + sci(tc.bilinear)},
  };
}

std::vector<CheckResult> verify_operator_1d() {
  const double x = 0.1;
  const auto deltas = powers_of_two(3, 7);
  const TestFunction1D quartic{[](double t) { return t * t * t * t; },
                               [](double t) { return 12.0 * t * t; }};
  const TestFunction1D quadratic{[](double t) { return t * t; }, [](double) { return 2.0; }};
  const auto rq = operator_limit_study_1d(quartic, 1.0, x, deltas);
  const auto r2 = operator_limit_study_1d(quadratic, 1.0, x, deltas);
  return {
      order_check("operator-1d: quartic observed order 2.0 +- 0.1", rq, 2.0, 0.1),
      {"operator-1d: quadratic exact to 1e-10", max_quantity(r2) <= 1e-10,
       "max error " + sci(max_quantity(r2))},
  };
}

std::vector<CheckResult> verify_operator_2d() {
  const double x = 0.1, y = 0.2;
  const auto deltas = powers_of_two(3, 7);
  const TestFunction2D quartic{[](double s, double t) { return s * s * s * s + s * s * t * t; },
                               [](double s, double t) { return 12.0 * s * s + 2.0 * t * t + 2.0 * s * s; }};
  const TestFunction2D quadratic{[](double s, double t) { return s * s + t * t; },
                                 [](double, double) { return 4.0; }};
  const auto rq = operator_limit_study_2d(quartic, 1.0, x, y, deltas);
  const auto r2 = operator_limit_study_2d(quadratic, 1.0, x, y, deltas);
  return {
      order_check("operator-2d: quartic observed order 2.0 +- 0.1", rq, 2.0, 0.1),
      {"operator-2d: quadratic exact to 1e-10", max_quantity(r2) <= 1e-10,
       "max error " + sci(max_quantity(r2))},
  };
}

std::vector<CheckResult> verify_local_fem() {
  const Material material{1.0, 3.0};
  const SourceTerm f = SourceTerm::constant(1.0);
  const auto exact = local_exact(material, f, -0.5, 0.0, 0.5);
  const auto fem = local_fem_solve(material, f, -0.5, 0.0, 0.5, 1.0 / 4096.0);
  const double err = local_fem_l2_error(fem, exact);
  return {{"local-fem: L2 error <= 1e-8 at h = 2^-12", err <= 1e-8, "L2 error " + sci(err)}};
}

}  // namespace nli::cli
