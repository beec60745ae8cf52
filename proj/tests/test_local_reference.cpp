#include <cmath>

#include "nli/errors.hpp"
#include "nli/local_reference.hpp"
#include "test_support.hpp"

using namespace nli;
using nli::test::p2;

namespace {

void check_invariants(const Material& m, const SourceTerm& f, double a, double xg, double b) {
  const LocalSolution u = local_exact(m, f, a, xg, b);
  const double tol = 1e-12 * (1.0 + std::abs(u.left(xg)));
  CHECK(std::abs(u.left(a)) <= tol);
  CHECK(std::abs(u.right(b)) <= tol);
  CHECK(std::abs(u.left(xg) - u.right(xg)) <= tol);
  CHECK(std::abs(m.kappa1 * u.left.derivative(xg) - m.kappa2 * u.right.derivative(xg)) <=
        1e-12 * (1.0 + std::abs(m.kappa1 * u.left.derivative(xg))));
  CHECK(-m.kappa1 * u.left.second_derivative() == doctest::Approx(f.f1).epsilon(1e-12));
  CHECK(-m.kappa2 * u.right.second_derivative() == doctest::Approx(f.f2).epsilon(1e-12));
}

}  // namespace

TEST_SUITE("local_reference") {

TEST_CASE("reference configuration reproduces the constraint polynomials") {
  const LocalSolution u = local_exact({1.0, 3.0}, SourceTerm::constant(1.0), -0.5, 0.0, 0.5);
  CHECK(u.left.c0 == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
  CHECK(u.left.c1 == doctest::Approx(-1.0 / 8.0).epsilon(1e-15));
  CHECK(u.left.c2 == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(u.right.c0 == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
  CHECK(u.right.c1 == doctest::Approx(-1.0 / 24.0).epsilon(1e-15));
  CHECK(u.right.c2 == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
  CHECK(u(0.0) == doctest::Approx(0.0625).epsilon(1e-15));
  const ConstraintData g = u.as_constraints();
  CHECK(g.g1 == u.left);
  CHECK(g.g2 == u.right);
}

TEST_CASE("single material is one parabola") {
  const LocalSolution u = local_exact({1.0, 1.0}, SourceTerm::constant(1.0), -0.5, 0.0, 0.5);
  for (double x : {-0.5, -0.3, -0.01, 0.0, 0.2, 0.5}) {
    CHECK(u(x) == doctest::Approx((0.25 - x * x) / 2.0).epsilon(1e-14));
  }
}

TEST_CASE("invariants on several configurations") {
  check_invariants({1.0, 3.0}, SourceTerm::constant(1.0), -0.5, 0.0, 0.5);
  check_invariants({1.0, 100.0}, SourceTerm::constant(1.0), -0.5, 0.0, 0.5);
  check_invariants({0.3, 2.0}, SourceTerm::constant(-4.0), -1.0, 0.2, 0.7);
  check_invariants({5.0, 0.5}, {1.0, 2.0}, 0.0, 0.75, 1.0);
}

TEST_CASE("joint scaling of kappas and f leaves the solution unchanged") {
  const auto u = local_exact({1.0, 3.0}, SourceTerm::constant(1.0), -0.5, 0.0, 0.5);
  for (double s : {0.1, 7.0, 1024.0}) {
    const auto v = local_exact({s, 3.0 * s}, SourceTerm::constant(s), -0.5, 0.0, 0.5);
    CHECK(v.left.c0 == doctest::Approx(u.left.c0).epsilon(1e-14));
    CHECK(v.left.c1 == doctest::Approx(u.left.c1).epsilon(1e-14));
    CHECK(v.left.c2 == doctest::Approx(u.left.c2).epsilon(1e-14));
    CHECK(v.right.c0 == doctest::Approx(u.right.c0).epsilon(1e-14));
    CHECK(v.right.c1 == doctest::Approx(u.right.c1).epsilon(1e-14));
    CHECK(v.right.c2 == doctest::Approx(u.right.c2).epsilon(1e-14));
  }
}

TEST_CASE("FEM error is below 1e-8 at h = 2^-12") {
  const Material m{1.0, 3.0};
  const SourceTerm f = SourceTerm::constant(1.0);
  const auto fem = local_fem_solve(m, f, -0.5, 0.0, 0.5, p2(-12));
  CHECK(local_fem_l2_error(fem, local_exact(m, f, -0.5, 0.0, 0.5)) <= 1e-8);
}

TEST_CASE("FEM converges at second order") {
  struct Case {
    Material m;
    SourceTerm f;
    double a, xg, b;
  };
  const Case cases[] = {
      {{1.0, 3.0}, SourceTerm::constant(1.0), -0.5, 0.0, 0.5},
      {{1.0, 100.0}, SourceTerm::constant(1.0), -0.5, 0.0, 0.5},
      {{2.0, 0.5}, {1.0, -3.0}, -1.0, 0.25, 0.5},
  };
  for (const Case& c : cases) {
    const auto exact = local_exact(c.m, c.f, c.a, c.xg, c.b);
    double prev = 0.0;
    for (int k = 4; k <= 9; ++k) {
      const double e = local_fem_l2_error(local_fem_solve(c.m, c.f, c.a, c.xg, c.b, p2(-k)), exact);
      if (k > 4) {
        const double order = std::log2(prev / e);
        CHECK(order >= 1.9);
        CHECK(order <= 2.1);
      }
      prev = e;
    }
  }
}

TEST_CASE("FEM is nodally exact") {
  for (const Material m : {Material{2.0, 2.0}, Material{1.0, 3.0}}) {
    const SourceTerm f = SourceTerm::constant(1.0);
    const auto exact = local_exact(m, f, -0.5, 0.0, 0.5);
    const auto fem = local_fem_solve(m, f, -0.5, 0.0, 0.5, p2(-5));
    REQUIRE(fem.nodes.size() == 33);
    for (std::size_t i = 0; i < fem.nodes.size(); ++i) {
      CHECK(std::abs(fem.values[i] - exact(fem.nodes[i])) <= 1e-12);
    }
    CHECK(fem(fem.nodes[3]) == fem.values[3]);
  }
}

TEST_CASE("FEM rejects incommensurate meshes") {
  CHECK_THROWS_AS(local_fem_solve({1.0, 3.0}, SourceTerm::constant(1.0), -0.5, 0.0, 0.5, 0.3),
                  NonCommensurate);
  CHECK_THROWS_AS(local_exact({1.0, 3.0}, SourceTerm::constant(1.0), 0.5, 0.0, -0.5),
                  InvalidArgument);
}

}  // TEST_SUITE
