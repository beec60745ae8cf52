#pragma once

#include <vector>

#include "nli/assembly.hpp"
#include "nli/kernels.hpp"
#include "nli/polynomial.hpp"

namespace nli {

/// Piecewise-quadratic solution of the local perfect-interface problem
///   -kappa_i u_i'' = f_i,  u_1(a) = 0,  u_2(b) = 0,
///   u_1(x_gamma) = u_2(x_gamma),  kappa_1 u_1'(x_gamma) = kappa_2 u_2'(x_gamma).
/// Each piece extends polynomially beyond its subdomain, which is how the
/// reference is evaluated on the constraint layers.
struct LocalSolution {
  Quadratic left;
  Quadratic right;
  double a = -0.5;
  double x_gamma = 0.0;
  double b = 0.5;

  double operator()(double x) const { return x < x_gamma ? left(x) : right(x); }

  /// The pieces reused as volume-constraint data (g1 = left, g2 = right).
  ConstraintData as_constraints() const { return {left, right}; }
};

LocalSolution local_exact(const Material& material, const SourceTerm& f, double a,
                          double x_gamma, double b);

/// Standard P1 finite-element solution of the local problem (single node at
/// x_gamma, flux continuity imposed weakly).
struct LocalFemSolution {
  std::vector<double> nodes;
  std::vector<double> values;

  double operator()(double x) const;
};

/// Throws NonCommensurate if the subdomain lengths are not multiples of h.
LocalFemSolution local_fem_solve(const Material& material, const SourceTerm& f, double a,
                                 double x_gamma, double b, double h);

/// L2((a, b)) distance between the FEM solution and the exact one, three Gauss
/// points per element.
double local_fem_l2_error(const LocalFemSolution& fem, const LocalSolution& exact);

}  // namespace nli
