#pragma once

#include <span>
#include <vector>

#include "nli/assembly.hpp"
#include "nli/geometry.hpp"
#include "nli/kernels.hpp"

namespace nli {

/// Discrete nonlocal solution: one coefficient per DOF of the mesh, including
/// both DOFs of the interface double node.
struct NonlocalSolution {
  Mesh1D mesh;
  std::vector<double> coefficients;

  /// Value of the piecewise-linear interpolant inside element e.
  double value(std::size_t element, double x) const {
    return evaluate_on_element(mesh.elements()[element], coefficients, x);
  }
  /// Value at an arbitrary point; x == x_gamma resolves to `interface_side`.
  double value(double x, Side interface_side = Side::Left) const;

  double interface_left() const { return coefficients[mesh.interface_dof_left()]; }
  double interface_right() const { return coefficients[mesh.interface_dof_right()]; }
};

/// Everything needed to set up one nonlocal interface solve.
struct NonlocalProblem {
  DomainLayout layout;
  Material material;
  KernelFamily family = KernelFamily::K1;
  SourceTerm source;
  ConstraintData constraints;
  double h = 1.0 / 4096.0;
};

/// Assemble, eliminate the volume constraint, factor and solve. A failed
/// factorization is reported as SingularSystem.
NonlocalSolution solve_nonlocal(const Mesh1D& mesh, const Kernel& kernel, const SourceTerm& f,
                                const ConstraintData& g);

NonlocalSolution solve_nonlocal(const NonlocalProblem& problem);

}  // namespace nli
