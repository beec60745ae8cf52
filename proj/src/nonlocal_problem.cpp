#include "nli/nonlocal_problem.hpp"

#include "nli/errors.hpp"
#include "nli/solver.hpp"

namespace nli {

double NonlocalSolution::value(double x, Side interface_side) const {
  const auto& layout = mesh.layout();
  layout.classify(x);  // throws OutOfDomain
  if (x == layout.x_gamma) {
    return interface_side == Side::Left ? interface_left() : interface_right();
  }
  return value(mesh.locate(x), x);
}

NonlocalSolution solve_nonlocal(const Mesh1D& mesh, const Kernel& kernel, const SourceTerm& f,
                                const ConstraintData& g) {
  const auto a = assemble_stiffness(mesh, kernel);
  const auto load = assemble_load(mesh, f);
  const auto sys = apply_constraints(a, load, mesh, g);
  std::vector<double> free_values;
  try {
    free_values = BandedCholeskyFactor::factor(sys.matrix).solve(sys.rhs);
  } catch (const NotPositiveDefinite& e) {
    throw SingularSystem(std::string("constrained nonlocal system is singular: ") + e.what());
  }
  return NonlocalSolution{mesh, sys.expand(free_values)};
}

NonlocalSolution solve_nonlocal(const NonlocalProblem& p) {
  const Mesh1D mesh = build_mesh(p.layout, p.h);
  const Kernel kernel = make_kernel(p.family, p.material, p.layout);
  return solve_nonlocal(mesh, kernel, p.source, p.constraints);
}

}  // namespace nli
