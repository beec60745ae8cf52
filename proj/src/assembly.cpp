#include "nli/assembly.hpp"

#include <array>
#include <utility>

#include "nli/errors.hpp"

namespace nli {

namespace {

struct LocalDof {
  std::size_t dof;
  double value;
};

// Collects phi_k(x) - phi_k(y) for the (up to four) basis functions active at x or y.
std::size_t difference_vector(const Element& ex, double x, const Element& ey, double y,
                              std::array<LocalDof, 4>& out) {
  const double tx = (x - ex.x0) / (ex.x1 - ex.x0);
  const double ty = (y - ey.x0) / (ey.x1 - ey.x0);
  std::size_t n = 0;
  auto push = [&](std::size_t dof, double v) {
    for (std::size_t k = 0; k < n; ++k) {
      if (out[k].dof == dof) {
        out[k].value += v;
        return;
      }
    }
    out[n++] = LocalDof{dof, v};
  };
  push(ex.left_dof, 1.0 - tx);
  push(ex.right_dof, tx);
  push(ey.left_dof, -(1.0 - ty));
  push(ey.right_dof, -ty);
  return n;
}

}  // namespace

std::size_t stiffness_half_bandwidth(const Mesh1D& mesh, const Kernel& kernel) {
  // Supports reach one element on each side, plus one for the double node.
  return static_cast<std::size_t>(std::ceil(kernel.max_horizon() / mesh.h() - 1e-9)) + 3;
}

BandedSymmetricMatrix assemble_stiffness(const Mesh1D& mesh, const Kernel& kernel) {
  BandedSymmetricMatrix a(mesh.dof_count(), stiffness_half_bandwidth(mesh, kernel));
  // Neumaier-compensated accumulation: entries collect thousands of terms of both
  // signs, and plain summation leaves ~1e-13 relative noise at fine h.
  const std::size_t hb = a.half_bandwidth();
  auto band = a.band();
  std::vector<double> comp(band.size(), 0.0);
  auto accumulate = [&](std::size_t i, std::size_t j, double v) {
    if (i < j) std::swap(i, j);
    if (i - j > hb) throw InvalidArgument("stiffness contribution outside the band");
    const std::size_t k = i * (hb + 1) + (i - j);
    const double s = band[k];
    const double t = s + v;
    comp[k] += std::abs(s) >= std::abs(v) ? (s - t) + v : (v - t) + s;
    band[k] = t;
  };
  std::array<LocalDof, 4> local{};
  for_each_interaction(mesh, kernel, [&](const InteractionSample& s) {
    const double w = s.wx * s.wy * s.amplitude;
    if (w == 0.0) return;
    const std::size_t n = difference_vector(s.outer, s.x, s.inner, s.y, local);
    for (std::size_t p = 0; p < n; ++p) {
      const double wp = w * local[p].value;
      for (std::size_t q = p; q < n; ++q) {
        accumulate(local[p].dof, local[q].dof, wp * local[q].value);
      }
    }
  });
  for (std::size_t k = 0; k < band.size(); ++k) band[k] += comp[k];
  return a;
}

LoadVector assemble_load(const Mesh1D& mesh, const SourceTerm& f) {
  LoadVector load(mesh.dof_count(), 0.0);
  for (const Element& e : mesh.elements()) {
    if (is_constraint_region(e.region)) continue;
    const double fv = f.value(e.side());
    quadrature::for_each_gauss_point(e.x0, e.x1, [&](double x, double w) {
      const double t = (x - e.x0) / (e.x1 - e.x0);
      load[e.left_dof] += w * fv * (1.0 - t);
      load[e.right_dof] += w * fv * t;
    });
  }
  return load;
}

bool is_constrained_dof(const Mesh1D& mesh, std::size_t dof) {
  const double x = mesh.dof_coordinates()[dof];
  return x <= mesh.layout().a || x >= mesh.layout().b;
}

double constraint_value(const Mesh1D& mesh, const ConstraintData& g, std::size_t dof) {
  const double x = mesh.dof_coordinates()[dof];
  return x <= mesh.layout().a ? g.g1(x) : g.g2(x);
}

std::vector<double> ConstrainedSystem::expand(std::span<const double> free_values) const {
  if (free_values.size() != free_dofs.size()) {
    throw DimensionMismatch("free solution has the wrong length");
  }
  std::vector<double> u(full_dim, 0.0);
  for (std::size_t k = 0; k < free_dofs.size(); ++k) u[free_dofs[k]] = free_values[k];
  for (std::size_t k = 0; k < constrained_dofs.size(); ++k) {
    u[constrained_dofs[k]] = constrained_values[k];
  }
  return u;
}

ConstrainedSystem apply_constraints(const BandedSymmetricMatrix& a, std::span<const double> f,
                                    const Mesh1D& mesh, const ConstraintData& g) {
  const std::size_t n = mesh.dof_count();
  if (a.dim() != n || f.size() != n) {
    throw DimensionMismatch("system size does not match the mesh");
  }
  ConstrainedSystem sys;
  sys.full_dim = n;
  std::vector<double> prescribed(n, 0.0);
  std::vector<std::size_t> free_index(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_constrained_dof(mesh, i)) {
      sys.constrained_dofs.push_back(i);
      sys.constrained_values.push_back(constraint_value(mesh, g, i));
      prescribed[i] = sys.constrained_values.back();
    } else {
      free_index[i] = sys.free_dofs.size();
      sys.free_dofs.push_back(i);
    }
  }

  const std::size_t hb = a.half_bandwidth();
  sys.matrix = BandedSymmetricMatrix(sys.free_dofs.size(), hb);
  sys.rhs.resize(sys.free_dofs.size());
  for (std::size_t k = 0; k < sys.free_dofs.size(); ++k) {
    const std::size_t i = sys.free_dofs[k];
    double r = f[i];
    const std::size_t jlo = i > hb ? i - hb : 0;
    const std::size_t jhi = std::min(n - 1, i + hb);
    for (std::size_t j = jlo; j <= jhi; ++j) {
      const double aij = a(i, j);
      if (free_index[j] == n) {
        r -= aij * prescribed[j];
      } else if (j <= i) {
        sys.matrix.set(k, free_index[j], aij);
      }
    }
    sys.rhs[k] = r;
  }
  return sys;
}

}  // namespace nli
