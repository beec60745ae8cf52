#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nli/assembly.hpp"
#include "nli/kernels.hpp"
#include "nli/nonlocal_problem.hpp"

namespace nli {

using ScalarFunction = std::function<double(double)>;

/// sqrt(int_{Omega u Gamma~} (u_h - ref)^2 dx), three Gauss points per element.
double l2_error(const NonlocalSolution& solution, const ScalarFunction& reference);

/// L2 distance between a coarse solution and a fine one, evaluating the coarse
/// interpolant at the quadrature points of the fine mesh. Both meshes must share
/// the same layout and the fine nodes must contain the coarse ones.
double l2_difference(const NonlocalSolution& fine, const NonlocalSolution& coarse);

/// |u(left interface DOF) - u(right interface DOF)|
double jump_magnitude(const NonlocalSolution& solution);

/// log2(q[k-1] / q[k]) for k >= 1; the first entry is empty.
std::vector<std::optional<double>> observed_orders(std::span<const double> quantities);

struct StudyRow {
  double param1 = 0.0;
  double param2 = 0.0;
  double quantity = 0.0;
  std::optional<double> order;
};

/// Fixed part of a study: everything except the swept parameter.
struct StudySetup {
  DomainLayout layout;  // a, x_gamma, b are used; horizons are overwritten per row
  Material material;
  KernelFamily family = KernelFamily::K1;
  SourceTerm source;
  ConstraintData constraints;
};

/// Studies sweep one parameter; parallel rows run on separate threads but
/// rows always come back in sweep order.
struct StudyOptions {
  bool parallel = false;
};

enum class StudyKind { Delta, H, JumpH, JumpDelta };

std::string_view to_string(StudyKind k);
std::optional<StudyKind> parse_study_kind(std::string_view s);

struct StudyReport {
  StudyKind kind = StudyKind::Delta;
  StudySetup setup;
  double fixed_h = 0.0;       // delta and jump-delta studies
  double fixed_delta1 = 0.0;  // h and jump-h studies
  double fixed_delta2 = 0.0;
  double h_fine = 0.0;        // h study only
  std::vector<StudyRow> rows;
};

using HorizonPair = std::pair<double, double>;

/// Rows: (delta1, delta2, ||u_N,h - u_L||, order) at fixed h.
StudyReport delta_study(const StudySetup& setup, double h, std::span<const HorizonPair> deltas,
                        StudyOptions options = {});

/// Rows: (h, h_fine, ||u_N,h - u_N,h_fine||, order) at fixed horizons.
StudyReport h_study(const StudySetup& setup, double delta1, double delta2,
                    std::span<const double> hs, double h_fine, StudyOptions options = {});

/// Rows: (h, 0, jump, order) at fixed horizons.
StudyReport jump_study_vary_h(const StudySetup& setup, double delta1, double delta2,
                              std::span<const double> hs, StudyOptions options = {});

/// Rows: (delta1, delta2, jump, order) at fixed h.
StudyReport jump_study_vary_delta(const StudySetup& setup, double h,
                                  std::span<const HorizonPair> deltas, StudyOptions options = {});

/// Defaults used throughout: kappa1 = 1, kappa2 = 3, f = 1, constraints equal to
/// the exact local solution, domain (-0.5, 0) u (0, 0.5).
StudySetup default_setup(KernelFamily family = KernelFamily::K1);

/// (2^-k, 2^-(k-1)) for k = first..last.
std::vector<HorizonPair> halving_horizons(int first_exponent, int last_exponent);

}  // namespace nli
