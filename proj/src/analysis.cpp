#include "nli/analysis.hpp"

#include <cmath>
#include <future>

#include "nli/errors.hpp"
#include "nli/local_reference.hpp"
#include "nli/quadrature.hpp"

namespace nli {

namespace {

template <typename Fn>
std::vector<double> run_rows(std::size_t count, StudyOptions options, Fn&& row) {
  std::vector<double> out(count);
  if (!options.parallel) {
    for (std::size_t k = 0; k < count; ++k) out[k] = row(k);
    return out;
  }
  std::vector<std::future<double>> jobs;
  jobs.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    jobs.push_back(std::async(std::launch::async, [&row, k] { return row(k); }));
  }
  for (std::size_t k = 0; k < count; ++k) out[k] = jobs[k].get();
  return out;
}

void fill_orders(StudyReport& report) {
  std::vector<double> q;
  q.reserve(report.rows.size());
  for (const auto& r : report.rows) q.push_back(r.quantity);
  const auto orders = observed_orders(q);
  for (std::size_t k = 0; k < report.rows.size(); ++k) report.rows[k].order = orders[k];
}

DomainLayout with_horizons(DomainLayout layout, double d1, double d2) {
  layout.delta1 = d1;
  layout.delta2 = d2;
  return layout;
}

NonlocalSolution solve_row(const StudySetup& s, double d1, double d2, double h) {
  NonlocalProblem p;
  p.layout = with_horizons(s.layout, d1, d2);
  p.material = s.material;
  p.family = s.family;
  p.source = s.source;
  p.constraints = s.constraints;
  p.h = h;
  return solve_nonlocal(p);
}

}  // namespace

double l2_error(const NonlocalSolution& solution, const ScalarFunction& reference) {
  double sum = 0.0;
  const auto& elements = solution.mesh.elements();
  for (const Element& e : elements) {
    quadrature::for_each_gauss_point(e.x0, e.x1, [&](double x, double w) {
      const double d = evaluate_on_element(e, solution.coefficients, x) - reference(x);
      sum += w * d * d;
    });
  }
  return std::sqrt(sum);
}

double l2_difference(const NonlocalSolution& fine, const NonlocalSolution& coarse) {
  const auto& coarse_elements = coarse.mesh.elements();
  double sum = 0.0;
  for (const Element& e : fine.mesh.elements()) {
    quadrature::for_each_gauss_point(e.x0, e.x1, [&](double x, double w) {
      const Element& ce = coarse_elements[coarse.mesh.locate(x)];
      const double d = evaluate_on_element(e, fine.coefficients, x) -
                       evaluate_on_element(ce, coarse.coefficients, x);
      sum += w * d * d;
    });
  }
  return std::sqrt(sum);
}

double jump_magnitude(const NonlocalSolution& solution) {
  return std::abs(solution.interface_left() - solution.interface_right());
}

std::vector<std::optional<double>> observed_orders(std::span<const double> q) {
  std::vector<std::optional<double>> out(q.size());
  for (std::size_t k = 1; k < q.size(); ++k) out[k] = std::log2(q[k - 1] / q[k]);
  return out;
}

std::string_view to_string(StudyKind k) {
  switch (k) {
    case StudyKind::Delta: return "delta";
    case StudyKind::H: return "h";
    case StudyKind::JumpH: return "jump-h";
    case StudyKind::JumpDelta: return "jump-delta";
  }
  return "?";
}

std::optional<StudyKind> parse_study_kind(std::string_view s) {
  if (s == "delta") return StudyKind::Delta;
  if (s == "h") return StudyKind::H;
  if (s == "jump-h") return StudyKind::JumpH;
  if (s == "jump-delta") return StudyKind::JumpDelta;
  return std::nullopt;
}

StudyReport delta_study(const StudySetup& setup, double h, std::span<const HorizonPair> deltas,
                        StudyOptions options) {
  if (deltas.empty()) throw InvalidArgument("delta study needs at least one horizon pair");
  const LocalSolution ref =
      local_exact(setup.material, setup.source, setup.layout.a, setup.layout.x_gamma,
                  setup.layout.b);
  const auto errors = run_rows(deltas.size(), options, [&](std::size_t k) {
    const auto sol = solve_row(setup, deltas[k].first, deltas[k].second, h);
    return l2_error(sol, ref);
  });
  StudyReport report;
  report.kind = StudyKind::Delta;
  report.setup = setup;
  report.fixed_h = h;
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    report.rows.push_back({deltas[k].first, deltas[k].second, errors[k], std::nullopt});
  }
  fill_orders(report);
  return report;
}

StudyReport h_study(const StudySetup& setup, double delta1, double delta2,
                    std::span<const double> hs, double h_fine, StudyOptions options) {
  if (hs.empty()) throw InvalidArgument("h study needs at least one mesh size");
  for (double h : hs) {
    if (h < h_fine) throw InvalidArgument("h study requires h_fine <= every h");
  }
  const NonlocalSolution fine = solve_row(setup, delta1, delta2, h_fine);
  const auto errors = run_rows(hs.size(), options, [&](std::size_t k) {
    if (hs[k] == h_fine) return 0.0;
    return l2_difference(fine, solve_row(setup, delta1, delta2, hs[k]));
  });
  StudyReport report;
  report.kind = StudyKind::H;
  report.setup = setup;
  report.fixed_delta1 = delta1;
  report.fixed_delta2 = delta2;
  report.h_fine = h_fine;
  for (std::size_t k = 0; k < hs.size(); ++k) {
    report.rows.push_back({hs[k], h_fine, errors[k], std::nullopt});
  }
  fill_orders(report);
  return report;
}

StudyReport jump_study_vary_h(const StudySetup& setup, double delta1, double delta2,
                              std::span<const double> hs, StudyOptions options) {
  if (hs.empty()) throw InvalidArgument("jump study needs at least one mesh size");
  const auto jumps = run_rows(hs.size(), options, [&](std::size_t k) {
    return jump_magnitude(solve_row(setup, delta1, delta2, hs[k]));
  });
  StudyReport report;
  report.kind = StudyKind::JumpH;
  report.setup = setup;
  report.fixed_delta1 = delta1;
  report.fixed_delta2 = delta2;
  for (std::size_t k = 0; k < hs.size(); ++k) {
    report.rows.push_back({hs[k], 0.0, jumps[k], std::nullopt});
  }
  fill_orders(report);
  return report;
}

StudyReport jump_study_vary_delta(const StudySetup& setup, double h,
                                  std::span<const HorizonPair> deltas, StudyOptions options) {
  if (deltas.empty()) throw InvalidArgument("jump study needs at least one horizon pair");
  const auto jumps = run_rows(deltas.size(), options, [&](std::size_t k) {
    return jump_magnitude(solve_row(setup, deltas[k].first, deltas[k].second, h));
  });
  StudyReport report;
  report.kind = StudyKind::JumpDelta;
  report.setup = setup;
  report.fixed_h = h;
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    report.rows.push_back({deltas[k].first, deltas[k].second, jumps[k], std::nullopt});
  }
  fill_orders(report);
  return report;
}

StudySetup default_setup(KernelFamily family) {
  StudySetup s;
  s.family = family;
  s.constraints =
      local_exact(s.material, s.source, s.layout.a, s.layout.x_gamma, s.layout.b).as_constraints();
  return s;
}

std::vector<HorizonPair> halving_horizons(int first_exponent, int last_exponent) {
  std::vector<HorizonPair> out;
  for (int k = first_exponent; k <= last_exponent; ++k) {
    out.emplace_back(std::ldexp(1.0, -k), std::ldexp(1.0, -(k - 1)));
  }
  return out;
}

}  // namespace nli
