#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nli/analysis.hpp"
#include "nli/kernels.hpp"
#include "nli/polynomial.hpp"

namespace nli::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kConfigError = 2,
  kNumericalFailure = 3,
};

/// Flat run configuration. The defaults are the reference configuration:
/// kappa1 = 1, kappa2 = 3, f = 1, delta1 = 2^-5, delta2 = 2^-4, h = 2^-12, kernel k1
/// on (-0.5, 0) u (0, 0.5). When g1/g2 are absent the constraints are taken from
/// the exact local solution for the configured kappas and f.
struct RunConfig {
  double kappa1 = 1.0;
  double kappa2 = 3.0;
  double delta1 = 0.03125;
  double delta2 = 0.0625;
  double h = 1.0 / 4096.0;
  KernelFamily kernel = KernelFamily::K1;
  double f = 1.0;
  std::optional<Quadratic> g1;
  std::optional<Quadratic> g2;
  double a = -0.5;
  double x_gamma = 0.0;
  double b = 0.5;

  /// Throws InvalidArgument / NonCommensurate on a bad configuration.
  void validate() const;

  DomainLayout layout() const;
  Material material() const;
  ConstraintData constraints() const;
  StudySetup setup() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses a JSON object with keys named as the RunConfig fields. Missing keys
/// keep the values already in `base`; unknown keys are rejected.
RunConfig parse_config_json(const std::string& text, RunConfig base = {});
std::string dump_config_json(const RunConfig& config);

/// Runs the tool; `args` excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One line of `verify` output.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> verify_green();
std::vector<CheckResult> verify_operator_1d();
std::vector<CheckResult> verify_operator_2d();
std::vector<CheckResult> verify_local_fem();

}  // namespace nli::cli
