#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nli/assembly.hpp"
#include "nli/cli.hpp"
#include "nli/errors.hpp"
#include "nli/local_reference.hpp"
#include "nli/nonlocal_problem.hpp"
#include "nli/report.hpp"

namespace nli::cli {

namespace {

struct Flags {
  std::string config_path;
  double kappa1 = 0, kappa2 = 0, delta1 = 0, delta2 = 0, h = 0, f = 0;
  std::string kernel;
  std::string out;
  bool dump_config = false;

  // solve
  std::string matrix_out;
  std::string plot_out;

  // study / verify
  std::string study_kind;
  std::string deltas;
  std::string hs;
  double h_fine = 0;
  bool parallel = false;
  std::string verify_which;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("cannot parse number '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw InvalidArgument("cannot parse number '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<HorizonPair> parse_pair_list(const std::string& text) {
  std::vector<HorizonPair> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InvalidArgument("horizon pairs are written d1:d2");
    const auto a = parse_number_list(item.substr(0, colon));
    const auto b = parse_number_list(item.substr(colon + 1));
    if (a.size() != 1 || b.size() != 1) throw InvalidArgument("bad horizon pair '" + item + "'");
    out.emplace_back(a[0], b[0]);
  }
  return out;
}

std::vector<double> powers_of_two(int first, int last) {
  std::vector<double> out;
  for (int k = first; k <= last; ++k) out.push_back(std::ldexp(1.0, -k));
  return out;
}

std::string sig6(double v) { return format_sig6(v); }

std::string json_path_for(const std::string& csv_path) {
  const auto slash = csv_path.find_last_of('/');
  const auto dot = csv_path.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    return csv_path.substr(0, dot) + ".json";
  }
  return csv_path + ".json";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InvalidArgument("cannot open '" + path + "' for writing");
  os << text;
}

int cmd_solve(const RunConfig& config, const Flags& flags, std::ostream& out) {
  const Mesh1D mesh = build_mesh(config.layout(), config.h);
  const Kernel kernel = make_kernel(config.kernel, config.material(), config.layout());
  const SourceTerm f = SourceTerm::constant(config.f);
  const NonlocalSolution sol = solve_nonlocal(mesh, kernel, f, config.constraints());
  const LocalSolution exact = local_exact(config.material(), f, config.a, config.x_gamma, config.b);

  std::ostringstream csv;
  csv << "x,u_nonlocal,u_local_exact\n";
  const auto coords = mesh.dof_coordinates();
  for (std::size_t i = 0; i < mesh.dof_count(); ++i) {
    const double x = coords[i];
    const double ref = mesh.dof_side(i) == Side::Left ? exact.left(x) : exact.right(x);
    csv << sig6(x) << ',' << sig6(sol.coefficients[i]) << ',' << sig6(ref) << '\n';
  }
  if (flags.out.empty()) {
    out << csv.str();
  } else {
    write_text(flags.out, csv.str());
  }

  if (!flags.matrix_out.empty()) {
    std::ostringstream m;
    assemble_stiffness(mesh, kernel).write_coordinate(m);
    write_text(flags.matrix_out, m.str());
  }
  if (!flags.plot_out.empty()) {
    const std::string data = flags.out.empty() ? "solution.csv" : flags.out;
    std::ostringstream p;
    p << "# gnuplot script: nonlocal vs local solution\n"
      << "set datafile separator ','\n"
      << "set key autotitle columnhead\n"
      << "set xlabel 'x'\n"
      << "plot '" << data << "' using 1:2 with lines, '' using 1:3 with lines dashtype 2\n";
    write_text(flags.plot_out, p.str());
  }
  return kSuccess;
}

int cmd_study(const RunConfig& config, const Flags& flags, std::ostream& out, CLI::App& app) {
  const auto kind = parse_study_kind(flags.study_kind);
  if (!kind) throw InvalidArgument("study kind must be delta, h, jump-h or jump-delta");
  const StudySetup setup = config.setup();
  const StudyOptions options{flags.parallel};
  const bool deltas_given = app.get_subcommand("study")->count("--deltas") > 0;
  const bool hs_given = app.get_subcommand("study")->count("--hs") > 0;
  const bool h_fine_given = app.get_subcommand("study")->count("--h-fine") > 0;

  StudyReport report;
  switch (*kind) {
    case StudyKind::Delta:
    case StudyKind::JumpDelta: {
      const auto deltas = deltas_given ? parse_pair_list(flags.deltas) : halving_horizons(5, 10);
      if (deltas.empty()) throw InvalidArgument("sweep list is empty");
      report = *kind == StudyKind::Delta
                   ? delta_study(setup, config.h, deltas, options)
                   : jump_study_vary_delta(setup, config.h, deltas, options);
      break;
    }
    case StudyKind::H:
    case StudyKind::JumpH: {
      const auto hs = hs_given ? parse_number_list(flags.hs)
                               : powers_of_two(5, *kind == StudyKind::H ? 9 : 11);
      if (hs.empty()) throw InvalidArgument("sweep list is empty");
      report = *kind == StudyKind::H
                   ? h_study(setup, config.delta1, config.delta2, hs,
                             h_fine_given ? flags.h_fine : config.h, options)
                   : jump_study_vary_h(setup, config.delta1, config.delta2, hs, options);
      break;
    }
  }

  std::ostringstream csv, json;
  write_report_csv(report, csv);
  write_report_json(report, json);
  const std::string csv_path =
      flags.out.empty() ? "study-" + std::string(to_string(*kind)) + ".csv" : flags.out;
  write_text(csv_path, csv.str());
  write_text(json_path_for(csv_path), json.str());
  out << csv.str();
  return kSuccess;
}

int cmd_verify(const Flags& flags, std::ostream& out) {
  std::vector<CheckResult> results;
  const std::string& w = flags.verify_which;
  if (w == "green" || w == "all") {
    auto r = verify_green();
    results.insert(results.end(), r.begin(), r.end());
  }
  if (w == "operator-1d" || w == "all") {
    auto r = verify_operator_1d();
    results.insert(results.end(), r.begin(), r.end());
  }
  if (w == "operator-2d" || w == "all") {
    auto r = verify_operator_2d();
    results.insert(results.end(), r.begin(), r.end());
  }
  if (w == "local-fem" || w == "all") {
    auto r = verify_local_fem();
    results.insert(results.end(), r.begin(), r.end());
  }
  if (results.empty()) {
    throw InvalidArgument("verify target must be green, operator-1d, operator-2d, local-fem or all");
  }
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    all = all && r.passed;
  }
  return all ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonlocal interface problems in one dimension", "nli"};
  // -h would clash with the mesh size option
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  Flags flags;

  auto add_common = [&flags](CLI::App* cmd) {
    cmd->add_option("--config", flags.config_path, "JSON config file");
    cmd->add_option("--kappa1", flags.kappa1, "diffusivity of the left material");
    cmd->add_option("--kappa2", flags.kappa2, "diffusivity of the right material");
    cmd->add_option("--delta1", flags.delta1, "horizon of the left material");
    cmd->add_option("--delta2", flags.delta2, "horizon of the right material");
    cmd->add_option("--h", flags.h, "mesh size");
    cmd->add_option("--kernel", flags.kernel, "kernel family k1|k2|k3|k4");
    cmd->add_option("--f", flags.f, "constant source term");
    cmd->add_option("--out", flags.out, "output path");
    cmd->add_flag("--dump-config", flags.dump_config, "print the resolved config as JSON");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve one nonlocal interface problem");
  add_common(solve);
  solve->add_option("--matrix-out", flags.matrix_out, "write the stiffness matrix (i j value)");
  solve->add_option("--plot-out", flags.plot_out, "write a gnuplot script for the solution");

  CLI::App* study = app.add_subcommand("study", "run a convergence study");
  add_common(study);
  study->add_option("kind", flags.study_kind, "delta | h | jump-h | jump-delta")->required();
  study->add_option("--deltas", flags.deltas, "horizon pairs d1:d2,d1:d2,...");
  study->add_option("--hs", flags.hs, "mesh sizes h1,h2,...");
  study->add_option("--h-fine", flags.h_fine, "reference mesh size of the h study");
  study->add_flag("--parallel", flags.parallel, "solve study rows concurrently");

  CLI::App* verify = app.add_subcommand("verify", "run a built-in numerical check");
  verify->add_option("which", flags.verify_which, "green | operator-1d | operator-2d | local-fem | all")
      ->required();

  std::vector<std::string> argv_storage{"nli"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (verify->parsed()) return cmd_verify(flags, out);

    CLI::App* cmd = solve->parsed() ? solve : study;
    RunConfig config;
    if (!flags.config_path.empty()) config = parse_config_json(read_file(flags.config_path));
    if (cmd->count("--kappa1")) config.kappa1 = flags.kappa1;
    if (cmd->count("--kappa2")) config.kappa2 = flags.kappa2;
    if (cmd->count("--delta1")) config.delta1 = flags.delta1;
    if (cmd->count("--delta2")) config.delta2 = flags.delta2;
    if (cmd->count("--h")) config.h = flags.h;
    if (cmd->count("--f")) config.f = flags.f;
    if (cmd->count("--kernel")) {
      const auto fam = parse_kernel_family(flags.kernel);
      if (!fam) throw InvalidArgument("kernel must be one of k1, k2, k3, k4");
      config.kernel = *fam;
    }
    config.validate();
    if (flags.dump_config) {
      out << dump_config_json(config);
      return kSuccess;
    }
    return solve->parsed() ? cmd_solve(config, flags, out) : cmd_study(config, flags, out, app);
  } catch (const SingularSystem& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const NotPositiveDefinite& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const Error& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace nli::cli
