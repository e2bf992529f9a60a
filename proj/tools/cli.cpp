#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dsw/errors.hpp"
#include "dsw/oracle.hpp"
#include "dsw/perturb.hpp"
#include "dsw/pipeline.hpp"
#include "dsw/report.hpp"
#include "dsw/spec_file.hpp"
#include "dsw/wavefunc.hpp"
#include "dsw/worked_example.hpp"

namespace dsw::cli {

namespace {

struct Options {
  std::string spec_path;
  bool verbose = false;

  double delta_v = 0.0;
  double v_ratio = 0.0;
  double prob_ratio = 0.0;

  double tol = 1e-13;

  std::string state = "ground";
  std::vector<double> range;
  int points = 1001;
  std::string out_path = "-";
};

void emit(std::ostream& out, std::ostream& err, const Json& report, bool verbose) {
  out << dump(report);
  if (verbose) render_table(err, report);
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const WellSpec spec = load_spec(o.spec_path);
  emit(out, err, solve_report(approximate(spec)), o.verbose);
  return kOk;
}

int cmd_perturb(const Options& o, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  const WellSpec spec = load_spec(o.spec_path);
  const SymmetricBase base = symmetric_base(spec);
  double delta_v = 0.0;
  Json request;
  if (sub.count("--delta-v") > 0) {
    delta_v = o.delta_v;
    request = Json{{"delta_v", o.delta_v}};
  } else if (sub.count("--v") > 0) {
    delta_v = o.v_ratio * base.delta_e;
    request = Json{{"v", o.v_ratio}};
  } else {
    delta_v = invert_ratio(base, o.prob_ratio);
    request = Json{{"prob_ratio", o.prob_ratio}};
  }
  const PerturbedLevels levels = perturbed_levels(base, delta_v);
  Json report = solve_report(approximate(spec));
  Json block = perturbation_block(base, levels);
  block["request"] = std::move(request);
  report["perturbation"] = std::move(block);
  emit(out, err, report, o.verbose);
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  const WellSpec spec = load_spec(o.spec_path);
  Json report;
  try {
    const Approximation approx = approximate(spec);
    report = solve_report(approx);
    report["oracle"] = to_json(compare(spec, o.tol));
  } catch (const AssumptionViolated& e) {
    report = Json{{"spec", to_json(spec)}, {"reduced", to_json(reduce(spec))}};
    report["approximation_error"] = e.what();
  } catch (const ExcitedBelowZero& e) {
    report = Json{{"spec", to_json(spec)}, {"reduced", to_json(reduce(spec))}};
    report["approximation_error"] = e.what();
  }
  if (!report.contains("oracle")) {
    const double e0 = find_level(spec, Parity::Ground, o.tol);
    const double e1 = find_level(spec, Parity::Excited, o.tol);
    report["oracle"] = Json{{"tol_rel", o.tol},
                            {"e0_exact", e0},
                            {"e1_exact", e1},
                            {"delta_e_exact", 0.5 * (e1 - e0)}};
  }
  emit(out, err, report, o.verbose);
  return kOk;
}

double trapezoid_norm(const std::vector<SampleRow>& rows) {
  double sum = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    sum += 0.5 * (rows[i].psi * rows[i].psi + rows[i - 1].psi * rows[i - 1].psi) *
           (rows[i].x - rows[i - 1].x);
  }
  return sum;
}

int cmd_sample(const Options& o, std::ostream& out, std::ostream& err) {
  const WellSpec spec = load_spec(o.spec_path);
  const Approximation approx = approximate(spec);
  const bool ground = o.state == "ground";
  const WavefunctionModel model =
      assemble(spec, approx.reduced, ground ? approx.ground : approx.excited);
  // Default window reaches ten decay lengths into each outer region.
  double x_min = spec.x_m3 - 10.0 / model.kappa_m4;
  double x_max = spec.x_3() + 10.0 / model.kappa_4;
  if (o.range.size() == 2) {
    x_min = o.range[0];
    x_max = o.range[1];
  }
  const auto rows = sample(model, x_min, x_max, o.points);
  std::ostringstream csv;
  write_csv(csv, rows);

  if (o.out_path == "-") {
    out << csv.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (file) file << csv.str();
    if (!file) {
      err << "dsw: cannot write '" << o.out_path << "'\n";
      return kUnwritable;
    }
  }
  char line[160];
  std::snprintf(line, sizeof line,
                "normalisation: analytic %.12g, trapezoid over %d samples %.12g\n",
                norm_squared(model), o.points, trapezoid_norm(rows));
  err << line;
  return kOk;
}

int cmd_paper_example(std::ostream& out, std::ostream& err) {
  const auto checks = worked_example_checks();
  std::vector<std::string> failed;
  char line[256];
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%s  %-42s %.12g  (expected %.12g)\n",
                  c.passed ? "PASS" : "FAIL", c.name.c_str(), c.value, c.expected);
    out << line;
    if (!c.passed) failed.push_back(c.name);
  }
  if (failed.empty()) return kOk;
  err << "dsw: " << failed.size() << " quantities differ from the reference values:";
  for (const auto& name : failed) err << "\n  " << name;
  err << '\n';
  return kGoldenMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form levels of a double square well", "dsw"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "First-order approximation for a spec file");
  solve->add_option("spec", o.spec_path, "spec file")->required();
  solve->add_flag("--verbose", o.verbose, "also print a 12-digit table to stderr");

  auto* perturb = app.add_subcommand("perturb", "Antisymmetric well-depth perturbation");
  perturb->add_option("spec", o.spec_path, "symmetric spec file")->required();
  auto* amount = perturb->add_option_group("amount", "exactly one of");
  amount->add_option("--delta-v", o.delta_v, "raise V_m2 and lower V_2 by this energy");
  amount->add_option("--v", o.v_ratio, "perturbation in units of the half-splitting");
  amount->add_option("--ratio", o.prob_ratio, "target ground-state P_R/P_L")
      ->check(CLI::PositiveNumber);
  amount->require_option(1);
  perturb->add_flag("--verbose", o.verbose, "also print a 12-digit table to stderr");

  auto* oracle = app.add_subcommand("oracle", "Exact levels and the approximation error");
  oracle->add_option("spec", o.spec_path, "spec file")->required();
  oracle->add_option("--tol", o.tol, "relative bisection tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  oracle->add_flag("--verbose", o.verbose, "also print a 12-digit table to stderr");

  auto* sample_cmd = app.add_subcommand("sample", "Write psi and psi' on a uniform grid as CSV");
  sample_cmd->add_option("spec", o.spec_path, "spec file")->required();
  sample_cmd->add_option("--state", o.state, "ground or excited")
      ->check(CLI::IsMember({"ground", "excited"}))
      ->capture_default_str();
  sample_cmd->add_option("--range", o.range, "x_min x_max")->expected(2);
  sample_cmd->add_option("--points", o.points, "number of samples (>= 2)")->capture_default_str();
  sample_cmd->add_option("--out", o.out_path, "output path, - for stdout")->capture_default_str();

  auto* paper = app.add_subcommand("paper-example", "Check the built-in example against reference values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      const CLI::App* target = &app;
      for (const auto* sub : app.get_subcommands()) target = sub;
      out << target->help();
      return kOk;
    }
    err << "dsw: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(o, out, err);
    if (perturb->parsed()) return cmd_perturb(o, *perturb, out, err);
    if (oracle->parsed()) return cmd_oracle(o, out, err);
    if (sample_cmd->parsed()) return cmd_sample(o, out, err);
    if (paper->parsed()) return cmd_paper_example(out, err);
  } catch (const InvalidSpec& e) {
    err << "dsw: " << e.what() << '\n';
    return kUsage;
  } catch (const SpecParseError& e) {
    err << "dsw: " << e.what() << '\n';
    return kUsage;
  } catch (const PerturbationTooLarge& e) {
    err << "dsw: " << e.what() << '\n';
    return kUsage;
  } catch (const BadRange& e) {
    err << "dsw: " << e.what() << '\n';
    return kUsage;
  } catch (const AssumptionViolated& e) {
    err << "dsw: " << e.what() << "\n(run `dsw oracle` for exact levels)\n";
    return kThinBarrier;
  } catch (const ExcitedBelowZero& e) {
    err << "dsw: " << e.what() << "\n(run `dsw oracle` for exact levels)\n";
    return kThinBarrier;
  } catch (const MatchingResidualTooLarge& e) {
    err << "dsw: " << e.what() << "\n(the first-order state does not match at the walls: barrier too thin or wells too detuned)\n";
    return kThinBarrier;
  } catch (const NotSymmetric& e) {
    err << "dsw: " << e.what() << "\n(perturb needs a left-right symmetric spec)\n";
    return kNotSymmetric;
  } catch (const LevelNotFound& e) {
    err << "dsw: " << e.what() << '\n';
    return kLevelNotFound;
  } catch (const DegeneracyUnresolved& e) {
    err << "dsw: " << e.what() << '\n';
    return kLevelNotFound;
  } catch (const std::exception& e) {
    err << "dsw: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace dsw::cli
