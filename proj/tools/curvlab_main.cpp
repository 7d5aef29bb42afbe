#include "curvlab/report.hpp"
#include "curvlab/suites.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

curvlab::ReportFormat parse_format(const std::string& s) {
  if (s == "json") return curvlab::ReportFormat::json;
  if (s == "markdown") return curvlab::ReportFormat::markdown;
  throw curvlab::UsageError("unknown format: " + s);
}

void parse_tols(const std::vector<std::string>& raw,
                std::map<std::string, double>& out) {
  for (const auto& item : raw) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw curvlab::UsageError("expected --tol name=value, got: " + item);
    std::string name = item.substr(0, eq);
    std::size_t used = 0;
    double value;
    try {
      value = std::stod(item.substr(eq + 1), &used);
    } catch (const std::exception&) {
      throw curvlab::UsageError("bad tolerance value in: " + item);
    }
    if (used != item.size() - eq - 1)
      throw curvlab::UsageError("bad tolerance value in: " + item);
    out[name] = value;
  }
}

int write_output(const std::string& payload, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file: " << *path << "\n";
    return 2;
  }
  f << payload;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for algebraic curvature operators"};
  app.require_subcommand(1);

  curvlab::RunConfig config;
  std::vector<std::string> raw_tols;
  std::string format = "json";
  std::string out_path;

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--dims", config.dims, "ambient dimensions (default 3,4,5,6)")
      ->delimiter(',');
  verify->add_option("--trials", config.trials, "random trials per check");
  verify->add_option("--seed", config.seed, "base RNG seed");
  verify->add_option("--suites", config.suites, "subset of suites to run")
      ->delimiter(',');
  verify->add_option("--tol", raw_tols, "tolerance override, name=value")
      ->take_all();
  verify->add_option("--format", format, "json or markdown");
  verify->add_option("--out", out_path, "write the report to a file");

  int table_dim = 4;
  auto* extremal = app.add_subcommand("extremal", "print the critical-point table");
  extremal->add_option("--dim", table_dim, "ambient dimension");
  extremal->add_option("--format", format, "json or markdown");
  extremal->add_option("--out", out_path, "write the table to a file");

  auto* models = app.add_subcommand("models", "print model soliton data");
  models->add_option("--dim", table_dim, "ambient dimension");
  models->add_option("--format", format, "json or markdown");
  models->add_option("--out", out_path, "write the table to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    config.format = parse_format(format);
    parse_tols(raw_tols, config.tol_overrides);
    if (!out_path.empty()) config.out_path = out_path;

    if (app.got_subcommand(extremal))
      return write_output(curvlab::extremal_table(table_dim, config.format),
                          config.out_path);
    if (app.got_subcommand(models))
      return write_output(curvlab::models_table(table_dim, config.format),
                          config.out_path);

    config.validate();
    curvlab::Report report = curvlab::run_suites(config);
    int rc = write_output(report.render(), config.out_path);
    if (rc != 0) return rc;
    return report.pass() ? 0 : 1;
  } catch (const curvlab::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
