#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvlab {

/// Bad flags / config values; the CLI maps this to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class ReportFormat { json, markdown };

/// One verification run: which suites, which ambient dimensions, how many
/// random trials per check, base seed, tolerance overrides by name.
struct RunConfig {
  std::vector<int> dims{3, 4, 5, 6};
  int trials = 100;
  std::uint64_t seed = 42;
  std::vector<std::string> suites;  // empty means all
  std::map<std::string, double> tol_overrides;
  ReportFormat format = ReportFormat::json;
  std::optional<std::string> out_path;

  /// Resolved tolerance (override if present, else default). Unknown names
  /// throw UsageError.
  double tol(const std::string& name) const;
  /// Throws UsageError on out-of-range dims/trials, unknown suite or
  /// tolerance names.
  void validate() const;
};

const std::map<std::string, double>& default_tolerances();
const std::vector<std::string>& all_suites();

struct CheckRecord {
  std::string suite;
  std::string check;
  int dim = 0;
  int trials = 0;
  double max_rel_residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct Report {
  RunConfig config;
  std::vector<CheckRecord> records;
  double wall_time_ms = 0.0;

  int failures() const;
  bool pass() const;
  std::string to_json() const;
  std::string to_markdown() const;
  std::string render() const;  // per config.format
};

}  // namespace curvlab
