#pragma once

#include "curvlab/report.hpp"

namespace curvlab {

/// Runs the configured verification suites (validating the config first)
/// and collects one record per (suite, check, dim). Deterministic in
/// (seed, config); trials run on a thread pool with per-trial derived
/// seeds and max-merged residuals, so scheduling cannot change results.
Report run_suites(const RunConfig& config);

/// Payloads for the data-oriented CLI subcommands.
std::string extremal_table(int n, ReportFormat format);
std::string models_table(int n, ReportFormat format);

}  // namespace curvlab
