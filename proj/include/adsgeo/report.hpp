#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace adsgeo {

/// One verification run: background, dimension, parameters, point seed, and
/// tolerance overrides keyed by check name.
struct RunConfig {
  int n = 3;
  std::string metric_id = "schwarzschild-ads";
  std::map<std::string, double> params;
  uint64_t seed = 42;
  std::map<std::string, double> tolerances;
  int threads = 0;  // 0: ADSGEO_THREADS, else 1
};

/// ConfigError on unknown metric ids, out-of-range n, or nonpositive
/// tolerance overrides.
void validate_config(const RunConfig& cfg);

double param_or(const RunConfig& cfg, const std::string& key, double fallback);

/// One check at one point or range. pass <=> residual <= tolerance; a check
/// that threw carries its message in `error` and a residual pushed above
/// tolerance so the equivalence survives.
struct ReportEntry {
  std::string check_name;
  std::string metric_id;
  std::map<std::string, double> params;
  std::string point;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double wall_time_ms = 0.0;
  std::string error;
};

struct Report {
  std::string command;
  RunConfig config;
  std::vector<ReportEntry> entries;
  std::string csv;  // command-specific table; empty when the command has none

  bool all_pass() const;
};

/// Stable 64-bit name hash; mixed with the run seed so every check draws an
/// independent, reproducible point stream.
uint64_t fnv1a(const std::string& text);

/// Versioned JSON rendering (schema adsgeo-report/1). Byte-identical across
/// reruns of the same config except for the wall_time_ms values.
std::string report_json(const Report& report);

/// Dispatches verify-einstein | fg-expand | static | twist | compactify |
/// obata | all. Check failures and module errors become failed entries;
/// only configuration problems throw.
Report run_command(const std::string& command, const RunConfig& cfg);

}  // namespace adsgeo
