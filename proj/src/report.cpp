#include "adsgeo/report.hpp"

#include <json.hpp>

#include "adsgeo/errors.hpp"

namespace adsgeo {

namespace {

const char* kMetricIds[] = {"ads", "schwarzschild-ads", "shooting", "fg-truncated"};

}  // namespace

void validate_config(const RunConfig& cfg) {
  if (cfg.n < 3 || cfg.n > 8) throw ConfigError("n out of the supported range [3, 8]");
  bool known = false;
  for (const char* id : kMetricIds) known = known || cfg.metric_id == id;
  if (!known) throw ConfigError("unknown metric id: " + cfg.metric_id);
  for (const auto& [key, value] : cfg.tolerances)
    if (!(value > 0.0)) throw ConfigError("tolerance override must be positive: " + key);
  if (cfg.threads < 0 || cfg.threads > 64)
    throw ConfigError("threads out of the supported range [0, 64]");
}

double param_or(const RunConfig& cfg, const std::string& key, double fallback) {
  const auto it = cfg.params.find(key);
  return it == cfg.params.end() ? fallback : it->second;
}

bool Report::all_pass() const {
  for (const ReportEntry& e : entries)
    if (!e.pass) return false;
  return true;
}

uint64_t fnv1a(const std::string& text) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string report_json(const Report& report) {
  using json = nlohmann::ordered_json;
  json root;
  root["schema"] = "adsgeo-report/1";
  root["command"] = report.command;
  json cfg;
  cfg["n"] = report.config.n;
  cfg["metric"] = report.config.metric_id;
  cfg["params"] = json::object();
  for (const auto& [key, value] : report.config.params) cfg["params"][key] = value;
  cfg["seed"] = report.config.seed;
  cfg["tolerances"] = json::object();
  for (const auto& [key, value] : report.config.tolerances) cfg["tolerances"][key] = value;
  cfg["threads"] = report.config.threads;
  root["config"] = std::move(cfg);

  size_t passed = 0;
  json entries = json::array();
  for (const ReportEntry& e : report.entries) {
    json row;
    row["check"] = e.check_name;
    row["metric"] = e.metric_id;
    row["params"] = json::object();
    for (const auto& [key, value] : e.params) row["params"][key] = value;
    row["point"] = e.point;
    row["lhs"] = e.lhs;
    row["rhs"] = e.rhs;
    row["residual"] = e.residual;
    row["tolerance"] = e.tolerance;
    row["pass"] = e.pass;
    row["wall_time_ms"] = e.wall_time_ms;
    if (!e.error.empty()) row["error"] = e.error;
    entries.push_back(std::move(row));
    if (e.pass) ++passed;
  }
  root["summary"] = {{"entries", report.entries.size()},
                     {"passed", passed},
                     {"all_pass", report.all_pass()}};
  root["entries"] = std::move(entries);
  return root.dump(2) + "\n";
}

}  // namespace adsgeo
