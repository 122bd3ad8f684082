#include "adsgeo/adsgeo.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "adsgeo/errors.hpp"
#include "adsgeo/report.hpp"

struct adsgeo_config {
  adsgeo::RunConfig cfg;
};

struct adsgeo_report {
  adsgeo::Report rep;
};

namespace {

thread_local std::string g_last_error;

adsgeo_status fail(adsgeo_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

adsgeo_status classify(const std::exception& ex) {
  using namespace adsgeo;
  if (dynamic_cast<const ConfigError*>(&ex)) return ADSGEO_ERR_CONFIG;
  if (dynamic_cast<const ChartError*>(&ex)) return ADSGEO_ERR_CHART;
  if (dynamic_cast<const DegenerateMetricError*>(&ex)) return ADSGEO_ERR_DEGENERATE_METRIC;
  if (dynamic_cast<const OrderError*>(&ex)) return ADSGEO_ERR_ORDER;
  if (dynamic_cast<const SeriesError*>(&ex)) return ADSGEO_ERR_SERIES;
  if (dynamic_cast<const EvenDimensionLogError*>(&ex)) return ADSGEO_ERR_EVEN_DIMENSION_LOG;
  if (dynamic_cast<const VanishingDenominatorError*>(&ex)) return ADSGEO_ERR_VANISHING_DENOMINATOR;
  if (dynamic_cast<const SolveError*>(&ex)) return ADSGEO_ERR_SOLVE;
  return ADSGEO_ERR_INTERNAL;
}

char* dup_text(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* adsgeo_last_error(void) { return g_last_error.c_str(); }

adsgeo_config* adsgeo_config_new(void) { return new (std::nothrow) adsgeo_config(); }

void adsgeo_config_free(adsgeo_config* cfg) { delete cfg; }

adsgeo_status adsgeo_config_set_n(adsgeo_config* cfg, int n) {
  if (cfg == nullptr) return fail(ADSGEO_ERR_INVALID_ARGUMENT, "null config");
  cfg->cfg.n = n;
  return ADSGEO_OK;
}

adsgeo_status adsgeo_config_set_metric(adsgeo_config* cfg, const char* metric_id) {
  if (cfg == nullptr) return fail(ADSGEO_ERR_INVALID_ARGUMENT, "null config");
  if (metric_id == nullptr) return fail(ADSGEO_ERR_INVALID_ARGUMENT, "null metric id");
  cfg->cfg.metric_id = metric_id;
  return ADSGEO_OK;
}

adsgeo_status adsgeo_config_set_seed(adsgeo_config* cfg, unsigned long long seed) {
  if (cfg == nullptr) return fail(ADSGEO_ERR_INVALID_ARGUMENT, "null config");
  cfg->cfg.seed = seed;
  return ADSGEO_OK;
}

adsgeo_status adsgeo_config_set_param(adsgeo_config* cfg, const char* key, double value) {
  if (cfg == nullptr) return fail(ADSGEO_ERR_INVALID_ARGUMENT, "null config");
  if (key == nullptr || *key == '\0') return fail(ADSGEO_ERR_INVALID_ARGUMENT, "empty param key");
  if (!std::isfinite(value)) return fail(ADSGEO_ERR_INVALID_ARGUMENT, "param value not finite");
  cfg->cfg.params[key] = value;
  return ADSGEO_OK;
}

adsgeo_status adsgeo_config_set_tolerance(adsgeo_config* cfg, const char* check, double value) {
  if (cfg == nullptr) return fail(ADSGEO_ERR_INVALID_ARGUMENT, "null config");
  if (check == nullptr || *check == '\0')
    return fail(ADSGEO_ERR_INVALID_ARGUMENT, "empty check name");
  if (!std::isfinite(value)) return fail(ADSGEO_ERR_INVALID_ARGUMENT, "tolerance not finite");
  cfg->cfg.tolerances[check] = value;
  return ADSGEO_OK;
}

adsgeo_status adsgeo_config_set_threads(adsgeo_config* cfg, int threads) {
  if (cfg == nullptr) return fail(ADSGEO_ERR_INVALID_ARGUMENT, "null config");
  cfg->cfg.threads = threads;
  return ADSGEO_OK;
}

adsgeo_status adsgeo_run(const adsgeo_config* cfg, const char* command, adsgeo_report** out) {
  if (cfg == nullptr) return fail(ADSGEO_ERR_INVALID_ARGUMENT, "null config");
  if (command == nullptr) return fail(ADSGEO_ERR_INVALID_ARGUMENT, "null command");
  if (out == nullptr) return fail(ADSGEO_ERR_INVALID_ARGUMENT, "null report slot");
  *out = nullptr;
  try {
    auto rep = new adsgeo_report{adsgeo::run_command(command, cfg->cfg)};
    *out = rep;
    return ADSGEO_OK;
  } catch (const std::exception& ex) {
    return fail(classify(ex), ex.what());
  } catch (...) {
    return fail(ADSGEO_ERR_INTERNAL, "unknown failure");
  }
}

void adsgeo_report_free(adsgeo_report* rep) { delete rep; }

size_t adsgeo_report_entry_count(const adsgeo_report* rep) {
  return rep == nullptr ? 0 : rep->rep.entries.size();
}

int adsgeo_report_all_pass(const adsgeo_report* rep) {
  return rep != nullptr && rep->rep.all_pass() ? 1 : 0;
}

const char* adsgeo_report_entry_name(const adsgeo_report* rep, size_t i) {
  if (rep == nullptr || i >= rep->rep.entries.size()) return nullptr;
  return rep->rep.entries[i].check_name.c_str();
}

int adsgeo_report_entry_pass(const adsgeo_report* rep, size_t i) {
  if (rep == nullptr || i >= rep->rep.entries.size()) return -1;
  return rep->rep.entries[i].pass ? 1 : 0;
}

double adsgeo_report_entry_residual(const adsgeo_report* rep, size_t i) {
  if (rep == nullptr || i >= rep->rep.entries.size()) return std::nan("");
  return rep->rep.entries[i].residual;
}

double adsgeo_report_entry_tolerance(const adsgeo_report* rep, size_t i) {
  if (rep == nullptr || i >= rep->rep.entries.size()) return std::nan("");
  return rep->rep.entries[i].tolerance;
}

char* adsgeo_report_json(const adsgeo_report* rep) {
  if (rep == nullptr) return nullptr;
  try {
    return dup_text(adsgeo::report_json(rep->rep));
  } catch (const std::exception& ex) {
    fail(ADSGEO_ERR_INTERNAL, ex.what());
    return nullptr;
  }
}

int adsgeo_report_has_csv(const adsgeo_report* rep) {
  return rep != nullptr && !rep->rep.csv.empty() ? 1 : 0;
}

char* adsgeo_report_csv(const adsgeo_report* rep) {
  if (rep == nullptr || rep->rep.csv.empty()) return nullptr;
  return dup_text(rep->rep.csv);
}

void adsgeo_string_free(char* text) { std::free(text); }

}  // extern "C"
