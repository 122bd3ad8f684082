#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "adsgeo/adsgeo.h"

namespace {

struct Options {
  int n = 3;
  std::string metric = "schwarzschild-ads";
  unsigned long long seed = 42;
  int threads = 0;
  std::vector<std::string> params;
  std::vector<std::string> tols;
  std::string out_path;
  std::string csv_path;
};

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("--n", opt.n, "boundary dimension (3..8)");
  sub->add_option("--metric", opt.metric, "ads | schwarzschild-ads | shooting | fg-truncated");
  sub->add_option("--seed", opt.seed, "seed for the sampled verification points");
  sub->add_option("--threads", opt.threads, "worker threads (0: use ADSGEO_THREADS, else 1)");
  sub->add_option("--param", opt.params, "module parameter key=value (M, lambda, V0, N)");
  sub->add_option("--tol", opt.tols, "tolerance override check-name=value");
  sub->add_option("--out", opt.out_path, "write the JSON report here");
  sub->add_option("--csv", opt.csv_path, "write the data table here (fg-expand, static, obata)");
}

bool split_kv(const std::string& text, std::string& key, double& value) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) return false;
  const std::string raw = text.substr(eq + 1);
  char* end = nullptr;
  value = std::strtod(raw.c_str(), &end);
  if (end != raw.c_str() + raw.size() || !std::isfinite(value)) return false;
  key = text.substr(0, eq);
  return true;
}

bool write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out.flush());
}

int fail_config(const std::string& message) {
  std::fprintf(stderr, "adsgeo: %s\n", message.c_str());
  return 2;
}

using ConfigPtr = std::unique_ptr<adsgeo_config, decltype(&adsgeo_config_free)>;
using ReportPtr = std::unique_ptr<adsgeo_report, decltype(&adsgeo_report_free)>;
using TextPtr = std::unique_ptr<char, decltype(&adsgeo_string_free)>;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification driver for asymptotically hyperbolic static geometry"};
  app.require_subcommand(1);

  Options opt;
  const char* commands[] = {"verify-einstein", "fg-expand", "static",
                            "twist",           "compactify", "obata",
                            "all"};
  const char* blurbs[] = {"vacuum Einstein residuals over the catalog",
                          "boundary expansion coefficients and the radial gauge",
                          "static triple equations, shooting and the mass aspect",
                          "Killing fields, twist closure and boundary flux",
                          "conformal compactification and boundary geometry",
                          "warped comparison model and its rigidity",
                          "every module in one report"};
  for (size_t i = 0; i < 7; ++i) add_common(app.add_subcommand(commands[i], blurbs[i]), opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();

  const bool has_table =
      command == "fg-expand" || command == "static" || command == "obata";
  if (!opt.csv_path.empty() && !has_table)
    return fail_config("--csv: the " + command + " command emits no table");

  ConfigPtr cfg(adsgeo_config_new(), adsgeo_config_free);
  if (!cfg) return fail_config("out of memory");
  if (adsgeo_config_set_n(cfg.get(), opt.n) != ADSGEO_OK ||
      adsgeo_config_set_metric(cfg.get(), opt.metric.c_str()) != ADSGEO_OK ||
      adsgeo_config_set_seed(cfg.get(), opt.seed) != ADSGEO_OK ||
      adsgeo_config_set_threads(cfg.get(), opt.threads) != ADSGEO_OK)
    return fail_config(adsgeo_last_error());

  std::string key;
  double value = 0.0;
  for (const std::string& kv : opt.params) {
    if (!split_kv(kv, key, value)) return fail_config("malformed --param '" + kv + "'");
    if (adsgeo_config_set_param(cfg.get(), key.c_str(), value) != ADSGEO_OK)
      return fail_config(adsgeo_last_error());
  }
  for (const std::string& kv : opt.tols) {
    if (!split_kv(kv, key, value)) return fail_config("malformed --tol '" + kv + "'");
    if (adsgeo_config_set_tolerance(cfg.get(), key.c_str(), value) != ADSGEO_OK)
      return fail_config(adsgeo_last_error());
  }

  adsgeo_report* raw = nullptr;
  if (adsgeo_run(cfg.get(), command.c_str(), &raw) != ADSGEO_OK)
    return fail_config(adsgeo_last_error());
  ReportPtr report(raw, adsgeo_report_free);

  if (!opt.out_path.empty()) {
    const TextPtr json(adsgeo_report_json(report.get()), adsgeo_string_free);
    if (!json || !write_file(opt.out_path, json.get()))
      return fail_config("cannot write " + opt.out_path);
  }
  if (!opt.csv_path.empty()) {
    const TextPtr csv(adsgeo_report_csv(report.get()), adsgeo_string_free);
    if (!csv || !write_file(opt.csv_path, csv.get()))
      return fail_config("cannot write " + opt.csv_path);
  }

  const size_t count = adsgeo_report_entry_count(report.get());
  size_t failed = 0;
  for (size_t i = 0; i < count; ++i) {
    if (adsgeo_report_entry_pass(report.get(), i) == 1) continue;
    ++failed;
    std::printf("FAIL %s  residual=%.6e  tolerance=%.6e\n",
                adsgeo_report_entry_name(report.get(), i),
                adsgeo_report_entry_residual(report.get(), i),
                adsgeo_report_entry_tolerance(report.get(), i));
  }
  std::printf("%s: %zu entries, %zu passed, %zu failed -> %s\n", command.c_str(), count,
              count - failed, failed, failed == 0 ? "PASS" : "FAIL");
  return failed == 0 ? 0 : 1;
}
