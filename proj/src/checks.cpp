#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <thread>
#include <utility>
#include <vector>

#include "adsgeo/catalog.hpp"
#include "adsgeo/compactified.hpp"
#include "adsgeo/curvature.hpp"
#include "adsgeo/fg.hpp"
#include "adsgeo/killing.hpp"
#include "adsgeo/obata.hpp"
#include "adsgeo/report.hpp"
#include "adsgeo/shooting.hpp"
#include "adsgeo/static_triple.hpp"

namespace adsgeo {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string render_point(const ChartPoint& p) {
  std::string out = "(";
  for (int i = 0; i < p.dim(); ++i) {
    if (i) out += ", ";
    out += fmt(p[i]);
  }
  return out + ")";
}

void require_close(ReportEntry& e, double lhs, double rhs) {
  e.lhs = lhs;
  e.rhs = rhs;
  e.residual = std::abs(lhs - rhs);
}

// separation check: pass when the value clears the floor
void require_at_least(ReportEntry& e, double value, double floor) {
  e.lhs = value;
  e.rhs = floor;
  e.residual = std::max(0.0, floor - value);
}

double lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t m = x.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < m; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

struct Task {
  std::string check;
  int index = 0;
  std::string metric;
  std::map<std::string, double> params;
  double tolerance = 0.0;
  std::function<void(ReportEntry&)> body;
};

int resolve_threads(const RunConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  if (const char* env = std::getenv("ADSGEO_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return std::min(v, 64);
  }
  return 1;
}

class Runner {
 public:
  explicit Runner(const RunConfig& cfg) : cfg_(cfg) {}

  const RunConfig& cfg() const { return cfg_; }

  /// Independent, reproducible point stream per check and index.
  std::mt19937_64 rng(const std::string& check, int index) const {
    return std::mt19937_64((cfg_.seed ^ fnv1a(check)) +
                           0x9e3779b97f4a7c15ull * static_cast<uint64_t>(index));
  }

  void add(std::string check, int index, std::string metric, double default_tol,
           std::map<std::string, double> params, std::function<void(ReportEntry&)> body) {
    const auto it = cfg_.tolerances.find(check);
    const double tol = it == cfg_.tolerances.end() ? default_tol : it->second;
    tasks_.push_back(
        {std::move(check), index, std::move(metric), std::move(params), tol, std::move(body)});
  }

  /// Order-stable assembly: entries sorted by check name then index before
  /// execution, so worker interleaving never shows in the report.
  std::vector<ReportEntry> execute() {
    std::stable_sort(tasks_.begin(), tasks_.end(), [](const Task& a, const Task& b) {
      return a.check != b.check ? a.check < b.check : a.index < b.index;
    });
    std::vector<ReportEntry> out(tasks_.size());
    std::atomic<size_t> next{0};
    const auto worker = [&] {
      for (size_t i = next.fetch_add(1); i < tasks_.size(); i = next.fetch_add(1))
        out[i] = run_one(tasks_[i]);
    };
    const int nthreads = resolve_threads(cfg_);
    if (nthreads <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<size_t>(nthreads));
      for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
      for (std::thread& t : pool) t.join();
    }
    return out;
  }

 private:
  static ReportEntry run_one(const Task& t) {
    ReportEntry e;
    e.check_name = t.check;
    e.metric_id = t.metric;
    e.params = t.params;
    e.tolerance = t.tolerance;
    const auto start = std::chrono::steady_clock::now();
    try {
      t.body(e);
    } catch (const std::exception& ex) {
      e.error = ex.what();
      e.residual = std::max(1.0, 2.0 * e.tolerance);
    } catch (...) {
      e.error = "unknown failure";
      e.residual = std::max(1.0, 2.0 * e.tolerance);
    }
    e.pass = e.residual <= e.tolerance;
    e.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return e;
  }

  RunConfig cfg_;
  std::vector<Task> tasks_;
};

StaticTriple config_triple(const RunConfig& cfg) {
  if (cfg.metric_id == "ads") return ads_triple(cfg.n);
  return schwarzschild_triple(cfg.n, param_or(cfg, "M", 1.0));
}

int fg_order(const RunConfig& cfg) {
  const int wanted = static_cast<int>(param_or(cfg, "N", 6.0));
  return std::max(wanted, cfg.n);
}

FGSolution config_fg(const RunConfig& cfg, double seed) {
  return fg_recursion(cfg.n, fg_order(cfg), seed, cfg.n % 2 == 0);
}

TruncatedSeries series_power(const TruncatedSeries& base, int k) {
  TruncatedSeries out = TruncatedSeries::constant(1.0, base.order());
  for (int i = 0; i < k; ++i) out = out * base;
  return out;
}

// ---------------------------------------------------------------- einstein

void add_einstein_checks(Runner& r) {
  const RunConfig cfg = r.cfg();
  const int n = cfg.n;
  const double mass = param_or(cfg, "M", 1.0);
  const double lambda = -0.5 * n * (n - 1.0);

  for (int which = 0; which < 2; ++which) {
    const std::string id = which == 0 ? "ads" : "schwarzschild-ads";
    const std::string check = "einstein-residual-" + id;
    std::map<std::string, double> params = {{"Lambda", lambda}};
    if (which == 1) params["M"] = mass;
    for (int i = 0; i < 10; ++i) {
      r.add(check, i, id, 1e-8, params, [&r, check, i, which, n, mass](ReportEntry& e) {
        const MetricField g =
            which == 0 ? ads_global_metric(n) : schwarzschild_ads_metric(n, mass);
        auto rng = r.rng(check, i);
        const ChartPoint p = sample_point(g.chart(), rng);
        e.point = render_point(p);
        require_close(e, einstein_residual(g, p), 0.0);
      });
    }
  }

  const int N = fg_order(cfg);
  // zero mass truncates exactly and leaves nothing to fit
  const double decay_mass = mass == 0.0 ? 1.0 : mass;
  r.add("einstein-fg-truncated-decay", 0, "fg-truncated",
        0.0, {{"N", static_cast<double>(N)}, {"M", decay_mass}}, [n, N, decay_mass](ReportEntry& e) {
          const TruncatedSeries pv = static_catalog_profile(n, decay_mass, N);
          const RadialGauge gauge = radial_fg_gauge(n, N, pv, pv);
          const MetricField g = warped_series_metric_field(gauge.solution.metric);
          const Chart& c = g.chart();
          std::vector<double> lx, ly;
          for (double s : {0.1, 0.05, 0.025}) {
            std::vector<double> coords(static_cast<size_t>(c.dim()));
            for (int i = 0; i < c.dim(); ++i)
              coords[static_cast<size_t>(i)] = 0.5 * (c.sample_box(i).lo + c.sample_box(i).hi);
            coords[1] = s;
            lx.push_back(std::log(s));
            ly.push_back(std::log(einstein_residual(g, ChartPoint(c, coords))));
          }
          e.point = "s in {0.1, 0.05, 0.025}";
          require_at_least(e, lsq_slope(lx, ly), N - 2.0);
        });
}

// ---------------------------------------------------------------- fg-expand

void add_fg_checks(Runner& r) {
  const RunConfig cfg = r.cfg();
  const int n = cfg.n;
  const double mass = param_or(cfg, "M", 1.0);
  const std::map<std::string, double> params = {{"N", fg_order(cfg)}};

  r.add("fg-odd-below-n", 0, "fg-truncated", 1e-12, params, [cfg](ReportEntry& e) {
    const FGSolution sol = config_fg(cfg, 0.0);
    e.point = "orders below " + std::to_string(cfg.n);
    require_close(e, sol.max_odd_below_n, 0.0);
  });

  r.add("fg-determinism", 0, "fg-truncated", 1e-12, params, [cfg, n](ReportEntry& e) {
    const FGSolution a = config_fg(cfg, 0.0);
    const FGSolution b = config_fg(cfg, 0.37);
    double gap = 0.0;
    for (int k = 0; k < n && k <= a.metric.A2.order(); ++k) {
      gap = std::max(gap, std::abs(a.metric.A2.coeff(k) - b.metric.A2.coeff(k)));
      gap = std::max(gap, std::abs(a.metric.B2.coeff(k) - b.metric.B2.coeff(k)));
    }
    e.point = "orders below " + std::to_string(n) + ", seeds {0, 0.37}";
    require_close(e, gap, 0.0);
  });

  for (int which = 0; which < 2; ++which) {
    const std::string check = which == 0 ? "fg-closed-form-time" : "fg-closed-form-sphere";
    r.add(check, 0, "fg-truncated", 1e-12, params, [cfg, which](ReportEntry& e) {
      const FGSolution sol = config_fg(cfg, 0.0);
      const TruncatedSeries& got = which == 0 ? sol.metric.A2 : sol.metric.B2;
      const TruncatedSeries want =
          which == 0 ? ads_time_warp_sq(got.order()) : ads_sphere_warp_sq(got.order());
      double gap = 0.0;
      for (int k = 0; k <= got.order(); ++k)
        gap = std::max(gap, std::abs(got.coeff(k) - want.coeff(k)));
      e.point = "orders 0.." + std::to_string(got.order()) + ", zero seed";
      require_close(e, gap, 0.0);
    });
  }

  r.add("fg-trace-residual", 0, "fg-truncated", 1e-10, params, [cfg](ReportEntry& e) {
    const FGSolution sol = config_fg(cfg, 0.0);
    e.point = "free order " + std::to_string(cfg.n);
    require_close(e, sol.trace_residual, 0.0);
  });

  r.add("fg-cross-residual", 0, "fg-truncated", 1e-10, params, [cfg](ReportEntry& e) {
    const FGSolution sol = config_fg(cfg, 0.0);
    e.point = "all solved orders";
    require_close(e, sol.cross_residual, 0.0);
  });

  const int gauge_order = std::max(fg_order(cfg), n + 2);
  const std::map<std::string, double> gauge_params = {{"M", mass}, {"N", gauge_order}};

  r.add("fg-gauge-identity", 0, "schwarzschild-ads", 1e-10, gauge_params,
        [n, mass, gauge_order](ReportEntry& e) {
          const TruncatedSeries pv = static_catalog_profile(n, mass, gauge_order);
          const RadialGauge gauge = radial_fg_gauge(n, gauge_order, pv, pv);
          e.point = "series orders 0.." + std::to_string(gauge_order);
          require_close(e, gauge.identity_residual, 0.0);
        });

  // at even n the zero-mass background already carries an order-n sphere
  // coefficient, so the mass readout is alpha relative to that background
  r.add("fg-gauge-alpha-linear", 0, "schwarzschild-ads", 1e-8, gauge_params,
        [n, mass, gauge_order](ReportEntry& e) {
          const TruncatedSeries pv0 = static_catalog_profile(n, 0.0, gauge_order);
          const double alpha0 = radial_fg_gauge(n, gauge_order, pv0, pv0).solution.alpha;
          double ref = 0.0;
          double gap = 0.0;
          int k = 0;
          for (double m : {mass, 0.5 * mass, 2.0 * mass}) {
            const TruncatedSeries pv = static_catalog_profile(n, m, gauge_order);
            const double alpha = radial_fg_gauge(n, gauge_order, pv, pv).solution.alpha;
            const double ratio = (alpha - alpha0) / m;
            if (k++ == 0)
              ref = ratio;
            else
              gap = std::max(gap, std::abs(ratio - ref));
          }
          e.point = "M in {" + fmt(mass) + ", " + fmt(0.5 * mass) + ", " + fmt(2.0 * mass) + "}";
          require_close(e, gap, 0.0);
        });

  r.add("fg-gauge-mass-aspect", 0, "schwarzschild-ads", 1e-8, gauge_params,
        [n, mass, gauge_order](ReportEntry& e) {
          const TruncatedSeries pv0 = static_catalog_profile(n, 0.0, gauge_order);
          const double alpha0 = radial_fg_gauge(n, gauge_order, pv0, pv0).solution.alpha;
          const TruncatedSeries pv = static_catalog_profile(n, mass, gauge_order);
          const RadialGauge gauge = radial_fg_gauge(n, gauge_order, pv, pv);
          // closed-form W in w = 1/r pushed through the gauge map w(s)
          const TruncatedSeries w_pow = series_power(gauge.w_of_s, n - 2);
          const TruncatedSeries w_pow2 = series_power(gauge.w_of_s, 2 * n - 2);
          const TruncatedSeries w_series =
              (-(n - 1.0) * mass) * w_pow + (-0.25 * (n - 2.0) * (n - 2.0) * mass * mass) * w_pow2;
          e.point = "coefficient of s^" + std::to_string(n - 2);
          require_close(e, n * (gauge.solution.alpha - alpha0), w_series.coeff(n - 2));
        });
}

std::string fg_csv(const RunConfig& cfg) {
  const FGSolution sol = config_fg(cfg, 0.0);
  std::string out = "order,A2,B2\n";
  for (int k = 0; k <= sol.metric.A2.order(); ++k)
    out += std::to_string(k) + "," + fmt17(sol.metric.A2.coeff(k)) + "," +
           fmt17(sol.metric.B2.coeff(k)) + "\n";
  return out;
}

// ---------------------------------------------------------------- static

void add_static_checks(Runner& r) {
  const RunConfig cfg = r.cfg();
  const int n = cfg.n;
  const bool pure = cfg.metric_id == "ads";
  const double mass = pure ? 0.0 : param_or(cfg, "M", 1.0);
  const std::string id = pure ? "ads" : "schwarzschild-ads";
  const std::map<std::string, double> params = pure
                                                   ? std::map<std::string, double>{}
                                                   : std::map<std::string, double>{{"M", mass}};

  for (int i = 0; i < 10; ++i) {
    r.add("static-potential-equation", i, id, 1e-8, params, [&r, cfg, i](ReportEntry& e) {
      const StaticTriple t = config_triple(cfg);
      auto rng = r.rng("static-potential-equation", i);
      const ChartPoint p = sample_point(t.chart, rng);
      e.point = render_point(p);
      require_close(e, potential_residual(t, p), 0.0);
    });
    r.add("static-slice-equation", i, id, 1e-8, params, [&r, cfg, i](ReportEntry& e) {
      const StaticTriple t = config_triple(cfg);
      auto rng = r.rng("static-slice-equation", i);
      const ChartPoint p = sample_point(t.chart, rng);
      e.point = render_point(p);
      require_close(e, slice_residual(t, p), 0.0);
    });
    r.add("static-mass-aspect", i, id, 1e-10, params, [&r, cfg, i, n, mass](ReportEntry& e) {
      const StaticTriple t = config_triple(cfg);
      auto rng = r.rng("static-mass-aspect", i);
      const ChartPoint p = sample_point(t.chart, rng);
      e.point = render_point(p);
      const double want = -(n - 1.0) * mass * std::pow(p[0], 2.0 - n) -
                          0.25 * (n - 2.0) * (n - 2.0) * mass * mass * std::pow(p[0], 2.0 - 2.0 * n);
      require_close(e, mass_aspect(t, p), want);
    });
  }

  r.add("static-center-launch", 0, "shooting", 1e-7, {{"V0", 1.0}}, [n](ReportEntry& e) {
    const ShootResult shot = shoot_outward(n, 1.0, 10.0, exterior_options());
    double gap = 0.0;
    for (size_t i = 0; i < shot.rs.size(); ++i)
      gap = std::max(gap, std::abs(shot.states[i][0] / (1.0 + shot.rs[i] * shot.rs[i]) - 1.0));
    e.point = "march r in [0.001, 10] (" + std::to_string(shot.rs.size()) + " steps)";
    require_close(e, gap, 0.0);
  });

  r.add("static-center-f-lock", 0, "shooting", 1e-5, {{"V0", 1.0}}, [n](ReportEntry& e) {
    const ShootResult shot = shoot_outward(n, 1.0, 10.0, exterior_options());
    e.point = "march r in [0.001, 10]";
    require_close(e, shot.max_fv_gap, 0.0);
  });

  r.add("static-center-constraint", 0, "shooting", 1e-7, {{"V0", 1.0}}, [n](ReportEntry& e) {
    const ShootResult shot = shoot_outward(n, 1.0, 10.0, exterior_options());
    double sup = 0.0;
    for (size_t i = 0; i < shot.rs.size(); i += 10) {
      const std::vector<double> y(shot.states[i].begin(), shot.states[i].end());
      sup = std::max(sup, std::abs(reduced_constraint(n, shot.rs[i], y)));
    }
    e.point = "march r in [0.001, 10], every 10th step";
    require_close(e, sup, 0.0);
  });

  if (mass > 0.0) {
    r.add("static-horizon-radius", 0, id, 1e-6, params, [n, mass](ReportEntry& e) {
      const double rh = schwarzschild_horizon_radius(n, mass);
      const ShootResult shot = shoot_inward(n, mass, rh + 1.0, std::max(1e-3, 0.1 * rh));
      e.point = "event radius " + fmt(shot.horizon_estimate);
      require_close(e, shot.horizon_estimate, rh);
    });
    r.add("static-far-field-mass", 0, id, 1e-3, params, [n, mass](ReportEntry& e) {
      const double rh = schwarzschild_horizon_radius(n, mass);
      // the readout W r^(n-2) amplifies cancellation in V - f U^2 / (4 V)
      // like r^n, so the radius shrinks with dimension
      const double r_far = std::max(std::pow(10.0, 8.0 / n), rh + 5.0);
      const ShootResult shot = shoot_exterior(n, mass, rh + 1.0, r_far);
      const double w = mass_aspect_state(shot.states.back());
      const double want = -(n - 1.0) * mass -
                          0.25 * (n - 2.0) * (n - 2.0) * mass * mass * std::pow(shot.r_end, -n);
      e.point = "readout at r = " + fmt(shot.r_end);
      require_close(e, w * std::pow(shot.r_end, n - 2.0), want);
    });
  }
}

std::string static_csv(const RunConfig& cfg) {
  const int n = cfg.n;
  const bool pure = cfg.metric_id == "ads";
  const double mass = pure ? 0.0 : param_or(cfg, "M", 1.0);
  const double rh = pure ? 0.0 : schwarzschild_horizon_radius(n, mass);
  const ShootResult shot =
      pure ? shoot_outward(n, 1.0, 10.0)
           : shoot_exterior(n, mass, rh + 1.0, std::max(std::pow(10.0, 8.0 / n), rh + 5.0));
  std::string out = "r,V,f,W\n";
  const size_t stride = std::max<size_t>(1, shot.rs.size() / 160);
  for (size_t i = 0; i < shot.rs.size(); i += stride)
    out += fmt17(shot.rs[i]) + "," + fmt17(shot.states[i][0]) + "," + fmt17(shot.states[i][2]) +
           "," + fmt17(mass_aspect_state(shot.states[i])) + "\n";
  return out;
}

// ---------------------------------------------------------------- twist

void add_twist_checks(Runner& r) {
  const RunConfig cfg = r.cfg();
  const int n = cfg.n;
  const double lambda = param_or(cfg, "lambda", 0.3);
  const std::map<std::string, double> params = {{"lambda", lambda}};

  const std::vector<StationaryData> catalog = killing_catalog(n, lambda);
  for (size_t which = 0; which < catalog.size(); ++which) {
    const std::string& id = catalog[which].id;
    const auto field_at = [n, lambda, which]() {
      return killing_catalog(n, lambda)[which];
    };
    for (int i = 0; i < 5; ++i) {
      const std::string check = "killing-residual-" + id;
      r.add(check, i, "ads", 1e-8, params, [&r, check, i, field_at](ReportEntry& e) {
        const StationaryData d = field_at();
        auto rng = r.rng(check, i);
        const ChartPoint p = sample_point(d.g.chart(), rng);
        e.point = render_point(p);
        require_close(e, killing_residual(d, p), 0.0);
      });
    }
    for (int i = 0; i < 6; ++i) {
      const std::string check = "lichnerowicz-" + id;
      r.add(check, i, "ads", 1e-8, params, [&r, check, i, field_at](ReportEntry& e) {
        const StationaryData d = field_at();
        auto rng = r.rng(check, i);
        const ChartPoint p = sample_point(d.g.chart(), rng);
        e.point = render_point(p);
        require_close(e, lichnerowicz_residual(d, p), 0.0);
      });
    }
    for (int i = 0; i < 6; ++i) {
      const std::string check = "twist-closure-" + id;
      r.add(check, i, "ads", 1e-7, params, [&r, check, i, field_at](ReportEntry& e) {
        const StationaryData d = field_at();
        auto rng = r.rng(check, i);
        const ChartPoint p = sample_point(d.g.chart(), rng);
        e.point = render_point(p);
        require_close(e, twist_closure_residual(d, p), 0.0);
      });
    }
    for (int i = 0; i < 6; ++i) {
      const std::string check = "flux-identity-" + id;
      r.add(check, i, "ads", 1e-7, params, [&r, check, i, field_at](ReportEntry& e) {
        const StationaryData d = field_at();
        auto rng = r.rng(check, i);
        const ChartPoint p = sample_point(d.g.chart(), rng);
        e.point = render_point(p);
        require_close(e, flux_identity_residual(d, p), 0.0);
      });
    }
  }

  const double ladder[] = {0.2, 0.1, 0.05};
  for (int i = 0; i < 3; ++i) {
    const double eps = ladder[i];
    r.add("static-flux-zero", i, "ads", 1e-10, {{"eps", eps}}, [n, eps](ReportEntry& e) {
      const StationaryData d = stationary_ads_boundary_chart(n, 0.0);
      const FluxReport f = boundary_flux(d, eps, 0.3, 16);
      e.point = "sphere s = " + fmt(eps) + ", " + std::to_string(f.nodes) + " nodes per angle";
      require_close(e, f.value, 0.0);
    });
  }

  r.add("twist-closure-control-breaks", 0, "ads", 0.0, params, [&r, n, lambda](ReportEntry& e) {
    const StationaryData d = stationary_non_einstein_control(n, lambda);
    auto rng = r.rng("twist-closure-control-breaks", 0);
    const ChartPoint p = sample_point(d.g.chart(), rng);
    e.point = render_point(p);
    require_at_least(e, twist_closure_residual(d, p), 1e-3);
  });
}

// ---------------------------------------------------------------- compactify

void add_compactify_checks(Runner& r) {
  const RunConfig cfg = r.cfg();
  const int n = cfg.n;
  const double mass = param_or(cfg, "M", 1.0);
  const std::map<std::string, double> sads_params = {{"M", mass}};

  for (int which = 0; which < 2; ++which) {
    const bool pure = which == 0;
    const std::string id = pure ? "ads" : "schwarzschild-ads";
    const std::map<std::string, double> params =
        pure ? std::map<std::string, double>{} : sads_params;
    const auto triple_at = [pure, n, mass]() {
      return pure ? ads_triple(n) : schwarzschild_triple(n, mass);
    };

    const double boch_tol = pure ? 1e-8 : 1e-7;
    for (int i = 0; i < 10; ++i) {
      const std::string check = "bochner-identity-" + id;
      r.add(check, i, id, boch_tol, params, [&r, check, i, triple_at](ReportEntry& e) {
        const StaticTriple t = triple_at();
        auto rng = r.rng(check, i);
        const ChartPoint p = sample_point(t.chart, rng);
        e.point = render_point(p);
        require_close(e, bochner_residual(t, p), 0.0);
      });
    }

    for (int i = 0; i < 5; ++i) {
      const std::string check = "conformal-scalar-agreement-" + id;
      r.add(check, i, id, 1e-6, params, [&r, check, i, triple_at](ReportEntry& e) {
        const StaticTriple t = triple_at();
        const CompactifiedSlice c = compactify(t);
        auto rng = r.rng(check, i);
        const ChartPoint p = sample_point(t.chart, rng);
        e.point = render_point(p);
        const ConformalScalarCheck k = conformal_scalar_check(c, p);
        e.lhs = k.direct;
        e.rhs = k.mass_aspect_form;
        e.residual = std::max(std::abs(k.direct - k.mass_aspect_form),
                              std::abs(k.direct - k.conformal_laplacian));
      });
    }

    const std::string umb = "boundary-umbilicity-" + id;
    r.add(umb, 0, id, 1e-6, params, [n, pure, mass](ReportEntry& e) {
      const BoundaryGeometry bg = boundary_geometry(n, pure ? 0.0 : mass, {1e-1, 1e-2, 1e-3});
      double sup = 0.0;
      for (const BoundaryRung& rung : bg.rungs) sup = std::max(sup, rung.umbilicity_defect);
      e.point = "ladder eps in {0.1, 0.01, 0.001}";
      require_close(e, sup, 0.0);
    });

    const std::string nrm = "boundary-normal-" + id;
    r.add(nrm, 0, id, 5e-3, params, [n, pure, mass](ReportEntry& e) {
      const BoundaryGeometry bg = boundary_geometry(n, pure ? 0.0 : mass, {1e-3});
      e.point = "sphere eps = 0.001";
      require_close(e, bg.rungs.back().normal_component, 1.0);
    });

    const std::string rnd = "boundary-round-limit-" + id;
    r.add(rnd, 0, id, 5e-3, params, [n, pure, mass](ReportEntry& e) {
      const BoundaryGeometry bg = boundary_geometry(n, pure ? 0.0 : mass, {1e-3});
      e.point = "sphere eps = 0.001";
      e.lhs = bg.rungs.back().round_gap;
      e.rhs = 0.0;
      e.residual = std::max(bg.rungs.back().round_gap, bg.rungs.back().form_gap);
    });
  }

  for (int i = 0; i < 5; ++i) {
    r.add("compactified-flat-ads", i, "ads", 1e-8, {}, [&r, i, n](ReportEntry& e) {
      const CompactifiedSlice c = compactify(ads_triple(n));
      auto rng = r.rng("compactified-flat-ads", i);
      const ChartPoint p = sample_point(c.base.chart, rng);
      e.point = render_point(p);
      require_close(e, sup_norm(curvature_bundle(c.gbar, p).riemann_lo), 0.0);
    });
    r.add("rigidity-ads", i, "ads", 1e-9, {}, [&r, i, n](ReportEntry& e) {
      const StaticTriple t = ads_triple(n);
      auto rng = r.rng("rigidity-ads", i);
      const ChartPoint p = sample_point(t.chart, rng);
      e.point = render_point(p);
      require_close(e, rigidity_check(t, p), 0.0);
    });
  }

  r.add("rigidity-separation-schwarzschild-ads", 0, "schwarzschild-ads", 0.0, sads_params,
        [&r, n, mass](ReportEntry& e) {
          const StaticTriple t = schwarzschild_triple(n, mass);
          double least = 1e300;
          for (int i = 0; i < 10; ++i) {
            auto rng = r.rng("rigidity-separation-schwarzschild-ads", i);
            least = std::min(least, rigidity_check(t, sample_point(t.chart, rng)));
          }
          e.point = "min over 10 seeded points";
          require_at_least(e, least, 1e-2);
        });

  r.add("mass-aspect-pinned", 0, "schwarzschild-ads", 1e-10, sads_params,
        [n, mass](ReportEntry& e) {
          const StaticTriple t = schwarzschild_triple(n, mass);
          const double rh = schwarzschild_horizon_radius(n, mass);
          const double r0 = rh + 0.05 < 2.0 ? 2.0 : rh + 1.0;
          std::vector<double> coords(static_cast<size_t>(t.chart.dim()));
          coords[0] = r0;
          for (int i = 1; i < t.chart.dim(); ++i)
            coords[static_cast<size_t>(i)] =
                0.5 * (t.chart.sample_box(i).lo + t.chart.sample_box(i).hi);
          const ChartPoint p(t.chart, coords);
          e.point = "r = " + fmt(r0);
          const double want = -(n - 1.0) * mass * std::pow(r0, 2.0 - n) -
                              0.25 * (n - 2.0) * (n - 2.0) * mass * mass *
                                  std::pow(r0, 2.0 - 2.0 * n);
          require_close(e, mass_aspect(t, p), want);
        });

  r.add("scalar-scan-ads", 0, "ads", 1e-10, {}, [n](ReportEntry& e) {
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(0.3 + (30.0 - 0.3) * i / 100.0);
    const ScalarScan scan = nonneg_scalar_scan(ads_triple(n), grid);
    e.point = "grid r in [0.3, 30] (101 points)";
    require_close(e, scan.min_value, 0.0);
  });

  r.add("scalar-scan-schwarzschild-ads", 0, "schwarzschild-ads", 0.0, sads_params,
        [n, mass](ReportEntry& e) {
          const double rh = schwarzschild_horizon_radius(n, mass);
          std::vector<double> grid;
          for (int i = 0; i <= 200; ++i)
            grid.push_back(rh + 0.01 + (50.0 - rh - 0.01) * i / 200.0);
          const ScalarScan scan = nonneg_scalar_scan(schwarzschild_triple(n, mass), grid);
          e.point = "grid r in [" + fmt(grid.front()) + ", 50], min at r = " + fmt(scan.r_at_min);
          // the horizon region must drive the scan strictly negative
          require_at_least(e, -scan.min_value, 1.0);
        });

  r.add("boundary-rate-schwarzschild-ads", 0, "schwarzschild-ads", 0.0, sads_params,
        [n, mass](ReportEntry& e) {
          const BoundaryGeometry bg = boundary_geometry(n, mass, {1e-1, 1e-2, 1e-3});
          e.point = "ladder eps in {0.1, 0.01, 0.001}";
          require_at_least(e, bg.fitted_rate, 1.0);
        });
}

// ---------------------------------------------------------------- obata

void add_obata_checks(Runner& r) {
  const RunConfig cfg = r.cfg();
  const int n = cfg.n;
  const double s_max = 3.0;
  const double tol = 1e-10;
  const std::map<std::string, double> params = {{"s_max", s_max}};

  r.add("obata-potential-value", 0, "ads", 1e-9, params, [s_max, tol](ReportEntry& e) {
    const ComparisonSamples phi = integrate_phi(s_max, tol);
    const size_t k = phi.s.size() / 3;  // node at s = 1 on the uniform grid
    e.point = "s = " + fmt(phi.s[k]);
    require_close(e, phi.value[k], 1.5430806348152437);
  });

  r.add("obata-jacobi-value", 0, "ads", 1e-9, params, [s_max, tol](ReportEntry& e) {
    const ComparisonSamples f = integrate_jacobi(s_max, tol);
    const size_t k = f.s.size() / 3;
    e.point = "s = " + fmt(f.s[k]);
    require_close(e, f.value[k], 1.1752011936438014);
  });

  r.add("obata-energy-conservation", 0, "ads", 1e-9, params, [s_max, tol](ReportEntry& e) {
    const ComparisonSamples phi = integrate_phi(s_max, tol);
    double drift = 0.0;
    for (size_t i = 0; i < phi.s.size(); ++i)
      drift = std::max(drift,
                       std::abs(phi.value[i] * phi.value[i] - phi.slope[i] * phi.slope[i] - 1.0));
    e.point = "grid [0, " + fmt(s_max) + "] (" + std::to_string(phi.s.size()) + " nodes)";
    require_close(e, drift, 0.0);
  });

  r.add("obata-first-integral", 0, "ads", 1e-9, params, [s_max, tol](ReportEntry& e) {
    const ComparisonSamples f = integrate_jacobi(s_max, tol);
    double drift = 0.0;
    for (size_t i = 0; i < f.s.size(); ++i)
      drift =
          std::max(drift, std::abs(f.slope[i] * f.slope[i] - f.value[i] * f.value[i] - 1.0));
    e.point = "grid [0, " + fmt(s_max) + "] (" + std::to_string(f.s.size()) + " nodes)";
    require_close(e, drift, 0.0);
  });

  r.add("obata-spherical-control", 0, "ads", 1e-9, {}, [tol](ReportEntry& e) {
    const double half_pi = 2.0 * std::atan(1.0);
    const ComparisonSamples f = integrate_jacobi(half_pi, tol, 1.0);
    e.point = "s = pi/2, curvature hook +1";
    require_close(e, f.value.back(), 1.0);
  });

  for (int i = 0; i < 10; ++i) {
    r.add("obata-rigidity", i, "ads", 1e-9, params, [&r, i, n, s_max, tol](ReportEntry& e) {
      const ObataSolution sol = solve_obata(n, s_max, tol);
      auto rng = r.rng("obata-rigidity", i);
      const ChartPoint p = sample_point(sol.reconstructed.chart(), rng);
      e.point = render_point(p);
      require_close(e, verify_rigidity(sol, p), 0.0);
    });
  }

  r.add("obata-ricci", 0, "ads", 1e-8, params, [&r, n, s_max, tol](ReportEntry& e) {
    const ObataSolution sol = solve_obata(n, s_max, tol);
    double sup = 0.0;
    for (int i = 0; i < 5; ++i) {
      auto rng = r.rng("obata-ricci", i);
      const ChartPoint p = sample_point(sol.reconstructed.chart(), rng);
      const CurvatureBundle cb = curvature_bundle(sol.reconstructed, p);
      for (int a = 0; a < cb.dim; ++a)
        for (int b = 0; b < cb.dim; ++b)
          sup = std::max(sup, std::abs(cb.ricci_at(a, b) + (n - 1.0) * cb.metric_at(a, b)));
    }
    e.point = "sup over 5 seeded points";
    require_close(e, sup, 0.0);
  });

  r.add("obata-frame-curvature", 0, "ads", 1e-8, params, [&r, n, s_max, tol](ReportEntry& e) {
    const ObataSolution sol = solve_obata(n, s_max, tol);
    double sup = 0.0;
    const int m = n - 1;
    for (int i = 0; i < 5; ++i) {
      auto rng = r.rng("obata-frame-curvature", i);
      const ChartPoint p = sample_point(sol.reconstructed.chart(), rng);
      const std::vector<double> fr = frame_curvature(sol, p);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          sup = std::max(sup,
                         std::abs(fr[static_cast<size_t>(a) * m + b] + (a == b ? 1.0 : 0.0)));
    }
    e.point = "sup over 5 seeded points";
    require_close(e, sup, 0.0);
  });

  r.add("obata-ball-model", 0, "ads", 1e-10, params, [n, s_max, tol](ReportEntry& e) {
    const ObataSolution sol = solve_obata(n, s_max, tol);
    e.point = "grid [0, " + fmt(s_max) + "] under r = f(s)";
    require_close(e, ball_model_gap(sol), 0.0);
  });
}

std::string obata_csv(const RunConfig& cfg) {
  const ObataSolution sol = solve_obata(cfg.n, 3.0, 1e-10);
  std::string out = "s,phi,f\n";
  for (size_t i = 0; i < sol.s_grid.size(); i += 4)
    out += fmt17(sol.s_grid[i]) + "," + fmt17(sol.phi[i]) + "," + fmt17(sol.jacobi[i]) + "\n";
  return out;
}

}  // namespace

Report run_command(const std::string& command, const RunConfig& cfg) {
  validate_config(cfg);
  Runner runner(cfg);
  Report report;
  report.command = command;
  report.config = cfg;

  if (command == "verify-einstein") {
    add_einstein_checks(runner);
  } else if (command == "fg-expand") {
    add_fg_checks(runner);
    report.csv = fg_csv(cfg);
  } else if (command == "static") {
    add_static_checks(runner);
    report.csv = static_csv(cfg);
  } else if (command == "twist") {
    add_twist_checks(runner);
  } else if (command == "compactify") {
    add_compactify_checks(runner);
  } else if (command == "obata") {
    add_obata_checks(runner);
    report.csv = obata_csv(cfg);
  } else if (command == "all") {
    add_einstein_checks(runner);
    add_fg_checks(runner);
    add_static_checks(runner);
    add_twist_checks(runner);
    add_compactify_checks(runner);
    add_obata_checks(runner);
  } else {
    throw ConfigError("unknown command: " + command);
  }

  report.entries = runner.execute();
  return report;
}

}  // namespace adsgeo
