#ifndef ADSGEO_H
#define ADSGEO_H

/* C interface to the verification library. Handles are opaque; every
 * function reports failure through an adsgeo_status and leaves a
 * human-readable message in adsgeo_last_error() for the calling thread. */

#include <stddef.h>

#if defined(__GNUC__)
#define ADSGEO_API __attribute__((visibility("default")))
#else
#define ADSGEO_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adsgeo_status {
  ADSGEO_OK = 0,
  ADSGEO_ERR_CONFIG = 1,                /* bad run configuration */
  ADSGEO_ERR_CHART = 2,                 /* point outside its chart */
  ADSGEO_ERR_DEGENERATE_METRIC = 3,     /* singular matrix at a point */
  ADSGEO_ERR_ORDER = 4,                 /* derivative order not carried */
  ADSGEO_ERR_SERIES = 5,                /* formal series misuse */
  ADSGEO_ERR_EVEN_DIMENSION_LOG = 6,    /* expansion hit a log obstruction */
  ADSGEO_ERR_VANISHING_DENOMINATOR = 7, /* guarded quantity reached zero */
  ADSGEO_ERR_SOLVE = 8,                 /* recursion, shooting or event failure */
  ADSGEO_ERR_INVALID_ARGUMENT = 9,      /* null handle or bad pointer */
  ADSGEO_ERR_INTERNAL = 10              /* anything else */
} adsgeo_status;

typedef struct adsgeo_config adsgeo_config;
typedef struct adsgeo_report adsgeo_report;

/* Message of the most recent failing call on this thread ("" if none). The
 * pointer stays valid until the next failing call on the same thread. */
ADSGEO_API const char* adsgeo_last_error(void);

/* ---- configuration ----------------------------------------------------- */

/* Fresh config with the library defaults: n = 3, metric schwarzschild-ads,
 * seed 42, no parameter or tolerance overrides, single-threaded. NULL only
 * on allocation failure. */
ADSGEO_API adsgeo_config* adsgeo_config_new(void);
ADSGEO_API void adsgeo_config_free(adsgeo_config* cfg);

ADSGEO_API adsgeo_status adsgeo_config_set_n(adsgeo_config* cfg, int n);
ADSGEO_API adsgeo_status adsgeo_config_set_metric(adsgeo_config* cfg, const char* metric_id);
ADSGEO_API adsgeo_status adsgeo_config_set_seed(adsgeo_config* cfg, unsigned long long seed);
ADSGEO_API adsgeo_status adsgeo_config_set_param(adsgeo_config* cfg, const char* key,
                                                 double value);
ADSGEO_API adsgeo_status adsgeo_config_set_tolerance(adsgeo_config* cfg, const char* check,
                                                     double value);
ADSGEO_API adsgeo_status adsgeo_config_set_threads(adsgeo_config* cfg, int threads);

/* ---- running ------------------------------------------------------------ */

/* Runs one command (verify-einstein, fg-expand, static, twist, compactify,
 * obata, all) and hands back a report on success. Setter values are range
 * checked here. Check failures do not fail the call: they appear as failed
 * report entries. */
ADSGEO_API adsgeo_status adsgeo_run(const adsgeo_config* cfg, const char* command,
                                    adsgeo_report** out);

/* ---- report access ------------------------------------------------------ */

ADSGEO_API void adsgeo_report_free(adsgeo_report* rep);

ADSGEO_API size_t adsgeo_report_entry_count(const adsgeo_report* rep);
/* 1 when every entry passed, 0 otherwise (or for NULL). */
ADSGEO_API int adsgeo_report_all_pass(const adsgeo_report* rep);

/* Entry accessors; i must be below the entry count. The returned pointer
 * stays valid for the lifetime of the report. */
ADSGEO_API const char* adsgeo_report_entry_name(const adsgeo_report* rep, size_t i);
ADSGEO_API int adsgeo_report_entry_pass(const adsgeo_report* rep, size_t i); /* -1 if out of range */
ADSGEO_API double adsgeo_report_entry_residual(const adsgeo_report* rep, size_t i);
ADSGEO_API double adsgeo_report_entry_tolerance(const adsgeo_report* rep, size_t i);

/* Full JSON payload, heap-allocated; release with adsgeo_string_free.
 * Byte-identical across reruns of the same config except wall_time_ms. */
ADSGEO_API char* adsgeo_report_json(const adsgeo_report* rep);

/* 1 when the command produced a table (fg-expand, static, obata). */
ADSGEO_API int adsgeo_report_has_csv(const adsgeo_report* rep);
/* CSV table or NULL when the command has none. */
ADSGEO_API char* adsgeo_report_csv(const adsgeo_report* rep);

ADSGEO_API void adsgeo_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* ADSGEO_H */
