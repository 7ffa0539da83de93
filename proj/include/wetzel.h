/*
 * C interface to the wetzel construction library.
 *
 * The library drives finite stages of an interpolation construction over
 * exact Gaussian-rational arithmetic and emits machine-checkable JSON
 * certificates for every bound it claims. This header exposes the pipeline
 * surface behind opaque handles: run the stages, serialize or parse the run
 * artifact, re-verify an artifact independently, search for a separating
 * point, and enumerate the node sequence.
 *
 * All strings are UTF-8, NUL-terminated JSON unless noted. Strings returned
 * through `char **` out-parameters are owned by the caller and must be
 * released with wz_string_free(). Handles must be released with
 * wz_run_free(). On any failure the out-parameters are left untouched and
 * wz_last_error() gives a diagnostic for the calling thread.
 */

#ifndef WETZEL_H
#define WETZEL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wz_status {
  WZ_OK = 0,
  WZ_ERR_ARGUMENT = 1, /* null pointer or otherwise unusable argument */
  WZ_ERR_PARSE = 2,    /* malformed JSON, schema mismatch, bad rational */
  WZ_ERR_DOMAIN = 3,   /* violated precondition (division by zero, ...) */
  WZ_ERR_VERIFY = 4,   /* certificate re-check failed */
  WZ_ERR_SEARCH = 5,   /* search space exhausted */
  WZ_ERR_INTERNAL = 6
} wz_status;

/* A completed construction run: family, certificates, reports. */
typedef struct wz_run wz_run;

uint32_t wz_api_version(void);
const char *wz_status_name(wz_status status);
/* Last failure detail for this thread; valid until the next API call. */
const char *wz_last_error(void);

/* Runs the construction described by a JSON config object (all keys
 * optional): {"stages": 8, "enumeration": "zigzag-D", "policy":
 * "offset-half", "verify": [...], "separating_search_size": 256, ...}. */
wz_status wz_run_stages(const char *config_json, wz_run **out_run);

/* Parses a previously emitted run artifact. Strict: schema mismatches and
 * non-canonical rationals are rejected, never normalized. */
wz_status wz_run_parse(const char *artifact_json, wz_run **out_run);

/* Serializes the run artifact; byte-deterministic for equal runs. */
wz_status wz_run_to_json(const wz_run *run, char **out_json);

/* Re-checks every certificate from the artifact's embedded quantities
 * alone, with no construction state. Returns WZ_OK when everything passes,
 * WZ_ERR_VERIFY otherwise; the report (one line per failure) is returned
 * either way when out_report is non-null. */
wz_status wz_run_verify(const wz_run *run, char **out_report);

/* Searches the first search_size enumeration points for a separating point
 * of the run's family (0 keeps the configured size). Returns the report as
 * JSON; WZ_ERR_SEARCH when the space is exhausted. */
wz_status wz_run_separate(const wz_run *run, uint64_t search_size,
                          char **out_report_json);

/* Human-readable run summary, one line per stage. */
wz_status wz_run_summary(const wz_run *run, char **out_text);

uint64_t wz_run_stage_count(const wz_run *run);
int wz_run_all_pass(const wz_run *run);

void wz_run_free(wz_run *run);

/* JSON array of the enumeration points at indices [start, start + count). */
wz_status wz_enumerate(uint64_t start, uint64_t count, char **out_json);

void wz_string_free(char *str);

#ifdef __cplusplus
}
#endif

#endif /* WETZEL_H */
