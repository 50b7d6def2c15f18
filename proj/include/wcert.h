/*
 * wcert - public C interface.
 *
 * The engine lives in a C++ core; this header is the stable boundary for
 * linking it as a shared library.  All entry points return a status code,
 * never throw, and report detail through wcert_last_error() (thread local).
 * Strings returned through char** are heap allocations owned by the caller;
 * release them with wcert_string_free().  Expression handles are opaque and
 * immutable once created, so one handle may be used from several threads.
 */

#ifndef WCERT_H
#define WCERT_H

#include <stddef.h>

#if defined(_WIN32)
#define WCERT_API __declspec(dllexport)
#else
#define WCERT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct wcert_expr wcert_expr;

typedef enum wcert_status {
  WCERT_OK = 0,
  WCERT_ERR_SYNTAX = 1,
  WCERT_ERR_UNKNOWN_IDENTIFIER = 2,
  WCERT_ERR_DOMAIN = 3,
  WCERT_ERR_MIXED_DOMAIN = 4,
  WCERT_ERR_NOT_MONOTONE = 5,
  WCERT_ERR_OUT_OF_RANGE = 6,
  WCERT_ERR_CONVERGENCE = 7,
  WCERT_ERR_PRECONDITION = 8,
  WCERT_ERR_UNKNOWN_NAME = 9,
  WCERT_ERR_INVALID_ARGUMENT = 10,
  WCERT_ERR_INTERNAL = 11
} wcert_status;

/* Library version, e.g. "1.0.0". */
WCERT_API const char* wcert_version(void);

/* Message for the most recent failure on this thread ("" if none). */
WCERT_API const char* wcert_last_error(void);

WCERT_API void wcert_string_free(char* s);

/* ---- expressions ------------------------------------------------------- */

WCERT_API wcert_status wcert_parse(const char* text, wcert_expr** out_expr);
WCERT_API void wcert_expr_free(wcert_expr* expr);

/* Canonical text form (round-trips through wcert_parse). */
WCERT_API wcert_status wcert_expr_format(const wcert_expr* expr, char** out_text);

WCERT_API wcert_status wcert_eval(const wcert_expr* expr, double x, double* out_value);

/* Value, first and second derivative at x. */
WCERT_API wcert_status wcert_eval_jet(const wcert_expr* expr, double x, double* out_value,
                                      double* out_d1, double* out_d2);

/* Enclosure of f over [lo, hi]. */
WCERT_API wcert_status wcert_eval_range(const wcert_expr* expr, double lo, double hi,
                                        double* out_lo, double* out_hi);

/* ---- reports (JSON, schema version 1) ----------------------------------
 *
 * config_json may be NULL for defaults.  Recognized keys:
 *   domain_kind ("unit" | "ray"), delta, cap, max_depth, max_boxes,
 *   time_budget_s, cert_tolerance, report_tolerance, grid_n,
 *   trials, seed (fuzz runs only).
 */

WCERT_API wcert_status wcert_classify(const wcert_expr* expr, const char* config_json,
                                      char** out_json);

WCERT_API wcert_status wcert_constants(char** out_json);

/* filter_csv: comma-separated entry ids, or NULL for the full catalog.
 * out_mismatches receives the number of entries that missed expectations. */
WCERT_API wcert_status wcert_catalog_run(const char* filter_csv, const char* config_json,
                                         char** out_json, int* out_mismatches);

/* Point check of a named inequality.  Names and their arguments:
 *   classical a1 a2 [...]   product x1 x2 [...]    logprod x1 x2 [...]
 *   sin x y                 gamma a x y            gamma-uv a u v
 *   sandwich x y            (sandwich reads the function from expr)
 * expr is only consulted for "sandwich" and may be NULL otherwise. */
WCERT_API wcert_status wcert_ineq_check(const char* name, const double* args, size_t nargs,
                                        const wcert_expr* expr, const char* config_json,
                                        char** out_json);

/* Reproducible fuzz run over a named inequality family (same names as above
 * except "sin"); trials/seed/domain come from config_json. */
WCERT_API wcert_status wcert_ineq_fuzz(const char* name, const double* args, size_t nargs,
                                       const wcert_expr* expr, const char* config_json,
                                       char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* WCERT_H */
