#ifndef SRPM_H
#define SRPM_H

#include <stddef.h>

#if defined(SRPM_BUILDING_LIBRARY)
#define SRPM_API __attribute__((visibility("default")))
#else
#define SRPM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum srpm_status {
    SRPM_OK = 0,
    SRPM_INVALID_ARGUMENT = 1,
    SRPM_DOMAIN = 2,
    SRPM_INSUFFICIENT_ORDER = 3,
    SRPM_NOT_CONVERGED = 4,
    SRPM_IO = 5,
    SRPM_UNKNOWN_SUITE = 6,
    SRPM_INTERNAL = 7
} srpm_status;

/* Opaque run configuration: precision, truncation overrides, stencil, sample points. */
typedef struct srpm_context srpm_context;

SRPM_API const char* srpm_version(void);
SRPM_API const char* srpm_status_name(srpm_status status);
/* Message of the last failing call on this thread ("" when none). */
SRPM_API const char* srpm_last_error(void);
/* For SRPM_INSUFFICIENT_ORDER: the smallest sufficient order, else 0. */
SRPM_API size_t srpm_last_required_order(void);

SRPM_API srpm_status srpm_context_new(srpm_context** out);
SRPM_API void srpm_context_free(srpm_context* ctx);

SRPM_API srpm_status srpm_context_set_precision(srpm_context* ctx, long bits);
SRPM_API srpm_status srpm_context_set_guard_bits(srpm_context* ctx, long bits);
/* 0 selects the order/cutoff automatically from a tail bound. */
SRPM_API srpm_status srpm_context_set_series_order(srpm_context* ctx, size_t order);
SRPM_API srpm_status srpm_context_set_fourier_cutoff(srpm_context* ctx, size_t cutoff);
SRPM_API srpm_status srpm_context_set_quadrature_nodes(srpm_context* ctx, size_t nodes);
/* Relative stencil step h / v; 0 selects 2^(-prec/4). */
SRPM_API srpm_status srpm_context_set_stencil(srpm_context* ctx, double step, int order, int richardson_levels);
/* JSON array of [u, v] pairs or {"u":..,"v":..} objects; coordinates as numbers or decimal strings. */
SRPM_API srpm_status srpm_context_set_points_json(srpm_context* ctx, const char* json);
SRPM_API srpm_status srpm_context_set_points_file(srpm_context* ctx, const char* path);
SRPM_API srpm_status srpm_context_set_slow(srpm_context* ctx, int enabled);

/* Runs a suite. *report receives a JSON report (free with srpm_string_free);
   *all_passed is 1 iff no check failed. */
SRPM_API srpm_status srpm_run_suite(const srpm_context* ctx, const char* suite, char** report, int* all_passed);
/* Same, CSV summary (one row per check). */
SRPM_API srpm_status srpm_run_suite_csv(const srpm_context* ctx, const char* suite, char** report, int* all_passed);
/* Runs a check at the context precision and at twice it; *passed is 1 iff the
   observables moved by less than the check tolerance. */
SRPM_API srpm_status srpm_precision_stability(const srpm_context* ctx, const char* check_id, char** report, int* passed);
/* Newline-separated list of suite names / check ids of a suite. */
SRPM_API srpm_status srpm_list_checks(const char* suite, char** out);

/* kind: "s_k", "g_k", "srp3", "twisted"; format: "csv" or "json". */
SRPM_API srpm_status srpm_series_table(const char* kind, long param, size_t order, const char* format, char** out);
SRPM_API srpm_status srpm_write_table(const char* kind, long param, size_t order, const char* format, const char* path);

/* Evaluates a named function at tau = u + iv (decimal strings) with param k where used:
   "g1_hat", "gk_hat", "e2_hat", "shadow_g1", "g2_hat_explicit", "kronecker", "eisenstein" (s = param),
   "eta", "eichler_sesqui", "raising_closed". Digits of the output are set by the context precision. */
SRPM_API srpm_status srpm_eval(const srpm_context* ctx, const char* function, long param, const char* u, const char* v,
                               char** re, char** im);

SRPM_API void srpm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
