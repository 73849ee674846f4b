/* C interface to the LBP library. All strings are UTF-8 and NUL-terminated.
 * Strings returned through char** are owned by the caller and released with
 * lbp_string_free; reports are released with lbp_report_free. Handles are
 * not thread-safe, but distinct handles may be used concurrently. */
#ifndef LBP_LBP_H
#define LBP_LBP_H

#include <stddef.h>

#if defined(_WIN32)
#define LBP_API __declspec(dllexport)
#else
#define LBP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lbp_status {
  LBP_OK = 0,
  LBP_VERIFY_FAILED = 1, /* a check in the report failed */
  LBP_ERR_USAGE = 2,     /* malformed arguments, unknown names, missing fixtures */
  LBP_ERR_MATH = 3,      /* inadmissible parameters: zero b or c, inapplicable route */
  LBP_ERR_INTERNAL = 4
} lbp_status;

typedef struct lbp_context lbp_context;
typedef struct lbp_report lbp_report;

LBP_API const char* lbp_version(void);

LBP_API lbp_context* lbp_context_new(void);
LBP_API void lbp_context_free(lbp_context* ctx);

/* Message of the most recent failing call on ctx, or "" when none. */
LBP_API const char* lbp_last_error(const lbp_context* ctx);

/* Truncation order N; the default is 12. */
LBP_API lbp_status lbp_set_order(lbp_context* ctx, long order);

/* Keys: b, c (rational "3/2", "sym", or periodic list "1,2"), format (csv |
 * json), route, shape (s | j | t), of (moment | coeff), ortho (Q | Q_tilde |
 * Q_hat), fixtures (directory of OEIS fixture files). */
LBP_API lbp_status lbp_set_param(lbp_context* ctx, const char* key, const char* value);

/* kind: lbp-coeffs, moments, production, hankel, toeplitz, cfrac-expand, ortho-array. */
LBP_API lbp_status lbp_generate(lbp_context* ctx, const char* kind, char** out);
LBP_API void lbp_string_free(char* s);

/* On LBP_OK or LBP_VERIFY_FAILED *out holds the report. */
LBP_API lbp_status lbp_verify(lbp_context* ctx, const char* scenario, lbp_report** out);

/* generator may be NULL to use the one registered for sequence_id. */
LBP_API lbp_status lbp_oeis_check(lbp_context* ctx, const char* sequence_id, const char* generator, lbp_report** out);

LBP_API int lbp_report_passed(const lbp_report* r);
LBP_API const char* lbp_report_id(const lbp_report* r);
LBP_API size_t lbp_report_check_count(const lbp_report* r);
LBP_API const char* lbp_report_check_name(const lbp_report* r, size_t i);
LBP_API int lbp_report_check_passed(const lbp_report* r, size_t i);
/* -1 when the check passed or has no index. */
LBP_API long lbp_report_check_first_mismatch(const lbp_report* r, size_t i);
LBP_API const char* lbp_report_check_detail(const lbp_report* r, size_t i);
/* format: csv | json; NULL means csv. */
LBP_API lbp_status lbp_report_render(const lbp_report* r, const char* format, char** out);
LBP_API void lbp_report_free(lbp_report* r);

#ifdef __cplusplus
}
#endif

#endif /* LBP_LBP_H */
