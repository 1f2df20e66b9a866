#ifndef HYPERLINES_H
#define HYPERLINES_H

/* C interface to the hyperlines library. Every call returns an hl_status;
   on failure hl_last_error() describes it (per thread). Strings returned
   through out-parameters belong to the caller and go back via hl_string_free. */

#include <stdint.h>

#if defined(_WIN32)
#  ifdef HL_BUILDING_LIBRARY
#    define HL_API __declspec(dllexport)
#  else
#    define HL_API __declspec(dllimport)
#  endif
#else
#  define HL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hl_status {
  HL_OK = 0,
  HL_CHECK_FAILED = 1,   /* verify ran and some check failed; output is valid */
  HL_SCHEMA = 2,         /* malformed JSON, unknown command, suite or metric */
  HL_DOMAIN = 3,         /* input violates a precondition (degenerate pair, X = 0) */
  HL_FEATURE = 4,        /* not available at this n (g0 needs n = 2) */
  HL_DIMENSION = 5,
  HL_RANGE = 6,
  HL_NUMERIC = 7,
  HL_INVALID_ARGUMENT = 8, /* null handle or pointer */
  HL_INTERNAL = 9
} hl_status;

typedef struct hl_context hl_context;

HL_API const char* hl_version(void);
HL_API const char* hl_status_name(hl_status status);
/* Process exit code for a status: 0, 1, 2 (schema/usage) or 3 (everything else). */
HL_API int hl_exit_code(hl_status status);
/* Message of the last failing call on this thread; "" if none. */
HL_API const char* hl_last_error(void);

HL_API hl_status hl_context_create(hl_context** out);
HL_API void hl_context_destroy(hl_context* ctx);

/* n = 0 means "from the input". Defaults: seed 7, metric "g1", band 1e-7. */
HL_API hl_status hl_context_set_n(hl_context* ctx, int n);
HL_API hl_status hl_context_set_seed(hl_context* ctx, uint64_t seed);
/* "g1", "g0" or "combo:LAMBDA,MU". */
HL_API hl_status hl_context_set_metric(hl_context* ctx, const char* metric);
HL_API hl_status hl_context_set_band(hl_context* ctx, double band);
HL_API hl_status hl_context_set_parallel(hl_context* ctx, int parallel);

/* JSON in, JSON out. *out_json is set whenever the command produced output,
   which includes HL_CHECK_FAILED. */
HL_API hl_status hl_cmd_classify(hl_context* ctx, const char* curve_json, char** out_json);
HL_API hl_status hl_cmd_geodesic(hl_context* ctx, const char* input_json, char** out_json);
HL_API hl_status hl_cmd_convert(hl_context* ctx, const char* input_json, char** out_json);
/* suite may be NULL ("all"). */
HL_API hl_status hl_cmd_verify(hl_context* ctx, const char* suite, char** out_json);
/* Dispatch by name: "classify", "geodesic", "convert" or "verify". */
HL_API hl_status hl_run(hl_context* ctx, const char* command, const char* input_json, char** out_json);

HL_API void hl_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
