#ifndef SNO_SNO_H
#define SNO_SNO_H

/* C interface to libsno. Handles are opaque; every fallible call returns a
 * sno_status and leaves a JSON error object in the context on failure.
 * Strings returned through char** belong to the caller and are released with
 * sno_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(SNO_BUILDING_LIBRARY)
#define SNO_API __attribute__((visibility("default")))
#else
#define SNO_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sno_status {
  SNO_OK = 0,
  SNO_ERR_INPUT = 2,   /* malformed or inadmissible input */
  SNO_ERR_BACKEND = 3, /* numeric backend gave up, e.g. RankAmbiguous */
  SNO_ERR_INTERNAL = 4
} sno_status;

typedef enum sno_verdict {
  SNO_EQUAL = 0,
  SNO_STRICT_LESS = 1,
  SNO_WEAK_LESS = 2,
  SNO_INCOMPARABLE = 3
} sno_verdict;

typedef struct sno_context sno_context;
typedef struct sno_repr sno_repr;
typedef struct sno_function sno_function;

SNO_API const char* sno_version(void);

/* Exact backend and the default seed. */
SNO_API sno_context* sno_context_new(void);
SNO_API void sno_context_free(sno_context* ctx);
/* "exact" or "float"; epsilon is used by the float backend (<= 0 keeps the
 * default 1e-9). */
SNO_API sno_status sno_context_set_backend(sno_context* ctx, const char* name, double epsilon);
SNO_API void sno_context_set_seed(sno_context* ctx, uint64_t seed);
/* JSON error object of the last failed call, or "" after a success. Owned by
 * the context. */
SNO_API const char* sno_last_error(const sno_context* ctx);
SNO_API void sno_string_free(char* s);

/* A Jordan spec {"blocks":[...]} or a matrix {"rows":[...]}. */
SNO_API sno_status sno_repr_parse(sno_context* ctx, const char* json, sno_repr** out);
SNO_API sno_status sno_repr_to_json(sno_context* ctx, const sno_repr* r, char** out);
SNO_API size_t sno_repr_dimension(const sno_repr* r);
SNO_API void sno_repr_free(sno_repr* r);
/* Is x below y? */
SNO_API sno_status sno_compare(sno_context* ctx, const sno_repr* x, const sno_repr* y,
                               sno_verdict* out);

SNO_API sno_status sno_function_parse(sno_context* ctx, const char* json, sno_function** out);
SNO_API void sno_function_free(sno_function* f);
/* Representation of f(X) from that of X. */
SNO_API sno_status sno_fmap(sno_context* ctx, const sno_function* f, const sno_repr* x,
                            sno_repr** out);

/* Runs a named analysis (compare, repr, fmap, gdod, majorize, schur,
 * convexity, monotone) on a JSON request and returns the JSON report. */
SNO_API sno_status sno_run(sno_context* ctx, const char* command, const char* request_json,
                           char** report_json);

#ifdef __cplusplus
}
#endif

#endif
