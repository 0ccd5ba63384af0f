/* C interface to the slope-invariant solver for second symmetric products.
 *
 * All functions are thread-safe; the error message channel is thread-local.
 * Strings returned as char* are heap-allocated and must be released with
 * symtau_string_free.  Handles are opaque and must be released with their
 * matching *_free function.
 */
#ifndef SYMTAU_H
#define SYMTAU_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(SYMTAU_BUILD)
#define SYMTAU_API __attribute__((visibility("default")))
#else
#define SYMTAU_API
#endif

typedef enum symtau_status {
  SYMTAU_OK = 0,
  SYMTAU_ERR_ARGUMENT = 1,     /* bad handle, range, or enum string */
  SYMTAU_ERR_PARSE = 2,        /* malformed specification document */
  SYMTAU_ERR_VALIDATION = 3,   /* structurally impossible specification */
  SYMTAU_ERR_INCONSISTENT = 4, /* rules force an empty interval; result still returned */
  SYMTAU_ERR_NOMEM = 5,
  SYMTAU_ERR_INTERNAL = 6
} symtau_status;

typedef struct symtau_spec symtau_spec;
typedef struct symtau_result symtau_result;
typedef struct symtau_decomposition symtau_decomposition;

SYMTAU_API const char* symtau_version(void);

/* Message for the most recent failure on this thread; empty when none. */
SYMTAU_API const char* symtau_last_error(void);

SYMTAU_API void symtau_string_free(char* text);

/* --- specification handles ---------------------------------------------- */

SYMTAU_API symtau_spec* symtau_spec_new(long genus);
SYMTAU_API void symtau_spec_free(symtau_spec* spec);

/* gamma_irreducible: "yes", "no", "unknown", or NULL for unknown. */
SYMTAU_API symtau_status symtau_spec_add_pencil(symtau_spec* spec, long degree,
                                                int base_point_free,
                                                const char* gamma_irreducible);

/* target_has_g12: negative = derive from the target genus, 0 = no, positive = yes. */
SYMTAU_API symtau_status symtau_spec_add_cover(symtau_spec* spec, long degree,
                                               long target_genus, int target_has_g12);

/* flag: "hyperelliptic" or "bielliptic"; value: "yes", "no", "unknown". */
SYMTAU_API symtau_status symtau_spec_set_flag(symtau_spec* spec, const char* flag,
                                              const char* value);

/* Declares a*x - b*(delta/2) effective (a, b > 0), forcing tau >= b*g/a. */
SYMTAU_API symtau_status symtau_spec_add_effective_class(symtau_spec* spec, long a, long b);

/* Parses the JSON document format; NULL on error (see symtau_last_error). */
SYMTAU_API symtau_spec* symtau_spec_parse_json(const char* text);

/* Serializes back to the document format. */
SYMTAU_API char* symtau_spec_to_json(const symtau_spec* spec);

/* --- solving -------------------------------------------------------------- */

/* SYMTAU_OK or SYMTAU_ERR_INCONSISTENT populate *out (free it either way);
 * other statuses leave *out NULL. */
SYMTAU_API symtau_status symtau_solve(const symtau_spec* spec, symtau_result** out);
SYMTAU_API void symtau_result_free(symtau_result* result);

SYMTAU_API int symtau_result_exact(const symtau_result* result);
SYMTAU_API int symtau_result_consistent(const symtau_result* result);

/* Exact value in "p/q" or "p/q + (r/s)*sqrt(g)" notation; NULL unless exact. */
SYMTAU_API char* symtau_result_value(const symtau_result* result);
SYMTAU_API char* symtau_result_lower(const symtau_result* result);
SYMTAU_API char* symtau_result_upper(const symtau_result* result);

SYMTAU_API size_t symtau_result_trace_size(const symtau_result* result);
SYMTAU_API char* symtau_result_trace_line(const symtau_result* result, size_t index);

/* Full plain-text report; with_trace adds the numbered derivation. */
SYMTAU_API char* symtau_result_render(const symtau_result* result, int with_trace);

/* --- pencil-curve decomposition ------------------------------------------ */

/* Enumerates the component scenarios of the degree-d pencil curve.  The
 * specification must declare (or imply) a pencil of that degree. */
SYMTAU_API symtau_status symtau_decompose(const symtau_spec* spec, long pencil_degree,
                                          symtau_decomposition** out);
SYMTAU_API void symtau_decomposition_free(symtau_decomposition* dec);

SYMTAU_API size_t symtau_decomposition_scenarios(const symtau_decomposition* dec);
SYMTAU_API size_t symtau_decomposition_rejections(const symtau_decomposition* dec);
SYMTAU_API char* symtau_decomposition_render(const symtau_decomposition* dec, int verbose);

/* --- intersection tables --------------------------------------------------- */

/* Numbers (x, theta, delta) of the curve traced in C^(2) by an n-sheeted
 * cover with target genus h, written to out[0..2]. */
SYMTAU_API symtau_status symtau_cover_cycle(long degree, long target_genus, long genus,
                                            long long out[3]);

/* Numbers of the cycle B(H) in the d-th symmetric product, 2 <= d <= degree. */
SYMTAU_API symtau_status symtau_b_cycle(long degree, long target_genus, long genus,
                                        long symmetric_index, long long out[3]);

/* Table for the cover; includes the B(H) row when symmetric_index >= 2,
 * pass 0 to omit it.  NULL on error. */
SYMTAU_API char* symtau_table_render(long degree, long target_genus, long genus,
                                     long symmetric_index);

#ifdef __cplusplus
}
#endif

#endif /* SYMTAU_H */
