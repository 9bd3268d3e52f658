/* C interface to the qtkostka library. Every call that produces text returns
 * a heap string through `out`; release it with qtk_string_free. On failure the
 * message is available from qtk_last_error until the next call on the same
 * context. */
#ifndef QTKOSTKA_H
#define QTKOSTKA_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  ifdef QTK_BUILDING_LIBRARY
#    define QTK_API __declspec(dllexport)
#  else
#    define QTK_API __declspec(dllimport)
#  endif
#else
#  define QTK_API __attribute__((visibility("default")))
#endif

typedef struct qtk_context qtk_context;

typedef enum qtk_status {
  QTK_OK = 0,
  QTK_DOMAIN_ERROR = 1,     /* bad input: not a partition, size mismatch, ... */
  QTK_INTERNAL_ERROR = 2,   /* an internal consistency check failed */
  QTK_INVALID_ARGUMENT = 3  /* null pointer, unknown enum value */
} qtk_status;

typedef enum qtk_format {
  QTK_FORMAT_JSON = 0,
  QTK_FORMAT_LATEX = 1,
  QTK_FORMAT_PRETTY = 2
} qtk_format;

QTK_API const char* qtk_version(void);

QTK_API qtk_status qtk_context_new(qtk_context** out);
QTK_API void qtk_context_free(qtk_context* ctx);
QTK_API const char* qtk_last_error(const qtk_context* ctx);
QTK_API void qtk_string_free(char* s);

/* Worker threads for matrix builds and scans; 0 picks the hardware count. */
QTK_API qtk_status qtk_set_jobs(qtk_context* ctx, int jobs);
/* Directory for cached matrices; NULL or "" disables the disk cache. */
QTK_API qtk_status qtk_set_cache_dir(qtk_context* ctx, const char* dir);

/* Partitions are comma-separated parts, e.g. "5,3,3"; "" is the empty partition. */
QTK_API qtk_status qtk_kcoeff(qtk_context* ctx, const char* lambda, const char* mu, qtk_format format, char** out);
/* which: "k", "k1", "k1inv", "k2" or "k2inv". */
QTK_API qtk_status qtk_matrix(qtk_context* ctx, int n, const char* which, qtk_format format, char** out);
QTK_API qtk_status qtk_reduce(qtk_context* ctx, const char* lambda, const char* mu, qtk_format format, char** out);
QTK_API qtk_status qtk_haglund(qtk_context* ctx, const char* lambda, const char* mu, int k, qtk_format format,
                               char** out);
/* violations receives the number of quotients that are not nonnegative polynomials. */
QTK_API qtk_status qtk_scan(qtk_context* ctx, int max_n, int max_k, qtk_format format, char** out,
                            long long* violations);
/* all_passed receives 1 when every degree passes. */
QTK_API qtk_status qtk_oracle_verify(qtk_context* ctx, int max_n, qtk_format format, char** out, int* all_passed);
/* m, n > 0 adds the comparison of f_mu with f of the complement in (m^{n+1}). */
QTK_API qtk_status qtk_fstat(qtk_context* ctx, const char* mu, int m, int n, qtk_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
