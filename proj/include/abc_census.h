/*
 * abc_census.h
 *
 * C interface to the abc census library. All state lives behind an opaque
 * abc_context; every entry point returns an abc_status and writes results
 * through out-parameters or caller-supplied sinks. On failure a description
 * is available from abc_last_error() on the calling thread.
 */
#ifndef ABC_CENSUS_H_
#define ABC_CENSUS_H_

#include <stddef.h>
#include <stdint.h>

#ifndef ABC_API
#  if defined(_WIN32)
#    define ABC_API __declspec(dllexport)
#  else
#    define ABC_API __attribute__((visibility("default")))
#  endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum abc_status {
    ABC_OK = 0,
    ABC_ERR_INVALID_INPUT = 1,
    ABC_ERR_LIMIT_EXCEEDED = 2,
    ABC_ERR_DEGENERATE_MODULUS = 3,
    ABC_ERR_EXPORT_CAP_EXCEEDED = 4,
    ABC_ERR_OVERFLOW_OF_LIMIT = 5,
    ABC_ERR_CANCELLED = 6,
    ABC_ERR_INTERNAL = 7
} abc_status;

typedef struct abc_context abc_context;

typedef struct abc_epsilon {
    uint64_t num;
    uint64_t den;
} abc_epsilon;

#define ABC_MAX_FACTORS 16

typedef struct abc_prime_power {
    uint64_t prime;
    uint32_t exponent;
} abc_prime_power;

typedef struct abc_arith_info {
    uint64_t value;
    uint64_t radical;
    uint64_t phi;
    uint64_t q;
    size_t factor_count;
    abc_prime_power factors[ABC_MAX_FACTORS];
} abc_arith_info;

typedef struct abc_census_result {
    uint64_t c;
    uint32_t n;
    abc_epsilon eps;
    uint64_t count;
    uint64_t total;
    double ratio;
    double log_gm;
    int upper_ok;
    uint64_t exact_evaluations;
    double elapsed_seconds;
} abc_census_result;

typedef struct abc_decomposition {
    uint64_t a;
    uint64_t b;
    uint64_t rad_a;
    uint64_t rad_b;
    uint64_t rad_ab;
    int satisfies;
} abc_decomposition;

typedef struct abc_generalized_solution {
    uint64_t a;
    uint64_t b;
    int satisfies;
} abc_generalized_solution;

typedef struct abc_bound_check {
    uint64_t c;
    uint32_t n;
    abc_epsilon eps;
    double log_gm;
    double log_lower_no_kappa;
    double log_upper;
    int upper_ok;
    double kappa_ratio;
} abc_bound_check;

typedef struct abc_kappa_estimate {
    abc_epsilon eps;
    uint64_t c_min;
    uint64_t c_max;
    uint32_t n_min;
    uint32_t n_max;
    double kappa_hat;
    uint64_t argmin_c;
    uint32_t argmin_n;
} abc_kappa_estimate;

typedef struct abc_convergence_row {
    uint32_t n;
    uint64_t count;
    uint64_t total;
    double ratio;
    double lower_bound_ratio;
} abc_convergence_row;

typedef struct abc_c_scan_row {
    uint64_t c;
    uint64_t count;
    uint64_t total;
    double ratio;
} abc_c_scan_row;

/* Sinks return 0 to continue; any other value stops the stream and the call
 * returns ABC_ERR_CANCELLED. */
typedef int (*abc_decomposition_sink)(const abc_decomposition* record, void* user);
typedef int (*abc_generalized_sink)(const abc_generalized_solution* solution, void* user);
typedef int (*abc_convergence_sink)(const abc_convergence_row* row, void* user);
typedef int (*abc_c_scan_sink)(const abc_c_scan_row* row, void* user);

ABC_API const char* abc_version(void);
ABC_API const char* abc_status_string(abc_status status);
/* Message for the most recent failure on this thread; "" if none. */
ABC_API const char* abc_last_error(void);

ABC_API abc_status abc_context_create(abc_context** out);
ABC_API void abc_context_destroy(abc_context* ctx);

/* Configuration. Changing any setting clears the context's result cache. */
ABC_API abc_status abc_context_set_enumeration_limit(abc_context* ctx, uint64_t limit);
ABC_API abc_status abc_context_set_segment_size(abc_context* ctx, uint64_t segment_size);
/* 0 selects the hardware concurrency. */
ABC_API abc_status abc_context_set_threads(abc_context* ctx, unsigned threads);
ABC_API abc_status abc_context_set_export_cap(abc_context* ctx, uint64_t cap);
ABC_API abc_status abc_context_set_exact_only(abc_context* ctx, int exact_only);
ABC_API uint64_t abc_context_enumeration_limit(const abc_context* ctx);
ABC_API uint64_t abc_context_segment_size(const abc_context* ctx);

/* Parses "num/den" into lowest terms with 0 < num/den < 1. */
ABC_API abc_status abc_epsilon_parse(const char* text, abc_epsilon* out);

ABC_API abc_status abc_arith(const abc_context* ctx, uint64_t m, abc_arith_info* out);

ABC_API abc_status abc_census(abc_context* ctx, uint64_t c, uint32_t n, abc_epsilon eps, abc_census_result* out);

ABC_API abc_status abc_decompositions(abc_context* ctx, uint64_t c, uint32_t n, abc_epsilon eps,
                                      abc_decomposition_sink sink, void* user);

/* Experimental: solutions of c^r = a^p + b^q. */
ABC_API abc_status abc_generalized(abc_context* ctx, uint64_t c, uint32_t r, uint32_t p, uint32_t q,
                                   abc_epsilon eps, abc_generalized_sink sink, void* user);

ABC_API abc_status abc_check_bounds(abc_context* ctx, uint64_t c, uint32_t n, abc_epsilon eps,
                                    abc_bound_check* out);

/* kappa_hat over {(c, n) : c_min <= c <= c_max} at fixed n. */
ABC_API abc_status abc_estimate_kappa(abc_context* ctx, abc_epsilon eps, uint64_t c_min, uint64_t c_max, uint32_t n,
                                      abc_kappa_estimate* out);
/* kappa_hat over {(c, n) : 1 <= n <= n_max} at fixed c. */
ABC_API abc_status abc_estimate_kappa_over_n(abc_context* ctx, abc_epsilon eps, uint64_t c, uint32_t n_max,
                                             abc_kappa_estimate* out);

/* Rows n = 1..n_max. A null kappa selects kappa_hat over the same family
 * {(c, n) : 1 <= n <= n_max}; the value used is written to kappa_used when
 * that is non-null. */
ABC_API abc_status abc_convergence_scan(abc_context* ctx, uint64_t c, abc_epsilon eps, uint32_t n_max,
                                        const double* kappa,
                                        double* kappa_used, abc_convergence_sink sink, void* user);

ABC_API abc_status abc_scan_over_c(abc_context* ctx, abc_epsilon eps, uint64_t c_min, uint64_t c_max,
                                   abc_c_scan_sink sink, void* user);

#ifdef __cplusplus
}
#endif

#endif /* ABC_CENSUS_H_ */
