/* copula_lab C API.
 *
 * All functions return a cl_status; 0 is success. On failure, cl_last_error()
 * returns a message for the calling thread. Objects are opaque handles
 * released with the matching cl_*_free function (NULL is accepted).
 * Strings returned through handles stay valid until the handle is freed.
 */
#ifndef COPULA_LAB_H
#define COPULA_LAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(COPULA_LAB_BUILDING)
#define CL_API __declspec(dllexport)
#else
#define CL_API __declspec(dllimport)
#endif
#else
#define CL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cl_status {
  CL_OK = 0,
  CL_ERR_DOMAIN = 1,
  CL_ERR_PARAMETER = 2,
  CL_ERR_COUNT = 3,
  CL_ERR_SHAPE = 4,
  CL_ERR_UNSUPPORTED = 5,
  CL_ERR_ORDERING = 6,
  CL_ERR_COMPARISON = 7,
  CL_ERR_DEGENERATE_DATA = 8,
  CL_ERR_GRID = 9,
  CL_ERR_NUMERIC = 10,
  CL_ERR_CONFIG = 11,
  CL_ERR_IO = 12,
  CL_ERR_PARSE = 13,
  CL_ERR_NULL_ARGUMENT = 100,
  CL_ERR_INTERNAL = 101
} cl_status;

typedef struct cl_model cl_model;
typedef struct cl_matrix cl_matrix;
typedef struct cl_reports cl_reports;
typedef struct cl_curve cl_curve;
typedef struct cl_sweep cl_sweep;
typedef struct cl_ranking cl_ranking;

CL_API const char* cl_version(void);
CL_API const char* cl_last_error(void);
CL_API const char* cl_status_name(cl_status status);

/* ---- families ---------------------------------------------------------- */

typedef struct cl_family_info {
  const char* name;
  const char* theta_domain;
  int needs_delta;
  int needs_nu;
  int multivariate;
  int archimedean;
  double grid_lo, grid_hi, grid_step; /* default theta grid */
} cl_family_info;

CL_API size_t cl_family_count(void);
CL_API cl_status cl_family_at(size_t index, cl_family_info* out);

/* Expands "a,b,c" or "lo:hi:step" into at most `cap` values; *count gets the
 * full length. */
CL_API cl_status cl_parse_grid(const char* spec, double* values, size_t cap, size_t* count);

/* ---- models ------------------------------------------------------------ */

/* delta / nu may be NULL when the family does not take them. */
CL_API cl_status cl_model_create(const char* family, double theta, const double* delta, const double* nu,
                                 int dim, cl_model** out);
CL_API void cl_model_free(cl_model* model);
CL_API const char* cl_model_describe(const cl_model* model);
CL_API int cl_model_dim(const cl_model* model);

CL_API cl_status cl_cdf(const cl_model* model, const double* point, size_t n, double* out);
/* *clamped (may be NULL) is set to 1 when a coordinate was clipped. */
CL_API cl_status cl_log_pdf(const cl_model* model, const double* point, size_t n, double* out, int* clamped);
CL_API cl_status cl_conditional_cdf(const cl_model* model, double u, double v, double* out);

/* Archimedean generator psi and its k-th derivative (k = 0 gives psi). */
CL_API cl_status cl_generator_derivative(const cl_model* model, int k, double t, double* out);
CL_API cl_status cl_generator_inverse(const cl_model* model, double u, double* out);
/* psi_{theta1}^{-1}(psi_{theta2}(t)) for the mv_ families. */
CL_API cl_status cl_generator_composition(const char* family, double theta1, double theta2, double t,
                                          double* out);

/* ---- matrices and sampling -------------------------------------------- */

CL_API cl_status cl_matrix_create(size_t rows, size_t cols, const double* row_major, cl_matrix** out);
CL_API void cl_matrix_free(cl_matrix* m);
CL_API size_t cl_matrix_rows(const cl_matrix* m);
CL_API size_t cl_matrix_cols(const cl_matrix* m);
CL_API const double* cl_matrix_data(const cl_matrix* m); /* row-major */

CL_API cl_status cl_sample(const cl_model* model, int64_t count, uint64_t seed, cl_matrix** out);
CL_API cl_status cl_sample_frailty(const cl_model* model, int64_t count, uint64_t seed, cl_matrix** out);
CL_API cl_status cl_pseudo_observations(const cl_matrix* data, cl_matrix** out);
/* CSV text: header u1,...,ud then one row per point (string contract at the end). */
CL_API cl_status cl_matrix_csv(const cl_matrix* m, char* buf, size_t cap, size_t* needed);

/* ---- estimation -------------------------------------------------------- */

CL_API cl_status cl_empirical_entropy(const cl_model* model, const cl_matrix* sample, double* value,
                                      double* std_error);
CL_API cl_status cl_mutual_information(const cl_model* model, const cl_matrix* sample, double* value,
                                       double* std_error);
CL_API cl_status cl_kl_divergence(const cl_model* p, const cl_model* q, const cl_matrix* sample_from_p,
                                  double* value, double* std_error);
CL_API cl_status cl_entropy_quadrature(const cl_model* model, double* out);
CL_API cl_status cl_spearman_analytic(const cl_model* model, double* out);
CL_API cl_status cl_spearman_sample(const cl_matrix* sample, size_t col_i, size_t col_j, double* out);
CL_API cl_status cl_kendall_sample(const cl_matrix* sample, size_t col_i, size_t col_j, double* out);

/* ---- verification ------------------------------------------------------ */

typedef struct cl_grid {
  int resolution;     /* default 50 */
  double lo, hi;      /* default 0.01, 0.99 */
  size_t pair_budget; /* default 200000 */
  uint64_t seed;
} cl_grid;

CL_API void cl_grid_default(cl_grid* grid);

typedef struct cl_property_report {
  const char* condition; /* "a", "b", ... for battery runs, "" for single checks */
  const char* property;
  const char* model;
  const char* params;
  int passed;
  double worst_violation;
  double tolerance;
  const double* worst_location;
  size_t location_size;
  size_t pairs_tested;
  const char* detail;
} cl_property_report;

CL_API void cl_reports_free(cl_reports* reports);
CL_API size_t cl_reports_size(const cl_reports* reports);
CL_API cl_status cl_reports_at(const cl_reports* reports, size_t index, cl_property_report* out);
CL_API int cl_reports_all_passed(const cl_reports* reports);
CL_API cl_status cl_reports_csv(const cl_reports* reports, char* buf, size_t cap, size_t* needed);

/* tol < 0 selects the default tolerance; grid may be NULL for the default grid. */
CL_API cl_status cl_check_tp2(const cl_model* model, const cl_grid* grid, double tol, int negative,
                              cl_reports** out);
CL_API cl_status cl_check_supermodular(const cl_model* model, const cl_grid* grid, double tol, int negative,
                                       cl_reports** out);
CL_API cl_status cl_check_pqd(const cl_model* lo, const cl_model* hi, const cl_grid* grid, double tol,
                              cl_reports** out);
CL_API cl_status cl_check_completely_monotone(const cl_model* model, int order, double tol, cl_reports** out);
CL_API cl_status cl_check_lstar(const char* family, double theta1, double theta2, int order, double tol,
                                cl_reports** out);
CL_API cl_status cl_check_kl_chain(const cl_model* base, double theta1, double theta2, int64_t samples,
                                   uint64_t seed, cl_reports** out);
CL_API cl_status cl_check_mixture_identity(const cl_model* model, const cl_grid* grid, double tol,
                                           int64_t samples, uint64_t seed, cl_reports** out);

typedef enum cl_verify_mode {
  CL_VERIFY_AUTO = 0,
  CL_VERIFY_TP2 = 1,
  CL_VERIFY_RR2 = 2,
  CL_VERIFY_CM = 3,
  CL_VERIFY_LSTAR = 4
} cl_verify_mode;

typedef struct cl_verify_options {
  cl_verify_mode mode;
  cl_grid grid;
  double tol; /* < 0: per-check defaults */
  int order;  /* derivative order K, default 6 */
} cl_verify_options;

CL_API void cl_verify_options_default(cl_verify_options* options);

/* Theorem-condition battery over a theta grid (given order). */
CL_API cl_status cl_verify(const char* family, const double* thetas, size_t n, const double* delta,
                           const double* nu, int dim, const cl_verify_options* options, cl_reports** out);

/* ---- experiments ------------------------------------------------------- */

typedef enum cl_seed_mode { CL_SEED_INDEPENDENT = 0, CL_SEED_COMMON = 1 } cl_seed_mode;

typedef struct cl_experiment {
  const char* family;
  const double* thetas;
  size_t n_thetas;
  const double* delta; /* NULL when unused */
  const double* nu;    /* NULL when unused */
  int dim;
  int64_t samples;
  int reps;
  uint64_t seed;
  cl_seed_mode seed_mode;
  int threads; /* 0: COPULA_LAB_THREADS or machine parallelism */
} cl_experiment;

CL_API void cl_experiment_default(cl_experiment* config);

typedef struct cl_curve_point {
  double theta;
  double mean_neg_entropy;
  double p025;
  double p975;
} cl_curve_point;

CL_API cl_status cl_entropy_curve(const cl_experiment* config, cl_curve** out);
CL_API void cl_curve_free(cl_curve* curve);
CL_API size_t cl_curve_size(const cl_curve* curve);
CL_API cl_status cl_curve_at(const cl_curve* curve, size_t index, cl_curve_point* out);
/* fraction_defined is 0 for single-point grids, where the fraction reads 1. */
CL_API cl_status cl_curve_summary(const cl_curve* curve, double* monotone_fraction, int* fraction_defined,
                                  double* rank_correlation);
CL_API cl_status cl_curve_csv(const cl_curve* curve, char* buf, size_t cap, size_t* needed);

CL_API cl_status cl_size_sweep(const cl_experiment* config, const int64_t* sizes, size_t n, cl_sweep** out);
CL_API void cl_sweep_free(cl_sweep* sweep);
CL_API size_t cl_sweep_size(const cl_sweep* sweep);
CL_API cl_status cl_sweep_at(const cl_sweep* sweep, size_t index, int64_t* sample_size, double* mean_fraction);
CL_API cl_status cl_sweep_csv(const cl_sweep* sweep, char* buf, size_t cap, size_t* needed);

typedef struct cl_rank_options {
  size_t top_k;          /* 0: all pairs */
  const char* mi_family; /* NULL: no MI cross-check */
  int64_t mi_samples;
  uint64_t seed;
  int threads;
} cl_rank_options;

typedef struct cl_pair_rank {
  size_t col_i, col_j; /* 1-based */
  double abs_spearman;
  size_t rank;
  int has_mi;
  double mi_estimate;
  double fitted_theta;
} cl_pair_rank;

CL_API void cl_rank_options_default(cl_rank_options* options);
CL_API cl_status cl_rank_pairs_csv_file(const char* path, const cl_rank_options* options, cl_ranking** out);
CL_API cl_status cl_rank_pairs(const cl_matrix* data, const cl_rank_options* options, cl_ranking** out);
CL_API void cl_ranking_free(cl_ranking* ranking);
CL_API size_t cl_ranking_size(const cl_ranking* ranking);
CL_API cl_status cl_ranking_at(const cl_ranking* ranking, size_t index, cl_pair_rank* out);
CL_API cl_status cl_ranking_csv(const cl_ranking* ranking, char* buf, size_t cap, size_t* needed);

/* String outputs: *needed receives strlen + 1. When cap >= *needed the text
 * and a terminating NUL are copied into buf; otherwise nothing is copied and
 * CL_ERR_SHAPE is returned. buf may be NULL with cap 0 to query the size. */

#ifdef __cplusplus
}
#endif

#endif /* COPULA_LAB_H */
