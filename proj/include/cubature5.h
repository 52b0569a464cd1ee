/* cubature5: fifth-degree cubature rules with near-minimal point counts for
 * symmetric product measures on the cube and for spherically symmetric
 * measures (Gaussian, unit ball, spherical shell, exp(-r) weight, or custom
 * moments), plus exactness verification against closed-form moments.
 *
 * All functions return CUB5_OK on success; on failure they return a status
 * code and leave a message readable through cub5_last_error() (thread-local,
 * valid until the next failing call on the same thread). Handles are opaque
 * and freed with the matching *_free function. Strings written to a char**
 * output are owned by the caller and freed with cub5_free().
 */
#ifndef CUBATURE5_H
#define CUBATURE5_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cub5_measure cub5_measure;
typedef struct cub5_rule cub5_rule;
typedef struct cub5_poly cub5_poly;

typedef enum cub5_status {
  CUB5_OK = 0,
  CUB5_ERR_INVALID_ARGUMENT = 1,
  CUB5_ERR_CONSTRUCTION = 2,
  CUB5_ERR_IO = 3,
  CUB5_ERR_PARSE = 4,
  CUB5_ERR_VERIFICATION = 5,
  CUB5_ERR_UNSUPPORTED = 6
} cub5_status;

const char* cub5_last_error(void);

/* Frees strings returned through char** outputs. */
void cub5_free(void* ptr);

/* ---- measures (dimension n >= 4) ---------------------------------------- */

/* Product measure on [-1,1]^n. alpha_len == 0: constant weight 1/2 per axis.
 * alpha_len == 1: Gegenbauer weight (1-x^2)^alpha on every axis.
 * alpha_len == n: one exponent per axis. Exponents must exceed -1. */
cub5_status cub5_measure_cube(int n, const double* alpha, int alpha_len, cub5_measure** out);
cub5_status cub5_measure_gaussian(int n, cub5_measure** out);
cub5_status cub5_measure_ball(int n, cub5_measure** out);
cub5_status cub5_measure_shell(int n, double inner_radius, cub5_measure** out);
cub5_status cub5_measure_exp_radial(int n, cub5_measure** out);
/* Normalized per-axis even moments (m0 = 1 implied); each array has length n. */
cub5_status cub5_measure_custom_product(int n, const double* m2, const double* m4,
                                        const double* m6, cub5_measure** out);
/* Defining values L(1), L(x1^2), L(x1^4), L(x1^2 x2^2) of a spherically
 * symmetric functional; L(x1^4) = 3 L(x1^2 x2^2) is required within 1e-9. */
cub5_status cub5_measure_custom_radial(int n, double mass, double x2, double x4, double x2x2,
                                       cub5_measure** out);
/* Rebuilds a measure from the region string stored in a rule file. */
cub5_status cub5_measure_from_region(const char* region, int n, cub5_measure** out);
void cub5_measure_free(cub5_measure* measure);

cub5_status cub5_measure_region(const cub5_measure* measure, char** out);
cub5_status cub5_measure_mass(const cub5_measure* measure, double* out);
/* Exact moment L(x^alpha) for a multi-index of total degree <= the supported
 * degree (6, or 5 for custom radial measures). */
cub5_status cub5_measure_moment(const cub5_measure* measure, const int* alpha, int alpha_len,
                                double* out);
cub5_status cub5_measure_max_moment_degree(const cub5_measure* measure, int* out);
/* Exact integral of a polynomial by moment expansion. */
cub5_status cub5_measure_integrate(const cub5_measure* measure, const cub5_poly* poly,
                                   double* out);

/* ---- rules --------------------------------------------------------------- */

/* Degree-5 rule: at most n^2+5n+3 points for product measures (n^2+3n+1 at
 * n = 7), n^2+3n+3 for spherically symmetric ones (n^2+n+1 at n = 7, which
 * meets the lower bound). gamma_override (product measures only) replaces the
 * automatic scaling parameter; pass NULL for the default. */
cub5_status cub5_rule_build(const cub5_measure* measure, const double* gamma_override,
                            cub5_rule** out);
/* Degree-3 rule (sphere orbit + center) for a product measure with identical
 * axis weights. */
cub5_status cub5_rule_build_degree3(const cub5_measure* measure, cub5_rule** out);
void cub5_rule_free(cub5_rule* rule);

cub5_status cub5_rule_dimension(const cub5_rule* rule, int* out);
cub5_status cub5_rule_degree(const cub5_rule* rule, int* out);
cub5_status cub5_rule_point_count(const cub5_rule* rule, long long* out);
cub5_status cub5_rule_gamma(const cub5_rule* rule, double* out);
cub5_status cub5_rule_mass(const cub5_rule* rule, double* out);
cub5_status cub5_rule_region(const cub5_rule* rule, char** out);
/* Any output may be NULL. Flags are 0/1. */
cub5_status cub5_rule_flags(const cub5_rule* rule, int* points_in_region,
                            int* has_negative_weights, int* attains_moller_bound);
/* buffer_len counts doubles: point_count*dimension for nodes (row-major),
 * point_count for weights. */
cub5_status cub5_rule_nodes(const cub5_rule* rule, double* buffer, size_t buffer_len);
cub5_status cub5_rule_weights(const cub5_rule* rule, double* buffer, size_t buffer_len);

/* format: "json" (reloadable) or "csv" (header row x1,...,xn,weight). */
cub5_status cub5_rule_save(const cub5_rule* rule, const char* path, const char* format);
cub5_status cub5_rule_to_json(const cub5_rule* rule, char** out);
cub5_status cub5_rule_load(const char* path, cub5_rule** out);

/* ---- polynomials ---------------------------------------------------------- */

/* Grammar: term (('+'|'-') term)*, term = [coeff '*'] x<i> ['^' <e>] ('*' ...)*,
 * indices 1-based, whitespace ignored. Parse errors carry the position. */
cub5_status cub5_poly_parse(const char* text, int dimension, cub5_poly** out);
void cub5_poly_free(cub5_poly* poly);
cub5_status cub5_poly_degree(const cub5_poly* poly, int* out);
cub5_status cub5_poly_format(const cub5_poly* poly, char** out);

/* Weighted sum of polynomial values over the rule's nodes. */
cub5_status cub5_rule_apply(const cub5_rule* rule, const cub5_poly* poly, double* out);

/* ---- verification ---------------------------------------------------------- */

/* Sweeps every monomial of total degree <= max_degree against the measure's
 * moments; *pass reports whether all degrees up to the rule's declared degree
 * stay within tolerance. report_json (optional) receives the full report. */
cub5_status cub5_verify(const cub5_rule* rule, const cub5_measure* measure, int max_degree,
                        double tolerance, int* pass, char** report_json);

/* ---- lower bounds ----------------------------------------------------------- */

cub5_status cub5_dim_poly_space(int n, int k, long long* out);
/* Lower bound on node counts for odd-degree rules with centrally symmetric
 * measures; n^2+n+1 at degree 5. Even degrees are unsupported. */
cub5_status cub5_moller_bound(int n, int degree, long long* out);
/* The coarse 2*dim-based form, for verbose reporting. */
cub5_status cub5_double_dim_bound(int n, int degree, long long* out);

#ifdef __cplusplus
}
#endif

#endif /* CUBATURE5_H */
