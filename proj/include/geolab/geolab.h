/* geolab — exact-arithmetic invariants of cyclic-cover surface families.
 *
 * C interface over the C++ core.  Every operation returns a status code and,
 * on success, a result handle carrying a human-readable text rendering, a
 * JSON document, and possibly extra named payloads.  All numeric arguments
 * cross the ABI as decimal strings (integers, "a/b" fractions, or decimal /
 * exponent literals such as "2.5" and "2e-10"), so arbitrary-precision
 * values are never truncated.
 */
#ifndef GEOLAB_H
#define GEOLAB_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the command-line tool reuses them as exit codes. */
#define GEOLAB_OK 0
#define GEOLAB_ERR_DOMAIN 2   /* invalid input or violated precondition */
#define GEOLAB_ERR_IDENTITY 3 /* an internal consistency check failed */
#define GEOLAB_ERR_IO 4       /* file or stream trouble */

typedef struct geolab_result geolab_result;

/* Library version as "major.minor.patch". */
const char* geolab_version(void);

/* Message for the most recent failure on the calling thread; never NULL. */
const char* geolab_last_error(void);

/* Accessors.  Returned pointers stay valid until geolab_result_free. */
const char* geolab_result_text(const geolab_result* result); /* human-readable */
const char* geolab_result_json(const geolab_result* result); /* JSON document  */
/* Extra named payload ("csv" and "svg" on geography results, "slope" on
 * surface-producing results); NULL when the field is absent. */
const char* geolab_result_field(const geolab_result* result, const char* name);
void geolab_result_free(geolab_result* result);

/* Dedekind sum s(q, m); text is the exact value "a/b". */
int geolab_dedekind(const char* q, const char* m, geolab_result** out);

/* Hirzebruch-Jung continued fraction of m/q; text is the terms "2 6 2". */
int geolab_hj(const char* m, const char* q, geolab_result** out);

/* Resolution of the cyclic quotient singularity (1/m)(1, q); text is the
 * discrepancy list, JSON adds the chain and the branch pullback remainders. */
int geolab_resolve(const char* m, const char* q, geolab_result** out);

/* Log Chern numbers of a curve arrangement (JSON document, see
 * docs/formats.md). */
int geolab_log_chern(const char* arrangement_json, geolab_result** out);

/* Intersection-lattice identity suite for one parameter tuple; fails with
 * GEOLAB_ERR_IDENTITY naming the first broken identity. */
int geolab_lattice_check(const char* variant, const char* alpha, const char* beta, const char* d, const char* p,
                         geolab_result** out);

/* Chern invariants of the cyclic root cover described by a branch summary
 * (JSON document).  spin and pi1 (NULL = "trivial") are caller metadata. */
int geolab_cover(const char* branch_json, int spin, const char* pi1, geolab_result** out);

/* Full family pipeline for one parameter tuple.  A failed internal check
 * returns GEOLAB_ERR_IDENTITY and names it. */
int geolab_family(const char* variant, const char* alpha, const char* beta, const char* d, const char* p,
                  geolab_result** out);

/* Search for parameters whose verified slope lies within eps of r.
 * d (NULL = variant default), prime_ceiling (NULL = 10^7) and denom_bound
 * (NULL = 10^6) bound the search. */
int geolab_target(const char* variant, const char* r, const char* eps, const char* d, const char* prime_ceiling,
                  const char* denom_bound, geolab_result** out);

/* Invariants after pulling the family back over a genus-q base curve
 * (non-spin only, q >= 1). */
int geolab_base_change(const char* variant, const char* alpha, const char* beta, const char* d, const char* p,
                       const char* q, geolab_result** out);

/* Parameter sweep over a grid "variant:alphas:betas:ds:ps[;...]" with
 * comma-separated lists, e.g. "spin:1:0,1:1:5,7,11".  Text is the CSV table;
 * JSON is the detailed row array. */
int geolab_sweep(const char* grid, geolab_result** out);

/* Same sweep rendered for the Chern plane: fields "csv" and "svg" carry the
 * point table and a deterministic scatter chart (loglog != 0 uses log-log
 * axes). */
int geolab_geography(const char* grid, int loglog, geolab_result** out);

/* Correctly-rounded decimal rendering of an exact value ("910786/311991",
 * digits = 4 -> "2.9193"). */
int geolab_decimal(const char* value, unsigned digits, geolab_result** out);

#ifdef __cplusplus
}
#endif

#endif /* GEOLAB_H */
