/* ftopa - finite totally ordered probability algebras.
 *
 * C interface over the C++ core. All functions that can fail return a
 * ftopa_status; on failure ftopa_last_error() carries a message for the
 * calling thread. Strings returned through char** out-parameters are owned
 * by the caller and must be released with ftopa_string_free().
 *
 * Probability values are 1-based indices into a totally ordered set of
 * size n: index 1 is certainty, index n is impossibility, and a larger
 * index means a smaller probability.
 */

#ifndef FTOPA_H
#define FTOPA_H

#if defined(_WIN32)
#define FTOPA_API __declspec(dllexport)
#else
#define FTOPA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ftopa_status {
  FTOPA_OK = 0,
  FTOPA_ERROR_INVALID_ARGUMENT = 1,
  FTOPA_ERROR_DOMAIN = 2,
  FTOPA_ERROR_PARSE = 3,
  FTOPA_ERROR_UNSUPPORTED = 4,
  FTOPA_ERROR_INTERNAL = 5
} ftopa_status;

/* Opaque handle to an immutable probability algebra. Safe to share across
 * threads once created. */
typedef struct ftopa_algebra ftopa_algebra;

/* Opaque handle to a parsed smoke-alarm knowledge base. */
typedef struct ftopa_kb ftopa_kb;

/* A contiguous interval of probability values. lower is the largest index
 * (smallest probability), upper the smallest index; lower == upper for a
 * single value. */
typedef struct ftopa_range {
  int lower;
  int upper;
} ftopa_range;

typedef struct ftopa_metrics {
  long long ambiguity;                 /* A: total width excess of range cells */
  long long solution_cells;            /* M: defined cells with nonzero denominator */
  long long relative_num;              /* R = A/M in lowest terms */
  long long relative_den;
  long long denominator_indifference;  /* O_d */
  long long mobility;                  /* O_m */
} ftopa_metrics;

FTOPA_API const char* ftopa_version(void);

/* Message for the most recent failure on the calling thread. Never NULL. */
FTOPA_API const char* ftopa_last_error(void);

FTOPA_API void ftopa_string_free(char* text);

/* --- algebra construction ------------------------------------------------ */

/* Builds the unique legal algebra of size n with the given idempotent
 * indices. The set must contain 1, n-1 and n, and n must be at least 3. */
FTOPA_API ftopa_status ftopa_algebra_create(int n, const int* idempotents, int count,
                                            ftopa_algebra** out);

/* Parses the short form "8:{1,5,7,8}". */
FTOPA_API ftopa_status ftopa_algebra_parse(const char* short_form, ftopa_algebra** out);

FTOPA_API void ftopa_algebra_destroy(ftopa_algebra* algebra);

FTOPA_API int ftopa_algebra_size(const ftopa_algebra* algebra);

/* Idempotent indices read off the product table. Writes up to capacity
 * entries and stores the true count; fails if capacity is too small. */
FTOPA_API ftopa_status ftopa_algebra_idempotents(const ftopa_algebra* algebra, int* out,
                                                 int capacity, int* count);

FTOPA_API ftopa_status ftopa_algebra_short_form(const ftopa_algebra* algebra, char** out);

/* --- value and range operations ------------------------------------------ */

FTOPA_API ftopa_status ftopa_product(const ftopa_algebra* algebra, int p, int q, int* out);

FTOPA_API ftopa_status ftopa_inverse(const ftopa_algebra* algebra, int p, int* out);

/* The set { r : q * r = p } as a contiguous range. Requires p >= q as
 * indices (p no more probable than q); FTOPA_ERROR_DOMAIN otherwise. */
FTOPA_API ftopa_status ftopa_solve(const ftopa_algebra* algebra, int p, int q,
                                   ftopa_range* out);

FTOPA_API ftopa_status ftopa_range_product(const ftopa_algebra* algebra, ftopa_range a,
                                           ftopa_range b, ftopa_range* out);

/* Requires numerator.lower >= denominator.upper as indices. */
FTOPA_API ftopa_status ftopa_range_solve(const ftopa_algebra* algebra, ftopa_range numerator,
                                         ftopa_range denominator, ftopa_range* out);

FTOPA_API ftopa_status ftopa_range_inverse(const ftopa_algebra* algebra, ftopa_range a,
                                           ftopa_range* out);

/* --- reports -------------------------------------------------------------- */

/* Product and solution tables, tab-separated, in the layout the `tables`
 * CLI subcommand prints. */
FTOPA_API ftopa_status ftopa_render_tables(const ftopa_algebra* algebra, char** out);

FTOPA_API ftopa_status ftopa_metrics_compute(const ftopa_algebra* algebra, ftopa_metrics* out);

/* TSV with one metric row per legal algebra of size n plus an invariant
 * footer. */
FTOPA_API ftopa_status ftopa_metrics_report_tsv(int n, char** out);

/* Exhaustively searches all product tables of size n (n <= 7; larger sizes
 * return FTOPA_ERROR_UNSUPPORTED) and compares them with the constructed
 * family. Stores 1 in *passed when the search found exactly the expected
 * tables. out_text may be NULL. */
FTOPA_API ftopa_status ftopa_verify_enumeration(int n, char** out_text, int* passed);

/* Evaluates a belief expression such as "e2*e5/e5" or "i[[e5,e1]]" over the
 * algebra and renders the resulting literal. */
FTOPA_API ftopa_status ftopa_eval(const ftopa_algebra* algebra, const char* expression,
                                  char** out);

/* --- smoke-alarm experiment ---------------------------------------------- */

/* Parses knowledge-base text, one entry per line:
 *   p(alarm|~fire&tampering) = e2 , 0.99
 * On failure the error message names the offending line. */
FTOPA_API ftopa_status ftopa_kb_parse(const char* text, ftopa_kb** out);

/* The built-in eight-entry knowledge base. */
FTOPA_API ftopa_status ftopa_kb_default(ftopa_kb** out);

FTOPA_API void ftopa_kb_destroy(ftopa_kb* kb);

/* Runs the ten smoke-alarm queries over every legal algebra of size n and
 * over the real model; TSV rows plus classification footers. */
FTOPA_API ftopa_status ftopa_experiment_tsv(int n, const ftopa_kb* kb, char** out);

/* Same experiment as an aligned human-readable report. */
FTOPA_API ftopa_status ftopa_experiment_text(int n, const ftopa_kb* kb, char** out);

#ifdef __cplusplus
}
#endif

#endif /* FTOPA_H */
