/* C interface to the exact exterior-calculus engine for quantum SU(2).
 *
 * Everything is computed over the exact scalar field (Gaussian rationals
 * extended by the deformation parameter and adjoined symbols); no floating
 * point is involved anywhere. Results are returned as report handles
 * carrying JSON or CSV text; identical inputs produce byte-identical text.
 *
 * Conventions:
 *   - Functions return qsu2_status. On QSU2_OK the out parameters are set.
 *     Command functions also set the report on QSU2_CHECK_FAILED so the
 *     failure can be inspected.
 *   - qsu2_error_message() describes the most recent failure on the calling
 *     thread; it returns an empty string after a success.
 *   - Rational arguments are exact strings "p" or "p/r". An evaluation
 *     point q, where accepted, must lie strictly between 0 and 1; pass NULL
 *     to keep the output symbolic.
 *   - Handles are freed with the matching *_free function; freeing NULL is
 *     a no-op.
 */
#ifndef QSU2_H
#define QSU2_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsu2_status {
    QSU2_OK = 0,
    QSU2_CHECK_FAILED = 1,    /* a verification or equality check failed */
    QSU2_INVALID_ARGUMENT = 2,/* malformed option, expression or input */
    QSU2_INTERNAL_ERROR = 3
} qsu2_status;

typedef enum qsu2_format { QSU2_JSON = 0, QSU2_CSV = 1 } qsu2_format;

typedef struct qsu2_report qsu2_report; /* owned text buffer */
typedef struct qsu2_scalar qsu2_scalar; /* exact scalar */

const char* qsu2_error_message(void);

/* ---- reports ---------------------------------------------------------- */

const char* qsu2_report_text(const qsu2_report* r);
void qsu2_report_free(qsu2_report* r);

/* ---- exact scalars ----------------------------------------------------- */

/* Parse an expression in the scalar grammar: rationals, i, s, q = s^2,
 * registered symbols, + - * / ^ and parentheses. */
qsu2_status qsu2_scalar_parse(const char* text, qsu2_scalar** out);
void qsu2_scalar_free(qsu2_scalar* x);

/* Canonical textual form, as a report handle. */
qsu2_status qsu2_scalar_text(const qsu2_scalar* x, qsu2_report** out);

/* 1 or 0; -1 if x (or y) is NULL. */
int qsu2_scalar_is_zero(const qsu2_scalar* x);
int qsu2_scalar_equal(const qsu2_scalar* x, const qsu2_scalar* y);

qsu2_status qsu2_scalar_add(const qsu2_scalar* x, const qsu2_scalar* y, qsu2_scalar** out);
qsu2_status qsu2_scalar_sub(const qsu2_scalar* x, const qsu2_scalar* y, qsu2_scalar** out);
qsu2_status qsu2_scalar_mul(const qsu2_scalar* x, const qsu2_scalar* y, qsu2_scalar** out);
qsu2_status qsu2_scalar_div(const qsu2_scalar* x, const qsu2_scalar* y, qsu2_scalar** out);
qsu2_status qsu2_scalar_conj(const qsu2_scalar* x, qsu2_scalar** out);

/* Exact value at the rational point q; fails if free symbols remain or the
 * expression has odd powers of s while q is not a rational square. */
qsu2_status qsu2_scalar_eval_q(const qsu2_scalar* x, const char* q, qsu2_report** out);

/* ---- commands ---------------------------------------------------------- */

/* Run the named identity suites. suites is a comma-separated subset of
 * "braiding,exterior,hodge,metric,oracle,laplacian", or "all"/NULL/"" for
 * every suite. corrupt_sigma != 0 injects the debug fault into the braid
 * relation, which must then fail. Returns QSU2_CHECK_FAILED (with the
 * report set) when any check fails; documented discrepancies do not fail. */
qsu2_status qsu2_verify(const char* suites, int corrupt_sigma, qsu2_format format,
                        qsu2_report** out);

/* Antisymmetrizer spectrum in degree k (1..5) for the braiding direction
 * picked by sign ('+' or '-'). */
qsu2_status qsu2_spectra(int k, char sign, const char* q, qsu2_format format,
                         qsu2_report** out);

/* Hodge operator tables in every degree for hermitian family 'a', 'b' or
 * 'c' with the given Z_2 sign. alpha is an expression for families a and c
 * and an exact rational for family b; eps (family b only, else NULL) is an
 * exact rational; family b also needs q to be the square of a rational.
 * dir_sign picks the braiding direction. m is "auto" (normalized family-a
 * scale), "symbolic"/NULL (a free real symbol), or an expression. */
qsu2_status qsu2_hodge_table(char family, const char* alpha, const char* eps, int sign,
                             char dir_sign, const char* m, const char* q,
                             qsu2_format format, qsu2_report** out);

/* Exact Laplacian spectrum over |n| <= nmax, J <= jmax (jmax a half integer
 * such as "4" or "7/2") at the required rational point q. branch is "sigma"
 * or "other"; side 'L' uses the closed form, side 'R' extracts eigenvalues
 * from the right-handed operator action. */
qsu2_status qsu2_laplacian(const char* branch, char side, const char* alpha, int nmax,
                           const char* jmax, const char* q, qsu2_format format,
                           qsu2_report** out);

/* Classify a contraction given as JSON text
 *   {"alpha": "...", "beta": "...", "nu": "...", "epsilon": "...",
 *    "xi": "...", "gamma": "...", "m": "auto"}
 * ("m" is ignored). With q given (a rational square), the verdicts are
 * evaluated at that point and the report carries the determinant sign. */
qsu2_status qsu2_classify(const char* contraction_json, char dir_sign, const char* q,
                          qsu2_format format, qsu2_report** out);

/* Classify a candidate metric: JSON with a 4x4 "entries" table of
 * expressions, or the contraction keys above to use the induced metric. */
qsu2_status qsu2_classify_metric(const char* metric_json, const char* q,
                                 qsu2_format format, qsu2_report** out);

/* Function-algebra oracle tables; which is "casimir", "tangent-ideal",
 * "differential", "phi-basis" or "all". Returns QSU2_CHECK_FAILED (report
 * set) if any table row fails its equality. */
qsu2_status qsu2_oracle(const char* which, const char* jmax, qsu2_format format,
                        qsu2_report** out);

/* The 16x16 braiding matrix for the direction picked by sign, dense,
 * entries in the scalar grammar. */
qsu2_status qsu2_export_braiding(char sign, qsu2_format format, qsu2_report** out);

#ifdef __cplusplus
}
#endif

#endif /* QSU2_H */
