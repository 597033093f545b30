/* C API for the twin building lattice decision library.
 *
 * Usage pattern: create a session, run commands against JSON input
 * documents, read the malloc'd JSON reports, free them with
 * twinlat_string_free, and free the session.  Sessions are cheap and not
 * thread-safe; use one per thread.
 *
 * Input documents carry exactly one of "gcm" (integer matrix) or "coxeter"
 * (matrix of orders, "inf" allowed), plus optional "q", "root_group_orders",
 * "torus_order", "budget": {"ball_cap", "radius_schedule"}, and boolean
 * datum flags for exotic twin root data.  Root literals look like
 * {"simple": 0, "word": [1, 0], "sign": "-"}.
 */

#ifndef TWINLAT_H
#define TWINLAT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct twinlat_session twinlat_session;

typedef enum twinlat_status {
  TWINLAT_OK = 0,
  TWINLAT_USAGE = 1,           /* null pointers, malformed call arguments */
  TWINLAT_INVALID_INPUT = 2,   /* bad JSON, bad matrix, bad literal */
  TWINLAT_BUDGET_EXCEEDED = 3, /* ball cap or radius schedule exhausted */
  TWINLAT_INAPPLICABLE = 4,    /* a named hypothesis of the request fails */
  TWINLAT_INTERNAL = 5         /* library invariant violation */
} twinlat_status;

twinlat_session *twinlat_session_new(void);
void twinlat_session_free(twinlat_session *session);

/* Overrides the search ball cap of every subsequent command on this
 * session; cap = 0 restores the input document's own budget. */
twinlat_status twinlat_set_ball_cap(twinlat_session *session, size_t cap);

/* Commands.  Each parses the input document and, on TWINLAT_OK, stores a
 * malloc'd JSON report in *out_json (caller frees with
 * twinlat_string_free).  On failure *out_json is NULL and
 * twinlat_last_error describes the failure. */

/* Diagram classification of the input matrix. */
twinlat_status twinlat_classify(twinlat_session *session, const char *input_json,
                                char **out_json);

/* Growth series report.  coeffs >= 0 adds Taylor coefficients c_0..c_coeffs;
 * pass -1 to omit.  eval_q, when non-NULL, is a decimal integer q >= 1 and
 * adds the evaluation of the series at 1/q. */
twinlat_status twinlat_growth(twinlat_session *session, const char *input_json,
                              int coeffs, const char *eval_q, char **out_json);

/* Full hypothesis-and-bounds report; requires "gcm" and "q". */
twinlat_status twinlat_verdict(twinlat_session *session, const char *input_json,
                               char **out_json);

/* Certified witness search; requires "gcm".  alpha_literal is a root
 * literal.  h >= 1 builds the translated configuration for that h;
 * h = 0 builds a disjoint triple instead, pairing alpha with beta_literal
 * when given (NULL or "" searches for a partner). */
twinlat_status twinlat_witness(twinlat_session *session, const char *input_json,
                               const char *alpha_literal, const char *beta_literal,
                               int h, char **out_json);

/* Message for the most recent failing call on this session; the pointer is
 * valid until the next command on the same session. */
const char *twinlat_last_error(const twinlat_session *session);

void twinlat_string_free(char *str);

const char *twinlat_version(void);

#ifdef __cplusplus
}
#endif

#endif
