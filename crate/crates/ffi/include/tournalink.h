/* C interface for the tournalink score-sequence classifier.
 *
 * Conventions:
 *   - Functions return TL_OK (0) on success and a negative TL_ERR_* code on
 *     failure; tl_landau_check and tl_certify_edge_list also use the
 *     positive value 1 for "invalid sequence" / "inconclusive".
 *   - Classification statuses are the non-negative TL_STATUS_* values,
 *     written through out-pointers.
 *   - Every char* produced by the library is NUL-terminated, owned by the
 *     library's allocator, and must be released with tl_string_free. The
 *     pointer returned by tl_version is static and must not be freed.
 *   - A TlClassifier handle is not thread-safe; use one handle per thread
 *     or synchronize externally.
 */

#ifndef TOURNALINK_H
#define TOURNALINK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    TL_OK = 0,
    TL_ERR_NULL = -1,
    TL_ERR_UTF8 = -2,
    TL_ERR_PARSE = -3,
    TL_ERR_INVALID = -4,
    TL_ERR_LENGTH_CAP = -5,
    TL_ERR_CONFLICT = -6,
    TL_ERR_BAD_INPUT = -7
};

enum {
    TL_STATUS_LINKLESS = 0,
    TL_STATUS_IL_REPRESENTATIVE = 1,
    TL_STATUS_UNKNOWN = 2
};

/* Opaque classifier handle. */
typedef struct TlClassifier TlClassifier;

/* Create a classifier capped at sequences of length max_n (0 = default). */
TlClassifier *tl_classifier_new(uint32_t max_n);

/* Destroy a classifier handle; a null handle is a no-op. */
void tl_classifier_free(TlClassifier *handle);

/* Classify a sequence given as text, e.g. "1,2,2,3" or "(1, 2, 2, 3)".
 * Unsorted input is rejected unless normalize is nonzero. On success,
 * writes a TL_STATUS_* value through status_out (which may be null). */
int tl_classify(TlClassifier *handle, const char *sequence, int normalize,
                int *status_out);

/* Classify and return the full record (sequence, status, trace) as a JSON
 * string, or null on error. Free the result with tl_string_free. */
char *tl_classify_json(TlClassifier *handle, const char *sequence,
                       int normalize);

/* Check len values against the score-sequence conditions. Returns TL_OK
 * when valid; returns 1 otherwise and, when message_out is non-null, writes
 * a human-readable violation (free with tl_string_free). */
int tl_landau_check(const uint32_t *values, size_t len, char **message_out);

/* Classification counts for sequences of length n, written to counts_out
 * as {linkless, il-representative, unknown}. counts_out must have room for
 * three uint64_t values. */
int tl_table_counts(TlClassifier *handle, uint32_t n, uint64_t *counts_out);

/* Realize a sequence as a tournament; returns its edge list ("u v" per
 * line, meaning u -> v) or null on error. Free with tl_string_free. */
char *tl_realize_edge_list(const char *sequence, int normalize);

/* Certify an 8-vertex tournament given as edge-list text. Returns TL_OK
 * and writes a report through report_out (may be null) when certified not
 * intrinsically linked; returns 1 when the search is inconclusive; returns
 * a negative TL_ERR_* code for unusable input. Free the report with
 * tl_string_free. */
int tl_certify_edge_list(const char *edge_list, char **report_out);

/* Release a string allocated by this library; null is a no-op. */
void tl_string_free(char *s);

/* Static version string; do not free. */
const char *tl_version(void);

#ifdef __cplusplus
}
#endif

#endif /* TOURNALINK_H */
