#ifndef LINESURF_H
#define LINESURF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  LS_STATUS_OK = 0,
  LS_STATUS_NULL_POINTER = 1,
  LS_STATUS_INVALID_INPUT = 2,
  LS_STATUS_OUT_OF_RANGE = 3,
  LS_STATUS_UNKNOWN_CASE = 4,
  LS_STATUS_NOT_AVAILABLE = 5,
  LS_STATUS_INTERNAL = 6,
} LsStatus;

typedef enum {
  LS_COMPONENT_STATUS_UNDETERMINED = 0,
  LS_COMPONENT_STATUS_UNIQUE_MAXIMAL_FAMILY = 1,
  LS_COMPONENT_STATUS_IRREDUCIBLE_COMPONENT = 2,
  LS_COMPONENT_STATUS_CONJECTURED_NON_REDUCED = 3,
  LS_COMPONENT_STATUS_GENERICALLY_SMOOTH_COMPONENT = 4,
  LS_COMPONENT_STATUS_NON_REDUCED_COMPONENT = 5,
} LsComponentStatus;

typedef enum {
  LS_GENUS_KIND_EXACT = 0,
  LS_GENUS_KIND_CONJECTURAL = 1,
  LS_GENUS_KIND_OUT_OF_RANGE = 2,
} LsGenusKind;

/**
 * Opaque classification result.
 */
typedef struct LsReport LsReport;

/**
 * Opaque audit transcript.
 */
typedef struct LsTranscript LsTranscript;

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next `ls_*` call on the same thread.
 */
const char *ls_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *ls_version(void);

/**
 * Classify `a·f1 + b·f2` on a degree-`s` surface.
 * `out` must be valid for writing one pointer.
 */
LsStatus ls_classify(int64_t s, int64_t a, int64_t b, LsReport **out);

/**
 * `report` must be NULL or a handle from [`ls_classify`] not yet freed.
 */
void ls_report_free(LsReport *report);

/**
 * `report` must be a live handle and `out` writable.
 */
LsStatus ls_report_degree(const LsReport *report, int64_t *out);

LsStatus ls_report_genus(const LsReport *report, int64_t *out);

LsStatus ls_report_dim_w(const LsReport *report, int64_t *out);

LsStatus ls_report_t(const LsReport *report, int64_t *out);

/**
 * `h¹(I_C(s))`; `LS_STATUS_NOT_AVAILABLE` when it is not known.
 */
LsStatus ls_report_h1_ideal_s(const LsReport *report, int64_t *out);

LsStatus ls_report_status(const LsReport *report, LsComponentStatus *out);

/**
 * The report as compact JSON; free with [`ls_string_free`].
 */
LsStatus ls_report_to_json(const LsReport *report, char **out);

/**
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void ls_string_free(char *s);

/**
 * Maximum genus `G(d, s)`. `out_value` is left untouched when the kind is
 * `LS_GENUS_KIND_OUT_OF_RANGE`.
 * Both out pointers must be writable.
 */
LsStatus ls_max_genus(int64_t d, int64_t s, int64_t *out_value, LsGenusKind *out_kind);

/**
 * Verdict for `(d, g)` on a smooth cubic, as compact JSON.
 * `out` must be writable.
 */
LsStatus ls_cubic_verdict_json(int64_t d, int64_t g, bool search_tuples, char **out);

/**
 * Replay an audit case by id (`"Q12_8"`, `"Q7_5"`, `"Q8_6_s5"`,
 * `"Q10_8_s6"`, `"CUBIC_57_315"`).
 * `case_id` must be a NUL-terminated string and `out` writable.
 */
LsStatus ls_audit(const char *case_id, LsTranscript **out);

/**
 * `transcript` must be NULL or a handle from [`ls_audit`] not yet freed.
 */
void ls_transcript_free(LsTranscript *transcript);

/**
 * Whether every unflagged row matches and every closing inequality holds.
 * `transcript` must be a live handle and `out` writable.
 */
LsStatus ls_transcript_is_clean(const LsTranscript *transcript, bool *out);

LsStatus ls_transcript_row_count(const LsTranscript *transcript, size_t *out);

LsStatus ls_transcript_to_json(const LsTranscript *transcript, char **out);

#endif  /* LINESURF_H */
