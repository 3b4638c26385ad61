/* C interface to the span2 engine.
 *
 * All functions return a span2_status; results come back through out
 * parameters. Handles are opaque and freed with their matching _free
 * function; strings returned through char** are freed with
 * span2_string_free. On any non-OK status, span2_last_error() returns a
 * message describing the failure (thread-local, valid until the next
 * failing call on the same thread).
 */

#ifndef SPAN2_SPAN2_H
#define SPAN2_SPAN2_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum span2_status {
  SPAN2_OK = 0,
  SPAN2_ERR_INVALID_ARGUMENT = 1, /* null handle or out pointer */
  SPAN2_ERR_PARSE = 2,            /* malformed JSON */
  SPAN2_ERR_INVARIANT = 3,        /* well-formed JSON violating an invariant */
  SPAN2_ERR_NOT_COMPOSABLE = 4,   /* feet or endpoints do not match */
  SPAN2_ERR_LIMIT_TOO_LARGE = 5,  /* limit exceeds the configured bound */
  SPAN2_ERR_INTERNAL = 6
} span2_status;

/* A parsed span, cospan or 2-cell. */
typedef struct span2_value span2_value;

/* A list of coherence-law reports. */
typedef struct span2_reports span2_reports;

const char* span2_status_name(span2_status status);
const char* span2_last_error(void);

span2_status span2_value_parse(const char* json_text, span2_value** out);
void span2_value_free(span2_value* value);

/* "span", "cospan" or "two_cell". */
const char* span2_value_kind(const span2_value* value);

/* Composes a with b (a is the earlier factor): spans by pullback, cospans
 * by pushout, 2-cells vertically. */
span2_status span2_value_compose(const span2_value* a, const span2_value* b,
                                 span2_value** out);

/* indent < 0 emits compact JSON. */
span2_status span2_value_to_json(const span2_value* value, int indent,
                                 char** out);
span2_status span2_value_to_text(const span2_value* value, char** out);

/* Limit of a diagram: {"nodes": {...}, "edges": [...]}. Fails with
 * SPAN2_ERR_LIMIT_TOO_LARGE when the node-set product exceeds max_apex. */
span2_status span2_limit_json(const char* diagram_json, uint64_t max_apex,
                              int indent, char** out);
span2_status span2_limit_text(const char* diagram_json, uint64_t max_apex,
                              char** out);

/* Runs the coherence suite on random instances: trials per law, object
 * sizes uniform in 0..max_obj. */
span2_status span2_verify(uint64_t seed, uint32_t max_obj, uint32_t trials,
                          span2_reports** out);

/* Runs the suite in the cospan (cobordism) direction. */
span2_status span2_demo(uint64_t seed, uint32_t circles_in,
                        uint32_t circles_out, span2_reports** out);

void span2_reports_free(span2_reports* reports);
size_t span2_reports_count(const span2_reports* reports);
int span2_reports_all_passed(const span2_reports* reports);
span2_status span2_reports_to_json(const span2_reports* reports, int indent,
                                   char** out);
span2_status span2_reports_to_text(const span2_reports* reports, char** out);

/* Per-report accessors; index must be below span2_reports_count. */
const char* span2_report_law(const span2_reports* reports, size_t index);
uint64_t span2_report_seed(const span2_reports* reports, size_t index);
uint32_t span2_report_trial(const span2_reports* reports, size_t index);
int span2_report_passed(const span2_reports* reports, size_t index);
const char* span2_report_evidence(const span2_reports* reports, size_t index);

void span2_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* SPAN2_SPAN2_H */
