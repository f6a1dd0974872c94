/*
 * C interface to the dominance-certificate engine.
 *
 * Conventions:
 *   - Partitions and compositions travel as text: "[4,2,0]" and "(1,2)".
 *     Trailing zeros are significant; the array length is the rank.
 *   - Every function returns a dc_status. Predicates use DC_OK for a true
 *     answer and DC_FALSE for a false one; both are successful calls.
 *   - On any DC_ERROR_* result, dc_last_error() describes the problem for
 *     the calling thread until its next library call.
 *   - Strings returned through char** are heap-allocated JSON or plain
 *     text; release them with dc_string_free. Handles are released with
 *     their matching *_free function. NULL is always safe to free.
 *   - support_cap bounds the number of distinct constituents any tensor
 *     power expansion may hold; pass 0 for the library default.
 */
#ifndef DOMCERT_H
#define DOMCERT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dc_status {
    DC_OK = 0,
    DC_FALSE = 1,
    DC_ERROR_ARGUMENT = 2,
    DC_ERROR_CAP = 3,
    DC_ERROR_INTERNAL = 4
} dc_status;

typedef struct dc_cone dc_cone;
typedef struct dc_document dc_document;

const char* dc_version(void);
const char* dc_last_error(void);
void dc_string_free(char* text);

/* Dominance order. Compares x against y at equal rank; scaled nonzero uses
 * the weight-scaled order, which also accepts partitions of different
 * weights. Returns DC_OK when x lies below y. */
dc_status dc_dominates(const char* x, const char* y, int scaled);
dc_status dc_dominance_diagnostic(const char* x, const char* y, int scaled, char** out_text);

/* Tensor calculus. */
dc_status dc_tensor_power(const char* base, int64_t power, int with_multiplicities,
                          uint64_t support_cap, char** out_json);
dc_status dc_contains_in_power(const char* base, const char* target, int64_t power,
                               uint64_t support_cap);

/* The dominance cone of a non-zero base partition. */
dc_status dc_cone_create(const char* base, dc_cone** out);
void dc_cone_free(dc_cone* cone);
dc_status dc_cone_member(const dc_cone* cone, const char* target);
dc_status dc_cone_vertices(const dc_cone* cone, char** out_json);
dc_status dc_cone_sigma(const dc_cone* cone, char** out_json);
dc_status dc_cone_decompose(const dc_cone* cone, const char* target, char** out_json);

/* Certificate construction. Each emits a canonical JSON document. */
dc_status dc_certify_wedge(int rank, int column, int64_t power, char** out_json);
dc_status dc_certify_det(const char* base, char** out_json);
dc_status dc_certify_vertex(const char* base, const char* composition, char** out_json);
dc_status dc_certify_dominance(const char* base, const char* dominated, int64_t power,
                               uint64_t support_cap, char** out_json);

/* Parsed certificate documents of either kind. Verification returns DC_OK
 * for an accepted document and DC_FALSE with a reason for a rejected one. */
dc_status dc_document_parse(const char* text, dc_document** out);
void dc_document_free(dc_document* doc);
int dc_document_is_dominance(const dc_document* doc);
dc_status dc_document_verify(const dc_document* doc, int deep, uint64_t support_cap,
                             char** out_reason);
dc_status dc_document_dump(const dc_document* doc, char** out_json);

/* Internal consistency checks; the report is identical for every jobs
 * value. Returns DC_FALSE if any check failed. */
dc_status dc_selftest(int jobs, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* DOMCERT_H */
