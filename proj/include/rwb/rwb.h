/* C interface to the Ramsey workbench.
 *
 * Every handle is opaque. Functions return an rwb_status; on failure the
 * context keeps a JSON description of the error, readable with
 * rwb_last_error. Results come back as report handles holding JSON text. */
#ifndef RWB_RWB_H
#define RWB_RWB_H

#include <stddef.h>
#include <stdint.h>

#if defined(RWB_BUILDING_LIBRARY)
#define RWB_API __attribute__((visibility("default")))
#else
#define RWB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rwb_status {
  RWB_OK = 0,
  RWB_ERR_INPUT = 1,    /* malformed or invalid input */
  RWB_ERR_OVERFLOW = 2, /* a size cap was exceeded */
  RWB_ERR_INTERNAL = 3  /* an internal consistency check failed */
} rwb_status;

typedef struct rwb_context rwb_context;
typedef struct rwb_object rwb_object;
typedef struct rwb_report rwb_report;

RWB_API const char* rwb_version(void);

RWB_API rwb_status rwb_context_new(rwb_context** out);
RWB_API void rwb_context_free(rwb_context* ctx);

/* Keys: threads, hom_cap, e_cap, r_cap, exhaustive_cap, certify_cap,
 * samples, node_budget, seed. Values are decimal integers. */
RWB_API rwb_status rwb_context_set_option(rwb_context* ctx, const char* key, const char* value);

/* {"error": name, "message": text, "witness": [...]}, or "" after success. */
RWB_API const char* rwb_last_error(const rwb_context* ctx);

/* Parses and validates one JSON object (chain, monoid, M-set, ordered
 * M-set, unary algebra, coalgebra or forest). */
RWB_API rwb_status rwb_object_load(rwb_context* ctx, const char* json, rwb_object** out);
RWB_API void rwb_object_free(rwb_object* obj);
RWB_API const char* rwb_object_kind(const rwb_object* obj);
RWB_API size_t rwb_object_size(const rwb_object* obj);

RWB_API rwb_status rwb_validate(rwb_context* ctx, const rwb_object* obj, rwb_report** out);

/* functor: "monoid_action" (monoid required) or "duplicate_free_list". */
RWB_API rwb_status rwb_laws(rwb_context* ctx, const char* functor, const rwb_object* monoid, size_t carrier_size,
                            rwb_report** out);

/* category: "chains", "msets", "ordered_msets" or "forests". */
RWB_API rwb_status rwb_arrow_check(rwb_context* ctx, const rwb_object* a, const rwb_object* b, const rwb_object* c,
                                   size_t k, size_t t, const char* category, rwb_report** out);

/* budget: "small" or "medium". */
RWB_API rwb_status rwb_degree_probe(rwb_context* ctx, const rwb_object* a, const char* category, const char* budget,
                                    rwb_report** out);

/* truncate_n = 0 skips the universal embedding into hat_E(omega_N). */
RWB_API rwb_status rwb_transport(rwb_context* ctx, const rwb_object* u, const rwb_object* v, size_t k,
                                 size_t max_chain, size_t truncate_n, rwb_report** out);

/* n_inner = 0 means |A|. coloring_json (may be NULL) is an array with one
 * color per element of hom(A, hat_E(omega_N)); it replaces the seeded trials. */
RWB_API rwb_status rwb_bigramsey(rwb_context* ctx, const rwb_object* a, size_t n, size_t k, size_t trials,
                                 uint64_t seed, size_t n_inner, const char* coloring_json, rwb_report** out);

/* ordered_degrees_json: [{"order": [...], "degree": n or null}, ...]. */
RWB_API rwb_status rwb_degree_bound(rwb_context* ctx, const rwb_object* a, const char* ordered_degrees_json,
                                    rwb_report** out);

RWB_API rwb_status rwb_forest(rwb_context* ctx, const rwb_object* forest, rwb_report** out);

RWB_API const char* rwb_report_json(const rwb_report* report);
RWB_API void rwb_report_free(rwb_report* report);

/* SHA-256 as 64 lowercase hex digits and a terminating NUL. */
RWB_API rwb_status rwb_content_hash(const void* data, size_t len, char out[65]);

#ifdef __cplusplus
}
#endif

#endif /* RWB_RWB_H */
