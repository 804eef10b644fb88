#ifndef RSK_H
#define RSK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum {
  RSK_STATUS_OK = 0,
  RSK_STATUS_NULL_POINTER = 1,
  RSK_STATUS_INVALID_INPUT = 2,
  RSK_STATUS_OUT_OF_RANGE = 3,
  RSK_STATUS_PRECONDITION = 4,
  RSK_STATUS_CAPACITY = 5,
  RSK_STATUS_NO_WITNESS = 6,
  RSK_STATUS_PANIC = 7,
  RSK_STATUS_INTERNAL = 8,
} RskStatus;

typedef enum {
  RSK_PAIRING_DUAL_SUCCESSOR = 0,
  RSK_PAIRING_NON_DUAL = 1,
  RSK_PAIRING_MIRROR_NON_DUAL = 2,
  RSK_PAIRING_PAWLAK = 3,
} RskPairing;

typedef enum {
  RSK_CHARACTERIZATION_REFLEXIVE_LOWER = 0,
  RSK_CHARACTERIZATION_REFLEXIVE_UPPER = 1,
  RSK_CHARACTERIZATION_SYMMETRIC = 2,
  RSK_CHARACTERIZATION_TRANSITIVE_UPPER = 3,
  RSK_CHARACTERIZATION_EQUIVALENCE = 4,
  RSK_CHARACTERIZATION_EQUIVALENCE_ALT = 5,
  RSK_CHARACTERIZATION_TRANSITIVE_NON_DUAL = 6,
  RSK_CHARACTERIZATION_PREORDER = 7,
} RskCharacterization;

/**
 * Relation classes in table column order.
 */
typedef enum {
  RSK_CLASS_ANY = 0,
  RSK_CLASS_REFLEXIVE = 1,
  RSK_CLASS_SYMMETRIC = 2,
  RSK_CLASS_TRANSITIVE = 3,
  RSK_CLASS_REFLEXIVE_SYMMETRIC = 4,
  RSK_CLASS_PREORDER = 5,
  RSK_CLASS_SYMMETRIC_TRANSITIVE = 6,
  RSK_CLASS_EQUIVALENCE = 7,
  RSK_CLASS_SERIAL = 8,
} RskClass;

/**
 * Opaque covering.
 */
typedef struct RskCovering RskCovering;

/**
 * Opaque binary relation.
 */
typedef struct RskRelation RskRelation;

/**
 * Opaque property table.
 */
typedef struct RskTable RskTable;

typedef struct {
  bool reflexive;
  bool symmetric;
  bool transitive;
  bool serial;
} RskClassFlags;

typedef struct {
  bool property_holds;
  bool class_holds;
  bool consistent;
} RskConsistency;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into the library on this thread.
 */
const char *rsk_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *rsk_version(void);

/**
 * Builds a relation on `n` elements from `len` pairs stored as
 * `pairs[2k], pairs[2k+1]`. `pairs` may be null when `len` is 0.
 */
RskStatus rsk_relation_new(size_t n, const uint32_t *pairs, size_t len, RskRelation **out_relation);

/**
 * Parses a relation from the JSON relation file format.
 */
RskStatus rsk_relation_from_json(const char *json, RskRelation **out_relation);

void rsk_relation_free(RskRelation *relation);

/**
 * Universe size of `relation`, or 0 when it is null.
 */
size_t rsk_relation_size(const RskRelation *relation);

RskStatus rsk_relation_contains(const RskRelation *relation,
                                size_t x,
                                size_t y,
                                bool *out_contains);

RskStatus rsk_relation_classify(const RskRelation *relation, RskClassFlags *out_flags);

/**
 * Lower approximation of the set `set` (a bit mask over the universe).
 */
RskStatus rsk_lower(RskPairing pairing,
                    const RskRelation *relation,
                    uint64_t set,
                    uint64_t *out_set);

/**
 * Upper approximation of the set `set` (a bit mask over the universe).
 */
RskStatus rsk_upper(RskPairing pairing,
                    const RskRelation *relation,
                    uint64_t set,
                    uint64_t *out_set);

/**
 * Checks one table row (1 through 23) on `relation` for all subsets.
 */
RskStatus rsk_check_property(uint8_t row,
                             RskPairing pairing,
                             const RskRelation *relation,
                             bool *out_holds);

RskStatus rsk_characterization_check(RskCharacterization id,
                                     const RskRelation *relation,
                                     RskConsistency *out_record);

/**
 * Writes a set on which the characterized property fails. Returns
 * `RSK_STATUS_NO_WITNESS` when the relation is in the class.
 */
RskStatus rsk_characterization_witness(RskCharacterization id,
                                       const RskRelation *relation,
                                       uint64_t *out_set);

/**
 * Generates the 23 × 9 table on relations of 1 through `max_n` elements.
 * `workers` is the thread count; 0 uses the global pool. The bound is
 * checked against the default capacity, overridable with `RSK_MAX_N`.
 */
RskStatus rsk_table_generate(RskPairing pairing,
                             size_t max_n,
                             size_t workers,
                             RskTable **out_table);

void rsk_table_free(RskTable *table);

/**
 * Whether cell (`row`, `class`) is verified up to the table bound.
 */
RskStatus rsk_table_cell(const RskTable *table, uint8_t row, RskClass class_, bool *out_verified);

/**
 * Serializes the table as JSON. Free the result with `rsk_string_free`.
 */
RskStatus rsk_table_to_json(const RskTable *table, char **out_json);

/**
 * Renders the table as markdown. Free the result with `rsk_string_free`.
 */
RskStatus rsk_table_to_markdown(const RskTable *table, char **out_markdown);

void rsk_string_free(char *s);

/**
 * Parses a covering from the JSON covering file format.
 */
RskStatus rsk_covering_from_json(const char *json, RskCovering **out_covering);

/**
 * Builds a covering on `n` elements from `len` blocks given as bit masks.
 */
RskStatus rsk_covering_new(size_t n,
                           const uint64_t *blocks,
                           size_t len,
                           RskCovering **out_covering);

void rsk_covering_free(RskCovering *covering);

/**
 * Whether the covering operators coincide with the non-dual operators of
 * the induced relation.
 */
RskStatus rsk_covering_verify(const RskCovering *covering, bool *out_holds);

RskStatus rsk_covering_lower(const RskCovering *covering, uint64_t set, uint64_t *out_set);

RskStatus rsk_covering_upper(const RskCovering *covering, uint64_t set, uint64_t *out_set);

/**
 * Writes the relation induced by the covering into `out_relation`.
 */
RskStatus rsk_covering_induced_relation(const RskCovering *covering, RskRelation **out_relation);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RSK_H */
