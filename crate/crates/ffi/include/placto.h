#ifndef PLACTO_H
#define PLACTO_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PlactoInsertMode {
  PLACTO_INSERT_MODE_PLACTIC = 0,
  PLACTO_INSERT_MODE_MIXED = 1,
} PlactoInsertMode;

typedef enum PlactoStatus {
  PLACTO_STATUS_OK = 0,
  PLACTO_STATUS_NULL_ARGUMENT = 1,
  PLACTO_STATUS_INVALID_UTF8 = 2,
  PLACTO_STATUS_INVALID_INPUT = 3,
  PLACTO_STATUS_PANIC = 4,
} PlactoStatus;

/**
 * A congruence on words, given by a list of relations.
 */
typedef struct PlactoRelations PlactoRelations;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or null. Valid until
 * the next failing call on the same thread.
 */
const char *placto_last_error(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void placto_string_free(char *s);

struct PlactoRelations *placto_relations_knuth(void);

struct PlactoRelations *placto_relations_shifted_knuth(void);

/**
 * Builds a relation set from a JSON list of
 * `{"left": "acb", "right": "cab", "constraints": "a<=b<c"}` objects.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum PlactoStatus placto_relations_from_json(const char *json, struct PlactoRelations **out);

/**
 * # Safety
 * `rels` must come from this library and not have been freed.
 */
void placto_relations_free(struct PlactoRelations *rels);

/**
 * Writes the least member of the class of `word` over `{1..n}`.
 *
 * # Safety
 * Pointers must be valid; `word` nul-terminated.
 */
enum PlactoStatus placto_canonical_word(const struct PlactoRelations *rels,
                                        uint8_t n,
                                        const char *word,
                                        char **out);

/**
 * # Safety
 * Pointers must be valid; words nul-terminated.
 */
enum PlactoStatus placto_equivalent(const struct PlactoRelations *rels,
                                    uint8_t n,
                                    const char *w1,
                                    const char *w2,
                                    bool *out);

/**
 * Writes the insertion tableau of `word` as JSON.
 *
 * # Safety
 * Pointers must be valid; `word` nul-terminated.
 */
enum PlactoStatus placto_insert_json(enum PlactoInsertMode mode,
                                     uint8_t n,
                                     const char *word,
                                     char **out);

/**
 * Runs `tables`, `plac-cases`, `splac-cases`, `plac-axioms`,
 * `splac-axioms` or `section5` and writes the JSON lines report. `pass`
 * receives the verdict.
 *
 * # Safety
 * Pointers must be valid; `check` nul-terminated.
 */
enum PlactoStatus placto_verify(const char *check,
                                uint8_t n,
                                uintptr_t degree,
                                char **out,
                                bool *pass);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PLACTO_H */
