#ifndef PARTITION_PATTERNS_H
#define PARTITION_PATTERNS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum {
  PPC_STATUS_OK = 0,
  PPC_STATUS_NULL_POINTER = 1,
  PPC_STATUS_INVALID_UTF8 = 2,
  PPC_STATUS_PARSE_ERROR = 3,
  PPC_STATUS_INVALID_ARGUMENT = 4,
} PpcStatus;

/**
 * Opaque set partition handle.
 */
typedef struct PpcPartition PpcPartition;

/**
 * Opaque generalized-pattern handle.
 */
typedef struct PpcPattern PpcPattern;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a partition such as `"137/26/45"`; on success writes a handle the
 * caller must release with [`ppc_partition_free`].
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
PpcStatus ppc_partition_parse(const char *text, PpcPartition **out);

/**
 * # Safety
 * `p` must be a handle from this library, not yet freed, or null.
 */
void ppc_partition_free(PpcPartition *p);

/**
 * Canonical text of the partition; release with [`ppc_string_free`].
 * Returns null on a null handle.
 *
 * # Safety
 * `p` must be a live handle from this library, or null.
 */
char *ppc_partition_format(const PpcPartition *p);

/**
 * JSON form `{"n": …, "blocks": [[…]]}`; release with [`ppc_string_free`].
 *
 * # Safety
 * `p` must be a live handle from this library, or null.
 */
char *ppc_partition_to_json(const PpcPartition *p);

/**
 * Ground-set size, or -1 on a null handle.
 *
 * # Safety
 * `p` must be a live handle from this library, or null.
 */
int64_t ppc_partition_n(const PpcPartition *p);

/**
 * Number of blocks, or -1 on a null handle.
 *
 * # Safety
 * `p` must be a live handle from this library, or null.
 */
int64_t ppc_partition_block_count(const PpcPartition *p);

/**
 * +1 for even partitions, -1 for odd, 0 on a null handle.
 *
 * # Safety
 * `p` must be a live handle from this library, or null.
 */
int32_t ppc_partition_sign(const PpcPartition *p);

/**
 * # Safety
 * `p` must be a live handle from this library, or null.
 */
bool ppc_partition_is_layered(const PpcPartition *p);

/**
 * # Safety
 * `p` must be a live handle from this library, or null.
 */
bool ppc_partition_is_matching(const PpcPartition *p);

/**
 * The complement partition as a fresh handle, or null on a null handle.
 *
 * # Safety
 * `p` must be a live handle from this library, or null.
 */
PpcPartition *ppc_partition_complement(const PpcPartition *p);

/**
 * Parses a generalized pattern such as `"1m3/2m"` or `"1,2|3"`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
PpcStatus ppc_pattern_parse(const char *text, PpcPattern **out);

/**
 * # Safety
 * `p` must be a handle from this library, not yet freed, or null.
 */
void ppc_pattern_free(PpcPattern *p);

/**
 * Canonical spelling of the pattern; release with [`ppc_string_free`].
 *
 * # Safety
 * `p` must be a live handle from this library, or null.
 */
char *ppc_pattern_format(const PpcPattern *p);

/**
 * The pattern with every adjacency restriction and mark dropped.
 *
 * # Safety
 * `p` must be a live handle from this library, or null.
 */
PpcPattern *ppc_pattern_classical(const PpcPattern *p);

/**
 * Number of copies of the pattern in the partition.
 *
 * # Safety
 * `sigma` and `pattern` must be live handles and `out` a valid pointer.
 */
PpcStatus ppc_count_copies(const PpcPartition *sigma, const PpcPattern *pattern, uint64_t *out);

/**
 * Whether the partition contains the pattern.
 *
 * # Safety
 * `sigma` and `pattern` must be live handles and `out` a valid pointer.
 */
PpcStatus ppc_contains(const PpcPartition *sigma, const PpcPattern *pattern, bool *out);

/**
 * A named statistic of the partition; `name` is e.g. `"inv"`, `"maj"`,
 * `"cr"`, `"cr_3"`.
 *
 * # Safety
 * `sigma` must be a live handle, `name` a valid NUL-terminated string, and
 * `out` a valid pointer.
 */
PpcStatus ppc_stat(const PpcPartition *sigma, const char *name, uint64_t *out);

/**
 * Number of partitions of `[n]` avoiding every pattern in the
 * `';'`-separated list, as a decimal string (release with
 * [`ppc_string_free`]).
 *
 * # Safety
 * `patterns` must be a valid NUL-terminated string and `out` a valid
 * pointer.
 */
PpcStatus ppc_count_avoiders(uint32_t n, const char *patterns, char **out);

/**
 * Even and odd avoider counts, as decimal strings.
 *
 * # Safety
 * `patterns` must be a valid NUL-terminated string; `out_even` and
 * `out_odd` must be valid pointers.
 */
PpcStatus ppc_parity_counts(uint32_t n, const char *patterns, char **out_even, char **out_odd);

/**
 * The counting sequences for the barred pattern classes: `kind` is `'a'`
 * (avoiders of `1,2|3`) or `'b'` (avoiders of `{123, 1,2|3}`); decimal
 * string out.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
PpcStatus ppc_gen_sequence(char kind, uint32_t n, char **out);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be a string returned by this library, not yet freed, or null.
 */
void ppc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PARTITION_PATTERNS_H */
