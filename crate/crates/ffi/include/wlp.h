#ifndef WLP_FFI_H
#define WLP_FFI_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WlpMethod {
  WLP_METHOD_CRITERION = 0,
  WLP_METHOD_BRUTEFORCE = 1,
  WLP_METHOD_HAN = 2,
  WLP_METHOD_CHAR2 = 3,
} WlpMethod;

typedef enum WlpStatus {
  WLP_STATUS_OK = 0,
  WLP_STATUS_NULL_POINTER = 1,
  WLP_STATUS_INVALID_ARGUMENT = 2,
  WLP_STATUS_NOT_PRIME = 3,
  WLP_STATUS_DEGENERATE = 4,
  WLP_STATUS_PRECONDITION = 5,
  WLP_STATUS_OVERFLOW = 6,
  WLP_STATUS_WRONG_WITNESS = 7,
  WLP_STATUS_PANIC = 8,
} WlpStatus;

typedef enum WlpWitnessKind {
  WLP_WITNESS_KIND_NONE = 0,
  WLP_WITNESS_KIND_CRITERION = 1,
  WLP_WITNESS_KIND_FAILING_DEGREE = 2,
  WLP_WITNESS_KIND_CLOSED_FORM = 3,
} WlpWitnessKind;

/**
 * Opaque list of primes.
 */
typedef struct WlpPrimeList WlpPrimeList;

/**
 * Opaque verdict handle.
 */
typedef struct WlpVerdict WlpVerdict;

typedef struct WlpGapCertificate {
  uint64_t d1;
  uint64_t d2;
  uint64_t d3;
  uint64_t p;
  uint64_t alpha;
  uint64_t beta;
  uint64_t delta;
} WlpGapCertificate;

/**
 * `has_witness == false` means no `s <= 0` qualified and `delta_star == 0`;
 * the `s`, `u*` and `m_numerator` fields are then zero.
 */
typedef struct WlpHanCertificate {
  uint64_t v1;
  uint64_t v2;
  uint64_t v3;
  uint64_t p;
  bool has_witness;
  int64_t s;
  uint64_t u1;
  uint64_t u2;
  uint64_t u3;
  uint64_t m_numerator;
  uint64_t delta_star;
} WlpHanCertificate;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version, NUL-terminated, static.
 */
const char *wlp_version(void);

/**
 * Static description of a status code.
 */
const char *wlp_status_message(enum WlpStatus status);

bool wlp_is_prime(uint64_t n);

/**
 * Decides WLP of `K[X,Y,Z]/(X^d,Y^d,Z^d)` in characteristic `p`. With
 * `WLP_METHOD_CHAR2`, `p` must be 2; `WLP_METHOD_BRUTEFORCE` accepts
 * `d <= 60`. On error `*out` is set to NULL.
 */
enum WlpStatus wlp_decide(uint64_t d, uint64_t p, enum WlpMethod method, struct WlpVerdict **out);

void wlp_verdict_free(struct WlpVerdict *verdict);

/**
 * `false` for a null handle.
 */
bool wlp_verdict_holds(const struct WlpVerdict *verdict);

enum WlpWitnessKind wlp_verdict_witness_kind(const struct WlpVerdict *verdict);

/**
 * The `(n, k)` pair of a criterion witness.
 */
enum WlpStatus wlp_verdict_criterion(const struct WlpVerdict *verdict,
                                     uint32_t *out_n,
                                     uint64_t *out_k);

enum WlpStatus wlp_verdict_failing_degree(const struct WlpVerdict *verdict,
                                          uint64_t *out_degree,
                                          uint64_t *out_rank,
                                          uint64_t *out_max_rank);

enum WlpStatus wlp_verdict_closed_form(const struct WlpVerdict *verdict, uint32_t *out_t);

/**
 * Exceptional primes of `d`, ascending.
 */
enum WlpStatus wlp_exceptional_primes(uint64_t d, struct WlpPrimeList **out);

size_t wlp_prime_list_len(const struct WlpPrimeList *list);

/**
 * Element `index`, or 0 when out of range.
 */
uint64_t wlp_prime_list_get(const struct WlpPrimeList *list, size_t index);

void wlp_prime_list_free(struct WlpPrimeList *list);

enum WlpStatus wlp_gap_oracle(uint64_t d1,
                              uint64_t d2,
                              uint64_t d3,
                              uint64_t p,
                              struct WlpGapCertificate *out);

enum WlpStatus wlp_delta_star_han(uint64_t v1,
                                  uint64_t v2,
                                  uint64_t v3,
                                  uint64_t p,
                                  struct WlpHanCertificate *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WLP_FFI_H */
