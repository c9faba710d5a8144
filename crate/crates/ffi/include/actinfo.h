#ifndef ACTINFO_H
#define ACTINFO_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AiExtKind {
  AI_EXT_KIND_FINITE = 0,
  AI_EXT_KIND_POS_INF = 1,
  AI_EXT_KIND_NEG_INF = 2,
  AI_EXT_KIND_UNDEFINED = 3,
} AiExtKind;

typedef enum AiRegime {
  AI_REGIME_HARMFUL_TO_TARGET = 0,
  AI_REGIME_MILD_KNOWLEDGE = 1,
  AI_REGIME_STRONG_KNOWLEDGE = 2,
  AI_REGIME_BOUNDARY_EQUAL = 3,
  AI_REGIME_BOUNDARY_MIRROR = 4,
} AiRegime;

/**
 * Result code of every fallible call.
 */
typedef enum AiStatus {
  AI_STATUS_OK = 0,
  AI_STATUS_NULL_POINTER = 1,
  /**
   * Masses are negative, non-finite or do not sum to 1.
   */
  AI_STATUS_INVALID_DISTRIBUTION = 2,
  /**
   * An index is out of bounds or repeated.
   */
  AI_STATUS_INVALID_EVENT = 3,
  /**
   * Two distributions are over different outcome spaces.
   */
  AI_STATUS_SPACE_MISMATCH = 4,
  /**
   * A probability, base or regime parameter is out of its range.
   */
  AI_STATUS_OUT_OF_RANGE = 5,
  /**
   * The caller's buffer cannot hold the result.
   */
  AI_STATUS_BUFFER_TOO_SMALL = 6,
  AI_STATUS_INVALID_ARGUMENT = 7,
  /**
   * A panic was caught at the boundary.
   */
  AI_STATUS_PANIC = 8,
} AiStatus;

/**
 * Opaque distribution handle.
 */
typedef struct AiDistribution AiDistribution;

/**
 * Extended real; `value` is meaningful only when `kind` is `AI_EXT_KIND_FINITE`.
 */
typedef struct AiExtReal {
  enum AiExtKind kind;
  double value;
} AiExtReal;

typedef struct AiRegimeReport {
  double p;
  double q;
  enum AiRegime regime;
  struct AiExtReal active_info;
  struct AiExtReal cai_coarsened;
} AiRegimeReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a distribution over outcomes `0..len` from `len` masses.
 *
 * # Safety
 * `probs` must point to `len` readable doubles; `out` must be writable.
 */
enum AiStatus ai_distribution_new(const double *probs, size_t len, struct AiDistribution **out);

/**
 * Creates the uniform distribution on `n` outcomes.
 *
 * # Safety
 * `out` must be writable.
 */
enum AiStatus ai_distribution_uniform(size_t n, struct AiDistribution **out);

/**
 * Creates Ber(p) on outcomes {0, 1}.
 *
 * # Safety
 * `out` must be writable.
 */
enum AiStatus ai_distribution_bernoulli(double p, struct AiDistribution **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `handle` must come from an `ai_distribution_*` constructor and not be used afterwards.
 */
void ai_distribution_free(struct AiDistribution *handle);

/**
 * Number of outcomes, or 0 for a null handle.
 *
 * # Safety
 * `handle` must be null or valid.
 */
size_t ai_distribution_len(const struct AiDistribution *handle);

/**
 * Copies the masses into `buf`. Fails with `AI_STATUS_BUFFER_TOO_SMALL`
 * when `cap` is less than the number of outcomes.
 *
 * # Safety
 * `buf` must point to `cap` writable doubles.
 */
enum AiStatus ai_distribution_probs(const struct AiDistribution *handle, double *buf, size_t cap);

/**
 * `P(T)` for the event given by `indices`.
 *
 * # Safety
 * `indices` must point to `len` readable values; `out` must be writable.
 */
enum AiStatus ai_event_probability(const struct AiDistribution *handle,
                                   const size_t *indices,
                                   size_t len,
                                   double *out);

/**
 * Self-information `−log P(T)`.
 *
 * # Safety
 * As [`ai_event_probability`].
 */
enum AiStatus ai_self_information(const struct AiDistribution *handle,
                                  const size_t *indices,
                                  size_t len,
                                  double log_base,
                                  struct AiExtReal *out);

/**
 * Active information `log[P2(T) / P1(T)]`.
 *
 * # Safety
 * Handles must be valid; `indices` must point to `len` readable values; `out` must be writable.
 */
enum AiStatus ai_active_information(const struct AiDistribution *p1,
                                    const struct AiDistribution *p2,
                                    const size_t *indices,
                                    size_t len,
                                    double log_base,
                                    struct AiExtReal *out);

/**
 * Shannon entropy.
 *
 * # Safety
 * `handle` must be valid; `out` must be writable.
 */
enum AiStatus ai_entropy(const struct AiDistribution *handle, double log_base, double *out);

/**
 * Total information `Σ −log p(x)`; `+inf` when some outcome has zero mass.
 *
 * # Safety
 * `handle` must be valid; `out` must be writable.
 */
enum AiStatus ai_total_information(const struct AiDistribution *handle,
                                   double log_base,
                                   struct AiExtReal *out);

/**
 * Conserved active information `Σ log[p1(x) / p2(x)]`.
 *
 * # Safety
 * Handles must be valid; `out` must be writable.
 */
enum AiStatus ai_conserved_active_information(const struct AiDistribution *p1,
                                              const struct AiDistribution *p2,
                                              double log_base,
                                              struct AiExtReal *out);

/**
 * Conserved active information of the two laws coarsened onto `{T, Tᶜ}`.
 *
 * # Safety
 * As [`ai_active_information`].
 */
enum AiStatus ai_coarsened_cai(const struct AiDistribution *p1,
                               const struct AiDistribution *p2,
                               const size_t *indices,
                               size_t len,
                               double log_base,
                               struct AiExtReal *out);

/**
 * `KL(Pa ‖ Pb)`.
 *
 * # Safety
 * Handles must be valid; `out` must be writable.
 */
enum AiStatus ai_kl_divergence(const struct AiDistribution *pa,
                               const struct AiDistribution *pb,
                               double log_base,
                               struct AiExtReal *out);

/**
 * Total variation distance.
 *
 * # Safety
 * Handles must be valid; `out` must be writable.
 */
enum AiStatus ai_total_variation(const struct AiDistribution *p1,
                                 const struct AiDistribution *p2,
                                 double *out);

/**
 * Pinsker's bound `√(KL(P2 ‖ P1) / 2)`, KL in nats.
 *
 * # Safety
 * Handles must be valid; `out` must be writable.
 */
enum AiStatus ai_pinsker_bound(const struct AiDistribution *p1,
                               const struct AiDistribution *p2,
                               struct AiExtReal *out);

/**
 * Regime of `(p, q)` with `0 < p < 1/2`, `0 ≤ q ≤ 1`.
 *
 * # Safety
 * `out` must be writable.
 */
enum AiStatus ai_classify_regime(double p, double q, enum AiRegime *out);

/**
 * Regime together with `I⁺ = log(q/p)` and the binary conserved active information.
 *
 * # Safety
 * `out` must be writable.
 */
enum AiStatus ai_regime_report(double p, double q, double log_base, struct AiRegimeReport *out);

/**
 * Static, NUL-terminated interpretation of a regime.
 */
const char *ai_regime_interpretation(enum AiRegime regime);

/**
 * Message of the last failed call on this thread; empty after a success.
 * Valid until the next call on the same thread.
 */
const char *ai_last_error_message(void);

/**
 * Library version, NUL-terminated and static.
 */
const char *ai_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ACTINFO_H */
