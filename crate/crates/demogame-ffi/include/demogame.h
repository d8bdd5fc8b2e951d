#ifndef DEMOGAME_H
#define DEMOGAME_H

/* Generated by cbindgen from demogame-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes returned by every fallible function.
typedef enum DgStatus {
  // Success.
  DG_STATUS_OK = 0,
  // A pointer was NULL, a string was not valid UTF-8, or an output
  // buffer was missing.
  DG_STATUS_INVALID_ARGUMENT = 1,
  // The scenario document could not be parsed.
  DG_STATUS_PARSE_ERROR = 2,
  // The scenario document parsed but violated a domain invariant.
  DG_STATUS_VALIDATION_ERROR = 3,
  // A projection or game computation failed.
  DG_STATUS_DOMAIN_ERROR = 4,
  // A named country, action, or profile does not exist.
  DG_STATUS_NOT_FOUND = 5,
  // The eigen iteration hit its iteration cap.
  DG_STATUS_NO_CONVERGENCE = 6,
} DgStatus;

// Opaque scenario handle.
typedef struct DgScenario DgScenario;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread. The pointer is
// valid until the next failing call on the same thread. Never NULL.
const char *dg_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *dg_version(void);

// Creates the built-in two-country example scenario.
//
// # Safety
// `out` must point to writable storage for one pointer. The result
// must be released with [`dg_scenario_free`].
enum DgStatus dg_scenario_builtin_paper(struct DgScenario **out);

// Parses a scenario document (UTF-8 JSON).
//
// # Safety
// `json` must be a NUL-terminated string; `out` must point to writable
// storage for one pointer. The result must be released with
// [`dg_scenario_free`].
enum DgStatus dg_scenario_from_json(const char *json, struct DgScenario **out);

// Writes the canonical JSON form of a scenario.
//
// # Safety
// `scenario` must be a live handle from this library; `out` must point
// to writable storage for one pointer. Free the string with
// [`dg_string_free`].
enum DgStatus dg_scenario_to_json(const struct DgScenario *scenario, char **out);

// Releases a scenario handle. NULL is ignored.
//
// # Safety
// `scenario` must be NULL or a pointer previously returned by a
// scenario constructor of this library, not yet freed.
void dg_scenario_free(struct DgScenario *scenario);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `text` must be NULL or a pointer previously written by this library
// through a string out-parameter, not yet freed.
void dg_string_free(char *text);

// Both countries' payoffs under a joint profile such as `"S,I"`
// (comma-separated action labels in country declaration order).
//
// # Safety
// `scenario` must be a live handle; `profile` a NUL-terminated string;
// `payoff_a` and `payoff_b` must point to writable doubles.
enum DgStatus dg_profile_payoffs(const struct DgScenario *scenario,
                                 const char *profile,
                                 double *payoff_a,
                                 double *payoff_b);

// Projects one country under a fixed profile and writes the trajectory
// as CSV (`t,class_1,…,class_k,total`). `clamp` non-zero floors
// negative counts at zero.
//
// # Safety
// `scenario` must be a live handle; `country` and `profile`
// NUL-terminated strings; `out` writable storage for one pointer. Free
// the string with [`dg_string_free`].
enum DgStatus dg_project_csv(const struct DgScenario *scenario,
                             const char *country,
                             const char *profile,
                             uint32_t steps,
                             int clamp,
                             char **out);

// Writes the sequential-game payoff table for the given leader as CSV
// (`markdown` non-zero selects a Markdown pipe table instead).
//
// # Safety
// Same pointer contracts as [`dg_project_csv`].
enum DgStatus dg_sequential_table(const struct DgScenario *scenario,
                                  const char *leader,
                                  int markdown,
                                  char **out);

// Writes the pure Nash equilibria of the sequential game for `leader`,
// or of the simultaneous game when `leader` is NULL, one cell per
// line.
//
// # Safety
// `scenario` must be a live handle; `leader` NULL or NUL-terminated;
// `out` writable storage for one pointer. Free with
// [`dg_string_free`].
enum DgStatus dg_pure_nash(const struct DgScenario *scenario, const char *leader, char **out);

// Writes the backward-induction outcome when `first` moves first, in
// the same plain-text format as the CLI.
//
// # Safety
// Same pointer contracts as [`dg_sequential_table`].
enum DgStatus dg_backward_induction(const struct DgScenario *scenario,
                                    const char *first,
                                    char **out);

// Writes the sequential game tree as DOT source.
//
// # Safety
// Same pointer contracts as [`dg_sequential_table`].
enum DgStatus dg_game_tree_dot(const struct DgScenario *scenario, const char *leader, char **out);

// Dominant eigenvalue and stable age distribution of a Leslie matrix
// given as raw arrays: `fertilities` has `classes` entries and
// `survivals` has `classes - 1`. On success writes `lambda`, the
// distribution into `stable` (length `classes`), the iteration count,
// and the final residual; `iterations` and `residual` may be NULL.
//
// # Safety
// `fertilities` must point to `classes` readable doubles, `survivals`
// to `classes - 1` (ignored when `classes` is 1), `lambda` and
// `stable` to writable storage of one and `classes` doubles.
enum DgStatus dg_dominant_eigen(const double *fertilities,
                                size_t classes,
                                const double *survivals,
                                double tol,
                                size_t max_iter,
                                double *lambda,
                                double *stable,
                                size_t *iterations,
                                double *residual);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DEMOGAME_H */
