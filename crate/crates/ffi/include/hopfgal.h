#ifndef HOPFGAL_H
#define HOPFGAL_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. The first four match the exit codes of the command-line
 * tool.
 */
typedef enum HgStatus {
  HG_STATUS_OK = 0,
  /**
   * A precondition or verification failed.
   */
  HG_STATUS_MISMATCH = 1,
  /**
   * Malformed or inconsistent input.
   */
  HG_STATUS_INVALID_INPUT = 2,
  /**
   * A resource bound was exceeded.
   */
  HG_STATUS_RESOURCE = 3,
  HG_STATUS_NULL_POINTER = 4,
  HG_STATUS_INVALID_UTF8 = 5,
  HG_STATUS_PANIC = 6,
} HgStatus;

/**
 * An algebra with an action or coaction of a Hopf algebra.
 */
typedef struct HgExtension HgExtension;

/**
 * A verified finite-dimensional Hopf algebra.
 */
typedef struct HgHopf HgHopf;

/**
 * Verdicts of the extension classifier over a field.
 */
typedef struct HgExtensionSummary {
  size_t dim_s;
  size_t dim_h;
  size_t invariants_dim;
  size_t homology_dim;
  bool faithful;
  bool tame;
  bool hopf_galois;
} HgExtensionSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or null. Owned by
 * the library and valid until the next call on this thread.
 */
const char *hg_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void hg_string_free(char *s);

/**
 * Loads and verifies a Hopf algebra file.
 *
 * # Safety
 * `path` must be a nul-terminated string and `out_hopf` a valid pointer.
 */
enum HgStatus hg_hopf_load(const char *path, struct HgHopf **out_hopf);

/**
 * Parses and verifies a Hopf algebra from JSON text.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out_hopf` a valid pointer.
 */
enum HgStatus hg_hopf_parse(const char *json, struct HgHopf **out_hopf);

/**
 * # Safety
 * `h` must be null or a handle from this library, not yet freed.
 */
void hg_hopf_free(struct HgHopf *h);

/**
 * # Safety
 * `h` must be a live handle and `dim` a valid pointer.
 */
enum HgStatus hg_hopf_dim(const struct HgHopf *h, size_t *dim);

/**
 * The dual Hopf algebra as a new handle.
 *
 * # Safety
 * `h` must be a live handle and `out_dual` a valid pointer.
 */
enum HgStatus hg_hopf_dual(const struct HgHopf *h, struct HgHopf **out_dual);

/**
 * A generator of the left integrals, formatted in the basis labels.
 *
 * # Safety
 * `h` must be a live handle and `integral` a valid pointer; the string
 * is released with `hg_string_free`.
 */
enum HgStatus hg_hopf_left_integral(const struct HgHopf *h, char **integral);

/**
 * # Safety
 * `h` must be a live handle and `semisimple` a valid pointer.
 */
enum HgStatus hg_hopf_is_semisimple(const struct HgHopf *h, bool *semisimple);

/**
 * Loads an extension file.
 *
 * # Safety
 * `path` must be a nul-terminated string and `out_ext` a valid pointer.
 */
enum HgStatus hg_extension_load(const char *path, struct HgExtension **out_ext);

/**
 * Parses an extension from JSON text.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out_ext` a valid pointer.
 */
enum HgStatus hg_extension_parse(const char *json, struct HgExtension **out_ext);

/**
 * # Safety
 * `e` must be null or a handle from this library, not yet freed.
 */
void hg_extension_free(struct HgExtension *e);

/**
 * Classifies an extension given by an action.
 *
 * # Safety
 * `e` must be a live handle and `summary` a valid pointer.
 */
enum HgStatus hg_extension_classify(const struct HgExtension *e,
                                    struct HgExtensionSummary *summary);

/**
 * The classification as a string such as `tame and Hopf-Galois`.
 *
 * # Safety
 * `e` must be a live handle and `label` a valid pointer; the string is
 * released with `hg_string_free`.
 */
enum HgStatus hg_extension_classification(const struct HgExtension *e, char **label);

/**
 * Runs the command-line tool on `argv` (without the program name) and
 * returns the rendered report and its exit code. The call itself
 * succeeds whenever the arguments are readable.
 *
 * # Safety
 * `argv` must point to `argc` nul-terminated strings; `report` and
 * `exit_code` must be valid pointers.
 */
enum HgStatus hg_cli_run(int argc, const char *const *argv, char **report, int *exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPFGAL_H */
