/* sigma_lab.h — C API of the sigma-lab shared library.
 *
 * A verification laboratory for finite spaces (families of opens closed
 * under union and intersection, with {} and X): classification of separation
 * axioms and generalized set classes, exhaustive enumeration, an executable
 * theorem registry, counterexample search over a property language, and a
 * symbolic catalog of infinite example spaces.
 *
 * All functions return a slab_status; report and error strings are heap
 * allocated and must be released with slab_string_free. Reports for
 * identical inputs are byte-identical across runs and worker counts.
 */

#ifndef SIGMA_LAB_H
#define SIGMA_LAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slab_status {
  SLAB_OK = 0,
  /* a registered law or catalog claim failed; the report carries details */
  SLAB_CHECK_FAILED = 1,
  /* input problems */
  SLAB_ERR_PARSE = 10,
  SLAB_ERR_VALIDATION = 11,
  SLAB_ERR_TOO_LARGE = 12,
  SLAB_ERR_UNKNOWN_LAW = 13,
  SLAB_ERR_UNKNOWN_CLAIM = 14,
  SLAB_ERR_USAGE = 15,
  SLAB_ERR_INTERNAL = 20,
} slab_status;

typedef enum slab_format {
  SLAB_FORMAT_HUMAN = 0,
  SLAB_FORMAT_JSON = 1,
} slab_format;

/* Opaque handle for a validated space. */
typedef struct slab_space slab_space;

const char* slab_version(void);
const char* slab_status_name(slab_status status);
void slab_string_free(char* s);

/* Parses a .space JSON document ({"points": [...], "opens": [[...], ...]});
 * the empty and full set may be omitted from opens. */
slab_status slab_space_parse(const char* text, slab_space** out, char** error);
slab_status slab_space_read(const char* path, slab_space** out, char** error);
void slab_space_free(slab_space* space);

/* Axiom report for a space; include_sets adds the per-subset class table. */
slab_status slab_classify(const slab_space* space, int include_sets, slab_format format,
                          char** report, char** error);

/* Counts or lists all spaces on `points` labeled points (brute-force-checked
 * enumerator up to 4 points, fast enumerator up to 6). */
slab_status slab_enumerate(unsigned points, int up_to_iso, int count_only, slab_format format,
                           char** report, char** error);

/* Runs the law registry (or one law) over every space with up to max_points
 * points (max 5). threads == 0 uses SIGMA_LAB_THREADS or the hardware
 * default. Returns SLAB_CHECK_FAILED when any law fails. */
slab_status slab_verify(unsigned max_points, const char* law_id, unsigned threads,
                        slab_format format, char** report, char** error);

/* Finds the smallest space (fewest points, canonically first) satisfying a
 * boolean property over the axiom atoms T0 T1 R0 WR0 SS TW TW4 T3W8 T5W8 CEQ
 * with ! & | and parentheses. */
slab_status slab_search(const char* property, unsigned max_points, unsigned threads,
                        slab_format format, char** report, char** error);

/* Runs all catalog claims, or one claim by id (e.g. "EX-5.10"). Returns
 * SLAB_CHECK_FAILED when any claim fails. */
slab_status slab_catalog(const char* claim_id, slab_format format, char** report, char** error);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SIGMA_LAB_H */
