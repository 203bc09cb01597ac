#ifndef GRADED_ORBITS_H
#define GRADED_ORBITS_H

/* C interface of the graded-orbits shared library.
 *
 * All functions returning strings allocate them with the library's
 * allocator; release them with go_string_free. All entry points are
 * exception-safe: errors surface only through the status codes.
 *
 * Families:
 *   "even-sp"         symplectic group, grading over the odd integers
 *   "even-so"         special orthogonal group, odd integers
 *   "odd-sp"          symplectic group, even integers
 *   "odd-o"           full orthogonal group, even integers
 *   "odd-so-special"  special orthogonal group, even integers
 *
 * The delta array lists the graded dimensions of the positive side, highest
 * index first: m entries ending at delta_1 (even families) or at delta_0
 * (odd families). Every entry must be >= 1.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct go_context go_context;

typedef enum {
  GO_OK = 0,
  GO_ERR_USAGE = 1,    /* invalid family, m or delta */
  GO_ERR_BAD_INPUT = 2, /* malformed or inconsistent tableau input */
  GO_ERR_VERIFY = 3,   /* an internal cross-check failed */
  GO_ERR_RANGE = 4,    /* orbit index out of range */
  GO_ERR_INTERNAL = 5
} go_status;

const char* go_status_message(go_status status);

go_status go_context_create(const char* family, int m, const long long* delta,
                            size_t delta_len, go_context** out);
void go_context_free(go_context* ctx);

go_status go_orbit_count(const go_context* ctx, long long* out);

/* Full enumeration: one record per orbit, dimension descending. */
go_status go_enumerate_json(const go_context* ctx, char** out);
go_status go_enumerate_tsv(const go_context* ctx, char** out);

/* Closure order as a DOT digraph of covering relations. */
go_status go_hasse_dot(const go_context* ctx, char** out);

/* Deep report for the orbit at the given enumeration index, with oracle
 * cross-checks; dump_matrices != 0 adds the realization matrices. */
go_status go_orbit_report_json(const go_context* ctx, long long index,
                               int dump_matrices, char** out);

/* Deep report for the orbit with the given tableau (JSON, as emitted in the
 * enumeration records). half is NULL or "" for an unsplit orbit, otherwise
 * "prime" or "doubleprime". */
go_status go_orbit_report_for_tableau(const go_context* ctx, const char* tableau_json,
                                      const char* half, int dump_matrices, char** out);

/* Invariant and oracle sweep over every admissible input with m <= max_m
 * and total dimension <= max_total_dim. Returns GO_OK when everything
 * passes, GO_ERR_VERIFY otherwise; *summary receives a human-readable log
 * either way. */
go_status go_verify(int max_m, long long max_total_dim, char** summary);

void go_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
