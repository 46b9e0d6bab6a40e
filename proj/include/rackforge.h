/* rackforge C API: finite quandles, rack/cubical/simplicial homology,
 * Poincare-series rank extraction, chain-map verification, cocycle
 * trivialization.
 *
 * Conventions:
 *  - Every fallible call returns rf_status; RF_OK is 0. On failure,
 *    rf_last_error() returns a thread-local human-readable message.
 *  - Output strings (char**) are heap-allocated; release with
 *    rf_string_free. They are NUL-terminated UTF-8.
 *  - Handles are opaque; release with the matching _free call.
 */
#ifndef RACKFORGE_H
#define RACKFORGE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rf_status {
    RF_OK = 0,
    RF_ERR_AXIOM_Q1 = 1,  /* x<|x != x */
    RF_ERR_AXIOM_Q2 = 2,  /* some column is not a bijection */
    RF_ERR_AXIOM_Q3 = 3,  /* self-distributivity fails */
    RF_ERR_BAD_UNIT = 4,  /* alexander parameter not a unit mod N */
    RF_ERR_PARSE = 5,
    RF_ERR_IO = 6,
    RF_ERR_TOO_LARGE = 7,
    RF_ERR_OUT_OF_RANGE = 8,
    RF_ERR_NOT_A_COMPLEX = 9,
    RF_ERR_NEGATIVE_RANK = 10,
    RF_ERR_NON_UNIT_CONSTANT_TERM = 11,
    RF_ERR_NOT_COINVARIANT = 12,
    RF_ERR_NOT_A_COCYCLE = 13,
    RF_ERR_NOT_HOMOGENEOUS = 14,
    RF_ERR_NO_CONSISTENT_SIGNS = 15,
    RF_ERR_INVALID = 16
} rf_status;

typedef struct rf_quandle rf_quandle;

/* Library version string, static storage. */
const char* rf_version(void);
/* Message for the last failing call on this thread; static storage, valid
 * until the next failing call. */
const char* rf_last_error(void);
/* Frees a string returned through a char** parameter. NULL is a no-op. */
void rf_string_free(char* s);

/* Descriptors: trivial:n, dihedral:n, alexander:N:w, table:<path>. */
rf_status rf_quandle_parse(const char* descriptor, rf_quandle** out);
/* Plain-text table file: first non-comment line n, then n rows of n
 * integers in 0..n-1; '#' starts a comment line. */
rf_status rf_quandle_from_file(const char* path, rf_quandle** out);
/* table is row-major n*n, table[x*n+y] = x<|y. */
rf_status rf_quandle_from_table(const int* table, int n, rf_quandle** out);
void rf_quandle_free(rf_quandle* q);

int rf_quandle_size(const rf_quandle* q);
/* Return -1 when an argument is outside 0..n-1. */
int rf_quandle_op(const rf_quandle* q, int x, int y);
int rf_quandle_inv_op(const rf_quandle* q, int x, int y);
rf_status rf_quandle_is_connected(const rf_quandle* q, int* out);
rf_status rf_quandle_is_left_homogeneous(const rf_quandle* q, int* out);
rf_status rf_quandle_type(const rf_quandle* q, int* out);
rf_status rf_quandle_orbit_count(const rf_quandle* q, int* out);
/* Order of the group generated by the right translations. */
rf_status rf_quandle_inner_order(const rf_quandle* q, long long* out);

/* {"quandle": descriptor, "degree": n, "betti": b, "torsion": [d1, ...]} */
rf_status rf_homology_json(const rf_quandle* q, int degree, char** out);

/* betti_csv like "1,0,1"; TSV with header "k\trank" and rows k = 1..depth. */
rf_status rf_ranks_tsv(const char* betti_csv, int depth, char** out);

/* Per-degree simplex counts of the triangulated rack space. */
rf_status rf_triangulate_summary(const rf_quandle* q, int truncate, char** out);
/* Compares homology of the truncated rack space against its triangulation
 * for degrees 0..truncate-2. *ok is 1 on agreement. */
rf_status rf_triangulate_compare(const rf_quandle* q, int truncate, int* ok, char** out);
/* JSON array over degrees 0..truncate: simplices (cell + partition) and the
 * face table of each degree. */
rf_status rf_delta_export_json(const rf_quandle* q, int truncate, char** out);

/* Per-degree chain-map verification report; exhaustive through degree 3,
 * then `seeded` random generators per degree. *ok is 1 when every degree
 * passes. */
rf_status rf_ik_verify_report(const rf_quandle* q, int max_degree, int basepoint, int seeded,
                              unsigned long long seed, int* ok, char** out);
/* cocycle_json maps comma-separated (q+1)-tuples over the quandle to
 * rational strings "p/q"; tuples are read up to the diagonal inner-group
 * action. Output holds the pulled-back rack cochain and its cocycle
 * status. */
rf_status rf_ik_pullback_json(const rf_quandle* q, const char* cocycle_json, int basepoint,
                              int* is_cocycle, char** out);

/* cocycle_json maps comma-separated degree-n tuples to rational strings;
 * absent tuples read as 0. Output {"c": constant, "g": cochain} with
 * f = c + delta(g) exactly. */
rf_status rf_trivialize_json(const rf_quandle* q, int degree, const char* cocycle_json,
                             char** out);
rf_status rf_cochain_is_cocycle(const rf_quandle* q, int degree, const char* cocycle_json,
                                int* ok);

/* Checks the coboundary of the determinant 2-cocycle of the plane quandle
 * x<|y = 2y-x vanishes on `samples` seeded rational triples. */
rf_status rf_det_cocycle_report(int samples, unsigned long long seed, int* ok, char** out);

#ifdef __cplusplus
}
#endif

#endif /* RACKFORGE_H */
