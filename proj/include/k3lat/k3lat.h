#ifndef K3LAT_H
#define K3LAT_H

/* C interface to the k3lat lattice/quadratic-form engine.
 *
 * All functions return a k3lat_status; results are returned through output
 * parameters. Strings allocated by the library must be released with
 * k3lat_string_free, lattice handles with k3lat_lattice_free. On failure
 * k3lat_last_error() describes the most recent error in the calling thread.
 * All numeric payloads in JSON output are exact (integers and fractions
 * rendered as strings).
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum k3lat_status {
    K3LAT_OK = 0,
    K3LAT_ERR_CHECK = 1,        /* a verification-style call found a failing check */
    K3LAT_ERR_INPUT = 2,        /* malformed input (JSON, names, coordinates) */
    K3LAT_ERR_PRECONDITION = 3, /* operation preconditions violated */
    K3LAT_ERR_INTERNAL = 4
} k3lat_status;

typedef struct k3lat_lattice k3lat_lattice; /* opaque */

const char* k3lat_last_error(void);
void k3lat_string_free(char* s);

/* lattices --------------------------------------------------------------- */

/* {"label": string, "gram": [[int,...],...]} */
k3lat_status k3lat_lattice_from_json(const char* json, k3lat_lattice** out);
/* "U", "U(2)", "A3", "D6", "E8", "<n>" and "+"-separated sums of these */
k3lat_status k3lat_lattice_standard(const char* name, k3lat_lattice** out);
void k3lat_lattice_free(k3lat_lattice* l);

k3lat_status k3lat_lattice_info_json(const k3lat_lattice* l, char** out_json);
k3lat_status k3lat_lattice_to_json(const k3lat_lattice* l, char** out_json);
k3lat_status k3lat_lattice_direct_sum(const k3lat_lattice* a, const k3lat_lattice* b,
                                      k3lat_lattice** out);
k3lat_status k3lat_lattice_rescale(const k3lat_lattice* l, long factor, k3lat_lattice** out);

/* discriminant forms ------------------------------------------------------ */

k3lat_status k3lat_disc_form_json(const k3lat_lattice* l, char** out_json);
k3lat_status k3lat_disc_orbits_json(const k3lat_lattice* l, char** out_json);

/* orbit classification in T = U^2 + <-1>^2 ------------------------------- */

/* basis is "e" (T coordinates) or "y" (Y coordinates) */
k3lat_status k3lat_orbit_classify_json(const char* coords_csv, const char* basis,
                                       char** out_json);
k3lat_status k3lat_orbit_table_json(int delta_max, char** out_json);

/* elliptic-fibration scenarios -------------------------------------------- */

k3lat_status k3lat_scenario_list_json(char** out_json);
/* all_pass receives 1 iff every check passed */
k3lat_status k3lat_scenario_verify_json(const char* name, char** out_json, int* all_pass);

/* group isomorphism phi: SU(2,2;Z[i]) -> SO(T)+ --------------------------- */

/* matrix JSON: 4x4 array of entries [re_num, re_den, im_num, im_den] */
k3lat_status k3lat_phi_json(const char* matrix_json, char** out_json);
k3lat_status k3lat_pfaffian_json(const char* y_csv, char** out_json);

/* quaternion algebras and Kuga-Satake ------------------------------------- */

k3lat_status k3lat_ks_json(long delta, char** out_json);
/* a and b are rationals written as "p" or "p/q" */
k3lat_status k3lat_quat_json(const char* a, const char* b, char** out_json);

/* symbolic verification of the explicit family ---------------------------- */

k3lat_status k3lat_symbolic_verify_d1_json(char** out_json, int* all_pass);

/* the full acceptance suite ------------------------------------------------ */

k3lat_status k3lat_selftest_json(char** out_json, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* K3LAT_H */
