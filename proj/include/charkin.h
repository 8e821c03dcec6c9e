/* charkin — phase-space characteristic-function dynamics engine.
 *
 * C interface to the shared library: opaque handles, integer status codes,
 * thread-local error messages. The CLI is built entirely on this surface.
 */
#ifndef CHARKIN_H
#define CHARKIN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chk_status {
  CHK_OK = 0,
  CHK_ERR_NUMERIC = 1, /* numerical failure (monitor breach, tolerance) */
  CHK_ERR_CONFIG = 2,  /* invalid configuration, arguments, or files */
  CHK_ERR_INTERNAL = 3
} chk_status;

typedef enum chk_ordering {
  CHK_ORDER_NORMAL = 0,
  CHK_ORDER_SYMMETRIC = 1,
  CHK_ORDER_ANTINORMAL = 2,
  CHK_ORDER_CLASSICAL = 3
} chk_ordering;

typedef enum chk_rhs_method {
  CHK_RHS_QUADRATURE = 0,
  CHK_RHS_DISTRIBUTIONAL = 1,
  CHK_RHS_STAR_PRODUCT = 2
} chk_rhs_method;

typedef enum chk_state_kind {
  CHK_STATE_COHERENT = 0,
  CHK_STATE_FOCK = 1,
  CHK_STATE_THERMAL = 2,
  CHK_STATE_CAT = 3
} chk_state_kind;

typedef struct chk_state_spec {
  int32_t kind; /* chk_state_kind */
  double alpha_re, alpha_im;
  uint32_t n;
  double nbar;
  double phase;
} chk_state_spec;

typedef struct chk_grid chk_grid;
typedef struct chk_field chk_field;
typedef struct chk_ham chk_ham;

const char* chk_version(void);
/* Message for the last failure on this thread (empty string when none). */
const char* chk_last_error(void);
/* Worker threads for parallel loops (0 = hardware default). */
void chk_set_threads(int32_t n);

/* --- grids ------------------------------------------------------------- */

chk_status chk_grid_create(uint32_t dims, const uint32_t* points, const double* extent_lambda,
                           const double* extent_mu, double hbar, double omega, chk_grid** out);
void chk_grid_destroy(chk_grid* g);
chk_status chk_grid_info(const chk_grid* g, uint32_t* dims, uint32_t* points, double* hbar,
                         double* omega);

/* --- fields ------------------------------------------------------------ */

chk_status chk_field_from_state(const chk_grid* g, const chk_state_spec* spec, int32_t ordering,
                                uint32_t fock_n_max, chk_field** out);
void chk_field_destroy(chk_field* f);
chk_status chk_field_ordering(const chk_field* f, int32_t* ordering);
/* Borrowed view of the interleaved (re, im) samples. */
chk_status chk_field_data(const chk_field* f, const double** interleaved, size_t* count);
chk_status chk_field_convert_ordering(const chk_field* f, int32_t target, chk_field** out);
chk_status chk_field_invariants(const chk_field* f, double* norm_defect, double* herm_defect,
                                double* bound_violation);
chk_status chk_field_moment(const chk_field* f, uint32_t m, uint32_t n, double* re, double* im);
chk_status chk_field_save(const chk_field* f, const char* path);
chk_status chk_field_load(const char* path, chk_field** out);

/* --- Hamiltonians ------------------------------------------------------ */

/* Normal-ordered ladder terms; per term `dims` entries in dag/ann. */
chk_status chk_ham_create(uint32_t dims, uint32_t n_terms, const uint32_t* dag,
                          const uint32_t* ann, const double* c_re, const double* c_im,
                          chk_ham** out);
void chk_ham_destroy(chk_ham* h);

/* --- dynamics ----------------------------------------------------------- */

/* dC/dt at t = 0; kernel kind follows the field ordering. grid_symbol_n_max
 * sets the truncation of the grid-sampled symbol (quadrature/star methods). */
chk_status chk_rhs_eval(const chk_field* state, const chk_ham* h, int32_t method,
                        uint32_t grid_symbol_n_max, chk_field** out);

chk_status chk_evolve_field(const chk_field* state, const chk_ham* h, int32_t method,
                            uint32_t grid_symbol_n_max, double dt, double t_final,
                            uint32_t monitor_every, double monitor_tol, chk_field** out);

/* --- runner entry points (config-driven, used by the CLI) ---------------- */

chk_status chk_run_evolve(const char* config_path, const char* out_dir);
chk_status chk_run_compare(const char* dir_a, const char* dir_b, const char* out_csv);
chk_status chk_run_hbar_scan(const char* config_path, const char* out_csv);
chk_status chk_run_oracle_check(const char* config_path, const char* report_path);
chk_status chk_run_convert(const char* in_path, const char* out_path, const char* format);

#ifdef __cplusplus
}
#endif

#endif /* CHARKIN_H */
