/* SPDX-License-Identifier: Apache-2.0
 *
 * irsnoma — secrecy-performance analysis of an IRS-assisted NOMA downlink
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ------------------------------------------------------------------------
 *
 * C interface of the irsnoma shared library. All state lives behind the
 * opaque handles; every call returns a status code, with a thread-local
 * message available from irsn_last_error(). The worker-thread count of the
 * Monte-Carlo estimators is controlled by the IRSNOMA_THREADS environment
 * variable (0 or unset = hardware concurrency); results are bit-identical
 * for a fixed (config, trials, seed) regardless of that setting.
 */

#ifndef IRSNOMA_IRSNOMA_H
#define IRSNOMA_IRSNOMA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define IRSN_API __declspec(dllexport)
#else
#define IRSN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum irsn_status {
  IRSN_OK = 0,
  IRSN_ERR_ARGUMENT = 1,    /* bad call arguments / unknown name */
  IRSN_ERR_PARSE = 2,       /* malformed config text */
  IRSN_ERR_VALIDATION = 3,  /* config invariant violated */
  IRSN_ERR_DOMAIN = 4,      /* math domain error */
  IRSN_ERR_CONVERGENCE = 5, /* series / iteration did not converge */
  IRSN_ERR_IO = 6,          /* file could not be read/written */
  IRSN_ERR_INTERNAL = 7
} irsn_status;

typedef struct irsn_config irsn_config; /* opaque scenario configuration */
typedef struct irsn_table irsn_table;   /* opaque sweep/figure result table */

IRSN_API const char* irsn_version(void);
IRSN_API const char* irsn_status_message(irsn_status status);
/* Thread-local detail of the last failing call. */
IRSN_API const char* irsn_last_error(void);

/* --- configuration ------------------------------------------------------ */

/* Fresh config with the reference defaults. */
IRSN_API irsn_status irsn_config_create(irsn_config** out);
/* Parse a flat key=value file ('#' comments). */
IRSN_API irsn_status irsn_config_load(const char* path, irsn_config** out);
IRSN_API irsn_status irsn_config_clone(const irsn_config* cfg, irsn_config** out);
/* Apply one key=value override; call irsn_config_finalize afterwards. */
IRSN_API irsn_status irsn_config_set(irsn_config* cfg, const char* key, const char* value);
/* Resolve dBm / absolute-rate entry modes and check all invariants. */
IRSN_API irsn_status irsn_config_finalize(irsn_config* cfg);
IRSN_API irsn_status irsn_config_get(const irsn_config* cfg, const char* key, double* value);
/* Canonical key=value serialization; returns required length (excluding
 * the terminator) through *length. Pass buffer=NULL to query the size. */
IRSN_API irsn_status irsn_config_echo(const irsn_config* cfg, char* buffer, size_t capacity,
                                      size_t* length);
IRSN_API void irsn_config_free(irsn_config* cfg);

/* --- derived constants ---------------------------------------------------- */

typedef struct irsn_derived {
  double eps_user2, lambda_user2;   /* cascaded pair (m1, m2) */
  double eps_eve, lambda_eve;       /* cascaded pair (m1, m3) */
  int m_tilde_user2_defined;        /* tail constant exists iff m1 != m2 */
  double m_tilde_user2;
  double mu;  /* E|h_hat_E|^2  */
  double mu2; /* E|h_hat_B2|^2 */
  double mu1_growth_user2, mu1_growth_eve;
  double diversity_user1, diversity_user2, diversity_network;
  double slope_user1, slope_user2;
  double sop1_floor;
} irsn_derived;

IRSN_API irsn_status irsn_derived_stats(const irsn_config* cfg, irsn_derived* out);

/* --- closed-form metrics --------------------------------------------------
 * Names: sop1, sop2, sop2_low, sop2_high, sop_net, asym_sop1, asym_sop2,
 * asym_sop_net, sop1_floor, rate_b1, rate_b2, rate_e1, rate_e2, asc1,
 * asc2_quadrature, asc2_jensen, asc1_asym, asc2_ceiling_quadrature,
 * asc2_ceiling_jensen.
 */
IRSN_API irsn_status irsn_eval(const irsn_config* cfg, const char* metric, double* out);

/* --- Monte-Carlo estimators ------------------------------------------------ */

typedef struct irsn_estimate {
  double value;
  double std_error;
  uint64_t trials;
  uint64_t seed;
  int eve_mode; /* 0 random, 1 pinned to its mean */
} irsn_estimate;

/* out[3] = user1, user2, network. eve_mode: 0 random, 1 mean. */
IRSN_API irsn_status irsn_mc_sop(const irsn_config* cfg, uint64_t trials, uint64_t seed,
                                 int eve_mode, irsn_estimate out[3]);
/* out[8] = asc1, asc2, asc1_diff, asc2_diff, rate_b1, rate_b2, rate_e1,
 * rate_e2 (asc = clamped mean, diff = difference of means). */
IRSN_API irsn_status irsn_mc_asc(const irsn_config* cfg, uint64_t trials, uint64_t seed,
                                 irsn_estimate out[8]);
/* out[4] = sop1, sop2, asc1, asc2 for the time-sharing OMA baseline. */
IRSN_API irsn_status irsn_mc_oma(const irsn_config* cfg, uint64_t trials, uint64_t seed,
                                 irsn_estimate out[4]);

/* --- sweeps and figure presets --------------------------------------------- */

/* axis: "rho_db", "rho_e_db" or "N"; metrics: comma list from {sop1, sop2,
 * sop_net, asc1, asc2, rates, asymptotes, floors, oma}. */
IRSN_API irsn_status irsn_run_sweep(const irsn_config* cfg, const char* axis,
                                    const double* values, size_t n_values,
                                    const char* metrics, uint64_t mc_trials, uint64_t seed,
                                    int eve_mode, irsn_table** out);

/* Presets: fig2 fig3 fig4 fig5 fig6 fig8. overrides_kv is n_overrides
 * pairs laid out [key0, value0, key1, value1, ...]; may be NULL.
 * mc_trials = UINT64_MAX selects the preset default. */
IRSN_API irsn_status irsn_figure_preset(const irsn_config* cfg, const char* name,
                                        const char* const* overrides_kv, size_t n_overrides,
                                        uint64_t mc_trials, uint64_t seed, irsn_table** out);

IRSN_API size_t irsn_table_rows(const irsn_table* table);
IRSN_API size_t irsn_table_cols(const irsn_table* table);
IRSN_API const char* irsn_table_column_name(const irsn_table* table, size_t col);
IRSN_API irsn_status irsn_table_cell(const irsn_table* table, size_t row, size_t col,
                                     double* out);
IRSN_API irsn_status irsn_table_write_csv(const irsn_table* table, const char* path);
/* CSV text; same size-query protocol as irsn_config_echo. */
IRSN_API irsn_status irsn_table_to_csv(const irsn_table* table, char* buffer, size_t capacity,
                                       size_t* length);
IRSN_API void irsn_table_free(irsn_table* table);

/* --- validation suite ------------------------------------------------------ */

/* Runs the built-in validation suite (quick != 0 shrinks trial budgets and
 * doubles statistical tolerances). *failures receives the number of failed
 * criteria; *report (optional) a malloc'd text report to release with
 * irsn_string_free; csv_path (optional) also writes a machine-readable
 * per-criterion CSV there. */
IRSN_API irsn_status irsn_validate(const irsn_config* cfg, int quick, const char* csv_path,
                                   char** report, int* failures);
IRSN_API void irsn_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IRSNOMA_IRSNOMA_H */
