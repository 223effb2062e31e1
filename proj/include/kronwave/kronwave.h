/* SPDX-FileCopyrightText: 2026 The kronwave authors */
/* SPDX-License-Identifier: Apache-2.0 */

/* C interface of the kronwave solver library. All handles are opaque; every
 * function returning kw_status leaves a message retrievable with kw_last_error()
 * (per thread) when it fails. */

#ifndef KRONWAVE_KRONWAVE_H
#define KRONWAVE_KRONWAVE_H

#include <stddef.h>

#if defined(KRONWAVE_BUILDING_LIBRARY)
#define KW_API __attribute__((visibility("default")))
#else
#define KW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kw_status {
    KW_OK = 0,
    KW_ERR_INVALID_ARGUMENT = 1,
    KW_ERR_CONFIG = 2,
    KW_ERR_NUMERICAL = 3,
    KW_ERR_IO = 4,
    KW_ERR_INTERNAL = 5
} kw_status;

typedef struct kw_config kw_config;
typedef struct kw_pwave kw_pwave;
typedef struct kw_elastic kw_elastic;

KW_API const char* kw_version(void);
KW_API const char* kw_status_string(kw_status status);
/* Message of the last failure on this thread; "" when none. */
KW_API const char* kw_last_error(void);

/* ---- configuration ---- */

KW_API kw_status kw_config_create(kw_config** out);
KW_API void kw_config_destroy(kw_config* config);
KW_API kw_status kw_config_set(kw_config* config, const char* key, const char* value);
KW_API kw_status kw_config_load_file(kw_config* config, const char* path);
KW_API kw_status kw_config_validate(const kw_config* config);
/* Writes the key = value dump (NUL terminated) if it fits; *required gets the
 * size including the terminator either way. */
KW_API kw_status kw_config_echo(const kw_config* config, char* buffer, size_t capacity, size_t* required);
/* Value of one key as the echo prints it, NUL terminated; *required as for kw_config_echo. */
KW_API kw_status kw_config_get(const kw_config* config, const char* key, char* buffer, size_t capacity,
                               size_t* required);
/* Element count per direction after expansion (2 or 3 entries). */
KW_API kw_status kw_config_elements(const kw_config* config, int* counts, int capacity, int* dimension);
KW_API kw_status kw_config_total_elements(const kw_config* config, long* total);

/* ---- drivers (write into the configured output directory; "" writes nothing) ---- */

typedef struct kw_run_summary {
    int records;              /* energy rows, including step 0 */
    double relative_drift;    /* max |E_n - E_0| / |E_0| */
    double initial_energy;
    double final_energy;
    int snapshots;
    double star_norm_max_increase; /* elasticity only: max (||U^{n+1}||_* - ||U^n||_*) */
} kw_run_summary;

KW_API kw_status kw_run_pwave(const kw_config* config, kw_run_summary* out);
KW_API kw_status kw_run_elasticity(const kw_config* config, kw_run_summary* out);

/* Arrays get min(levels, capacity) entries; *count gets the number of levels. */
KW_API kw_status kw_run_convergence(const kw_config* config, double* taus, double* errors, int capacity, int* count,
                                    double* slope);

KW_API kw_status kw_run_stability(const kw_config* config, double* taus, double* radii, int capacity, int* count,
                                  double* max_radius);

KW_API kw_status kw_run_bench(const kw_config* config, long* unknowns, double* seconds, int capacity, int* count,
                              double* slope);

/* ---- stepping handles ---- */

KW_API kw_status kw_pwave_create(const kw_config* config, kw_pwave** out);
KW_API void kw_pwave_destroy(kw_pwave* sim);
KW_API kw_status kw_pwave_step(kw_pwave* sim, int steps);
KW_API kw_status kw_pwave_energies(const kw_pwave* sim, double* kinetic, double* potential, double* total);
KW_API kw_status kw_pwave_time(const kw_pwave* sim, double* time, int* step);
KW_API kw_status kw_pwave_size(const kw_pwave* sim, size_t* unknowns);
KW_API kw_status kw_pwave_copy_displacement(const kw_pwave* sim, double* buffer, size_t capacity);

/* The three-level scheme needs two levels, so a new handle already holds step 1 (Taylor start). */
KW_API kw_status kw_elastic_create(const kw_config* config, kw_elastic** out);
KW_API void kw_elastic_destroy(kw_elastic* sim);
KW_API kw_status kw_elastic_step(kw_elastic* sim, int steps);
KW_API kw_status kw_elastic_energies(const kw_elastic* sim, double* kinetic, double* potential, double* total);
/* energy_weighted != 0 uses D - tau^2/4 Upsilon for the velocity part. */
KW_API kw_status kw_elastic_star_norm(const kw_elastic* sim, int energy_weighted, double* value);
KW_API kw_status kw_elastic_time(const kw_elastic* sim, double* time, int* step);
KW_API kw_status kw_elastic_size(const kw_elastic* sim, size_t* unknowns_per_component);
KW_API kw_status kw_elastic_copy_displacement(const kw_elastic* sim, double* x, double* y, size_t capacity);

#ifdef __cplusplus
}
#endif

#endif /* KRONWAVE_KRONWAVE_H */
