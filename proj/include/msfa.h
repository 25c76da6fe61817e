/* C interface to the MO-SFA-VG rate/yield library. All computation sits
 * behind these calls; the CLI links only this surface.
 *
 * Every function returning int yields MSFA_OK on success or one of the
 * MSFA_ERR_* codes; msfa_last_error() describes the most recent failure
 * on the calling thread. Passing a NULL out_path writes to stdout. */
#ifndef MSFA_H
#define MSFA_H

#ifdef __cplusplus
extern "C" {
#endif

#define MSFA_OK 0
#define MSFA_ERR_DOMAIN 1
#define MSFA_ERR_CONFIG 2
#define MSFA_ERR_NUMERIC 3
#define MSFA_ERR_IO 4

typedef struct msfa_config msfa_config;

const char* msfa_version(void);

/* Message for the last failing call on this thread; empty string after a
 * success. The pointer stays valid until the next call on the thread. */
const char* msfa_last_error(void);

/* Parses and validates a `key = value` config file. On success *out owns
 * the handle; free with msfa_config_free. */
int msfa_config_load(const char* path, msfa_config** out);

/* Applies one key = value override (same keys as the file). */
int msfa_config_set(msfa_config* cfg, const char* key, const char* value);

void msfa_config_free(msfa_config* cfg);

/* ATI channel rates for parallel and perpendicular orientations. */
int msfa_run_spectrum(const msfa_config* cfg, const char* out_path);

/* Per-channel parallel/perpendicular ratio (exact and strong-field); a
 * dense overlay CSV lands next to out_path with an "_overlay" suffix. */
int msfa_run_ratio(const msfa_config* cfg, const char* out_path);

/* Pulse-integrated yields over a log-spaced peak-intensity grid. */
int msfa_run_yield(const msfa_config* cfg, double i_min, double i_max,
                   int n_points, const char* out_path);

/* Focal-volume-averaged yield ratio; external_paths may list 2-column
 * comparison curves (NULL/0 for none). default_scale multiplies the
 * first external curve and the external ratio column. */
int msfa_run_focal(const msfa_config* cfg, double i_min, double i_max,
                   int n_points, const char* const* external_paths,
                   int n_external, double default_scale, const char* out_path);

/* Generalized-Bessel diagnostics (Parseval, recurrence, v=0 reduction). */
int msfa_bessel_check(double u, double v, int n_min, int n_max,
                      const char* out_path);

#ifdef __cplusplus
}
#endif

#endif /* MSFA_H */
