/* slnrsim: multi-user multi-layer MIMO leakage-based precoding simulator.
 *
 * C interface to the simulation core. All state lives behind opaque
 * handles; every fallible call returns a status code and leaves a
 * human-readable message in slnrsim_last_error() (thread-local).
 */
#ifndef SLNRSIM_H
#define SLNRSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SLNRSIM_API __declspec(dllexport)
#else
#define SLNRSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slnrsim_status {
  SLNRSIM_OK = 0,
  SLNRSIM_ERR_PARSE = 1,      /* malformed config document */
  SLNRSIM_ERR_VALIDATION = 2, /* config violates a scenario invariant */
  SLNRSIM_ERR_RUNTIME = 3,    /* numerical or internal failure */
  SLNRSIM_ERR_IO = 4,         /* file read/write failure */
  SLNRSIM_ERR_ARGUMENT = 5    /* null handle, bad index, bad enum string */
} slnrsim_status;

typedef enum slnrsim_scheme {
  SLNRSIM_SCHEME_ORIGINAL_SLNR = 0,
  SLNRSIM_SCHEME_LAYER_SLNR = 1
} slnrsim_scheme;

typedef enum slnrsim_receiver {
  SLNRSIM_RECEIVER_MATCHED_FILTER = 0,
  SLNRSIM_RECEIVER_MMSE = 1
} slnrsim_receiver;

typedef struct slnrsim_config slnrsim_config;  /* opaque */
typedef struct slnrsim_result slnrsim_result;  /* opaque */

typedef struct slnrsim_sample {
  uint64_t drop_id;
  int32_t user;   /* 1-based */
  int32_t layer;  /* 1-based */
  int32_t scheme;   /* slnrsim_scheme */
  int32_t receiver; /* slnrsim_receiver */
  double sinr_db;
} slnrsim_sample;

/* Message describing the most recent failure on this thread. Never NULL;
 * empty string when no failure has occurred. */
SLNRSIM_API const char* slnrsim_last_error(void);

SLNRSIM_API const char* slnrsim_version(void);

/* ---- configuration ----------------------------------------------------- */

/* Parse and validate a JSON config document. On success *out_config owns a
 * new handle that must be released with slnrsim_config_free(). */
SLNRSIM_API slnrsim_status slnrsim_config_from_json(const char* json_text,
                                                    slnrsim_config** out_config);
SLNRSIM_API slnrsim_status slnrsim_config_from_file(const char* path,
                                                    slnrsim_config** out_config);
SLNRSIM_API void slnrsim_config_free(slnrsim_config* config);

/* Field overrides (CLI flags route through these). String setters accept the
 * JSON enum spellings ("original_slnr"/"layer_slnr", "matched_filter"/"mmse"). */
SLNRSIM_API slnrsim_status slnrsim_config_set_scheme(slnrsim_config* config,
                                                     const char* scheme);
SLNRSIM_API slnrsim_status slnrsim_config_set_receiver(slnrsim_config* config,
                                                       const char* receiver);
SLNRSIM_API slnrsim_status slnrsim_config_set_drops(slnrsim_config* config, uint64_t drops);
SLNRSIM_API slnrsim_status slnrsim_config_set_seed(slnrsim_config* config, uint64_t seed);
SLNRSIM_API slnrsim_status slnrsim_config_set_feedback_iters(slnrsim_config* config,
                                                             int32_t iters);
SLNRSIM_API slnrsim_status slnrsim_config_set_output_path(slnrsim_config* config,
                                                          const char* path);

/* Normalized JSON rendering of the config; owned by the handle. */
SLNRSIM_API const char* slnrsim_config_json(const slnrsim_config* config);
SLNRSIM_API const char* slnrsim_config_output_path(const slnrsim_config* config);
SLNRSIM_API int32_t slnrsim_config_emit_cdf(const slnrsim_config* config);
SLNRSIM_API int32_t slnrsim_config_emit_plot_script(const slnrsim_config* config);

/* Non-fatal validation warnings gathered at parse time. */
SLNRSIM_API size_t slnrsim_config_warning_count(const slnrsim_config* config);
SLNRSIM_API const char* slnrsim_config_warning(const slnrsim_config* config, size_t index);

/* ---- campaigns ---------------------------------------------------------- */

/* Run the configured scheme. n_threads <= 1 runs inline; results are
 * identical for any worker count. */
SLNRSIM_API slnrsim_status slnrsim_campaign_run(const slnrsim_config* config,
                                                int32_t n_threads,
                                                slnrsim_result** out_result);

/* Run both schemes over identical channel realizations (paired comparison). */
SLNRSIM_API slnrsim_status slnrsim_campaign_run_paired(const slnrsim_config* config,
                                                       int32_t n_threads,
                                                       slnrsim_result** out_result);

SLNRSIM_API void slnrsim_result_free(slnrsim_result* result);

/* ---- results ------------------------------------------------------------ */

SLNRSIM_API size_t slnrsim_result_sample_count(const slnrsim_result* result);
SLNRSIM_API slnrsim_status slnrsim_result_sample(const slnrsim_result* result, size_t index,
                                                 slnrsim_sample* out_sample);
SLNRSIM_API uint64_t slnrsim_result_resample_count(const slnrsim_result* result);

/* Percentile of the (scheme) population, p in (0, 1). */
SLNRSIM_API slnrsim_status slnrsim_result_percentile(const slnrsim_result* result,
                                                     int32_t scheme, double p,
                                                     double* out_db);

/* Mean per-layer SINR gap (layer minus original); paired results only. */
SLNRSIM_API slnrsim_status slnrsim_result_mean_gap_db(const slnrsim_result* result,
                                                      double* out_db);

/* Percentile table as text; owned by the handle. */
SLNRSIM_API const char* slnrsim_result_summary(const slnrsim_result* result);

SLNRSIM_API slnrsim_status slnrsim_result_write_csv(const slnrsim_result* result,
                                                    const char* path);
SLNRSIM_API slnrsim_status slnrsim_result_write_cdf_csv(const slnrsim_result* result,
                                                        const char* path);

/* Emit a matplotlib script that plots the CDFs of the sample CSV. */
SLNRSIM_API slnrsim_status slnrsim_write_plot_script(const char* csv_path,
                                                     const char* script_path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SLNRSIM_H */
