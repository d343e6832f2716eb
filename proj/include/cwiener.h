#ifndef CWIENER_H
#define CWIENER_H

/* C API of the complex-Wiener sampling library.
 *
 * Every function returns a cw_status; outputs go through pointers. Strings
 * returned through char** are heap-allocated and must be released with
 * cw_string_free. On any failure a human-readable detail message is
 * available from cw_last_error (thread-local). */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cw_status {
    CW_OK = 0,
    CW_ERR_INVALID_ARGUMENT = 1,
    CW_ERR_NUMERIC = 2,
    CW_ERR_IO = 3,
    CW_ERR_INTERNAL = 4
} cw_status;

/* Static description of a status code. */
const char* cw_status_message(cw_status status);

/* Detail message of the most recent failure on this thread ("" if none). */
const char* cw_last_error(void);

void cw_string_free(char* s);

/* ---- random streams ------------------------------------------------- */

typedef struct cw_rng cw_rng;

/* Counter-based stream keyed by (seed, tag, index); O(1) seek. */
cw_status cw_rng_create(uint64_t seed, const char* tag, uint64_t index,
                        cw_rng** out);
void cw_rng_destroy(cw_rng* rng);

cw_status cw_rng_uniform(cw_rng* rng, double* out);
cw_status cw_rng_normal(cw_rng* rng, double* out);
/* Standard proper complex Gaussian CN(0,1,0). */
cw_status cw_rng_standard_complex(cw_rng* rng, double* re, double* im);
cw_status cw_rng_seek(cw_rng* rng, uint64_t offset);
cw_status cw_rng_position(const cw_rng* rng, uint64_t* out);

/* ---- scalar complex Gaussian laws ----------------------------------- */

/* Draw from the law (mean, variance, pseudo-variance); is_real != 0 selects
 * the embedded real law (pseudo-variance must equal variance, mean real). */
cw_status cw_sample_gaussian(double mean_re, double mean_im, double variance,
                             double pvar_re, double pvar_im, int is_real,
                             cw_rng* rng, double* re, double* im);

/* Characteristic function of the same law at probe w. */
cw_status cw_cf_analytic(double mean_re, double mean_im, double variance,
                         double pvar_re, double pvar_im, int is_real,
                         double w_re, double w_im, double* re, double* im);

/* ---- campaigns ------------------------------------------------------ */

typedef struct cw_run_config {
    uint64_t seed;
    int samples;
    int trunc;
    const char* domain;  /* "interval:L" or "rect:Lx,Ly" */
    double s;
    double t_final;
    int grid;
    double extent;
    double alpha;
    double k_sigma;
    double fk_sign;      /* -1 (default) or +1 */
    const char* format;  /* "csv" or "json" */
    int quick_scale;     /* >= 1; divides Monte-Carlo budgets in verify */
} cw_run_config;

/* Fills every field with the default run configuration. */
void cw_run_config_default(cw_run_config* config);

/* Each campaign yields a body (CSV or JSON per config->format) and a JSON
 * summary; either output pointer may be NULL if not wanted. */
cw_status cw_run_sample_bm(const cw_run_config* config, char** body, char** summary);
cw_status cw_run_sample_fgf(const cw_run_config* config, char** body, char** summary);
cw_status cw_run_fk_compare(const cw_run_config* config, char** report);
cw_status cw_run_fernique(const cw_run_config* config, char** report);

/* Full verification suite; *all_pass is 1 iff every criterion passed. */
cw_status cw_run_verify(const cw_run_config* config, char** report, int* all_pass);

/* Atomic write (temp file + rename). */
cw_status cw_write_file_atomic(const char* path, const char* content);

#ifdef __cplusplus
}
#endif

#endif /* CWIENER_H */
