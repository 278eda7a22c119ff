/* matgrowth: growth rates of products of a pair of 2x2 rational matrices.
 *
 * Conventions:
 *   - Every function that can fail returns mg_status; out-parameters are
 *     written only on MG_OK.
 *   - mg_last_error() describes the most recent failure on the calling
 *     thread; the pointer is valid until the thread's next library call.
 *   - Strings returned through char** out-parameters are owned by the
 *     caller and must be released with mg_string_free().
 *   - Handles are released with their matching *_free function; freeing
 *     NULL is a no-op.
 *   - Matrix text is "a,b;c,d" with integer or p/q entries. Word text is
 *     over {A, B} with optional positive exponents, e.g. "AB^10A^2".
 */
#ifndef MATGROWTH_H
#define MATGROWTH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mg_mat2 mg_mat2;
typedef struct mg_word mg_word;
typedef struct mg_report mg_report;
typedef struct mg_summary mg_summary;

typedef enum mg_status {
  MG_OK = 0,
  MG_ERR_PARSE = 1,       /* malformed text input */
  MG_ERR_DOMAIN = 2,      /* precondition violated */
  MG_ERR_CAP = 3,         /* resource cap exceeded */
  MG_ERR_UNSUPPORTED = 4, /* request not supported (e.g. CSV for this report) */
  MG_ERR_IO = 5,          /* filesystem failure */
  MG_ERR_NONFINITE = 6,   /* numeric result not finite */
  MG_ERR_INVALID = 7,     /* NULL handle or bad argument at the C boundary */
  MG_ERR_INTERNAL = 8
} mg_status;

typedef enum mg_format { MG_FORMAT_JSON = 0, MG_FORMAT_CSV = 1 } mg_format;
typedef enum mg_norm { MG_NORM_L1 = 0, MG_NORM_MAX_ABS = 1 } mg_norm;

const char* mg_version(void);
const char* mg_status_name(mg_status status);
const char* mg_last_error(void);
void mg_string_free(char* s);

/* ---- matrices ---- */
mg_status mg_mat2_parse(const char* text, mg_mat2** out);
mg_status mg_mat2_identity(mg_mat2** out);
void mg_mat2_free(mg_mat2* m);
mg_status mg_mat2_render(const mg_mat2* m, char** out);
/* row, col in {0, 1}; entry as "p/q" text */
mg_status mg_mat2_entry(const mg_mat2* m, unsigned row, unsigned col, char** out);
mg_status mg_mat2_mul(const mg_mat2* x, const mg_mat2* y, mg_mat2** out);
mg_status mg_mat2_mean(const mg_mat2* x, const mg_mat2* y, mg_mat2** out);
mg_status mg_mat2_max_abs_entry(const mg_mat2* m, char** out);
mg_status mg_mat2_l1_norm(const mg_mat2* m, char** out);
mg_status mg_mat2_spectral_radius(const mg_mat2* m, double* out);

/* ---- words ---- */
mg_status mg_word_parse(const char* text, mg_word** out);
void mg_word_free(mg_word* w);
/* compressed != 0 renders run-length form like "A^3B" */
mg_status mg_word_render(const mg_word* w, int compressed, char** out);
mg_status mg_word_length(const mg_word* w, size_t* out);
mg_status mg_eval_word(const mg_word* w, const mg_mat2* a, const mg_mat2* b,
                       mg_mat2** out);

/* ---- named pair registry ---- */
size_t mg_registry_count(void);
/* Static storage; do not free. NULL when idx is out of range. */
const char* mg_registry_name(size_t idx);
mg_status mg_registry_lookup(const char* name, mg_mat2** a, mg_mat2** b);

/* ---- fastest growth ---- */
mg_status mg_maximizers(const mg_mat2* a, const mg_mat2* b, unsigned length,
                        mg_report** out);
mg_status mg_jsr(const mg_mat2* a, const mg_mat2* b, unsigned max_len,
                 mg_report** out);
mg_status mg_probe_period(const mg_mat2* a, const mg_mat2* b, unsigned max_len,
                          mg_report** out);
/* k, m as rational text. force != 0 runs the check outside the proven
 * hypothesis (k,m >= 2 or k = m = 1). */
mg_status mg_verify_alternation(const char* k, const char* m, unsigned n_max,
                                int force, mg_report** out);
mg_status mg_candidates(const mg_mat2* a, const mg_mat2* b, mg_report** out);

/* ---- average growth ---- */
mg_status mg_average_rate(const mg_mat2* a, const mg_mat2* b, double* out);
/* Report with rate, recurrence coefficients and exact mean^n entries; when
 * check_trials > 0 an empirical sample-mean check is included. */
mg_status mg_average_report(const mg_mat2* a, const mg_mat2* b, uint64_t n,
                            uint64_t check_trials, uint64_t seed, mg_report** out);

/* ---- Lyapunov / generic growth ---- */
typedef struct mg_mc_params {
  uint64_t n;       /* letters per trial */
  uint32_t trials;
  uint64_t seed;
  mg_norm norm;
  uint32_t threads; /* 0 = auto */
} mg_mc_params;
void mg_mc_params_init(mg_mc_params* params); /* n=1e6, trials=16, seed=0 */

mg_status mg_lyapunov(const mg_mat2* a, const mg_mat2* b,
                      const mg_mc_params* params, mg_report** out);
mg_status mg_bounds(const mg_mat2* a, const mg_mat2* b,
                    const mg_mc_params* params, mg_report** out);
mg_status mg_ave_upper_bound(const mg_mat2* a, const mg_mat2* b, double* out);
mg_status mg_sturman_thiffeault_bound(double k, double m, double* out);
/* Renormalized log-norm accumulation along a fixed word (oracle hook). */
mg_status mg_renorm_log_norm(const mg_mat2* a, const mg_mat2* b, const mg_word* w,
                             mg_norm norm, double* out);

/* ---- Cayley girth ---- */
mg_status mg_girth_bound(uint64_t p, double s, uint64_t* out);
mg_status mg_girth_search(const mg_mat2* a, const mg_mat2* b, uint32_t p,
                          uint32_t depth_max, mg_report** out);
mg_status mg_verify_relation(const mg_word* u, const mg_word* v, const mg_mat2* a,
                             const mg_mat2* b, int* equal);
mg_status mg_freeness_sufficient(const char* k, const char* m, int* out);
mg_status mg_suffix_freeness_check(const mg_word* u, const mg_word* v, int* out);

/* ---- summary ---- */
typedef struct mg_summary_params {
  uint64_t n;
  uint32_t trials;
  uint64_t seed;
  uint32_t search_depth;
  uint32_t threads;
} mg_summary_params;
void mg_summary_params_init(mg_summary_params* params);

mg_status mg_summary_new(mg_summary** out);
void mg_summary_free(mg_summary* s);
mg_status mg_summary_add_named(mg_summary* s, const char* name);
/* label may be NULL or "" for an anonymous pair */
mg_status mg_summary_add_pair(mg_summary* s, const char* label, const mg_mat2* a,
                              const mg_mat2* b);
mg_status mg_summary_run(const mg_summary* s, const mg_summary_params* params,
                         mg_report** out);

/* ---- reports ---- */
/* JSON works for every report; CSV only for summary reports. */
mg_status mg_report_render(const mg_report* r, mg_format format, char** out);
void mg_report_free(mg_report* r);

#ifdef __cplusplus
}
#endif

#endif /* MATGROWTH_H */
