#ifndef MGC_MGC_H
#define MGC_MGC_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MGC_API __declspec(dllexport)
#else
#define MGC_API __attribute__((visibility("default")))
#endif

/* Status codes. */
typedef enum mgc_status {
  MGC_OK = 0,
  MGC_INVALID_ARGUMENT,
  MGC_UNSUPPORTED_PRIME_POWER,
  MGC_EMPTY_EXPR,
  MGC_UNSUPPORTED_PRODUCT,
  MGC_ADAMS_OUT_OF_SCOPE,
  MGC_UNKNOWN_LIFT,
  MGC_NON_INTEGRAL_COEFFICIENT,
  MGC_OUT_OF_MODEL,
  MGC_MISSING_DATA,
  MGC_MONOID_VIOLATION,
  MGC_NON_TRIANGULAR,
  MGC_NEGATIVE_MULTIPLICITY,
  MGC_NON_INTEGRAL,
  MGC_SINGULAR_SYSTEM,
  MGC_NON_INTEGRAL_SOLUTION,
  MGC_RESIDUAL_NONZERO,
  MGC_UNSUPPORTED_CHARACTERISTIC,
  MGC_NON_INTEGRAL_RECONSTRUCTION,
  MGC_VALIDATION_FAILURE,
  MGC_PARSE_ERROR,
  MGC_IO_ERROR,
  MGC_CAP_VIOLATION,
  MGC_INTERNAL_ERROR = 100
} mgc_status;

/* Loaded data directory plus output settings. */
typedef struct mgc_session mgc_session;
/* Output of one command: a JSON document and a human-readable text. */
typedef struct mgc_result mgc_result;

MGC_API const char* mgc_version(void);
MGC_API const char* mgc_status_name(mgc_status s);
/* 0 success, 2 validation, 3 solve, 4 missing data. */
MGC_API int mgc_exit_code(mgc_status s);
/* JSON error object of the last failure on the calling thread. */
MGC_API const char* mgc_last_error(void);

MGC_API mgc_status mgc_session_open(const char* data_dir, const char* out_dir, int threads, mgc_session** out);
MGC_API void mgc_session_free(mgc_session* s);
/* Combined SHA-256 of all ingested tables. */
MGC_API const char* mgc_session_hash(const mgc_session* s);

/* On failure *out is NULL, except for commands that complete with findings
   (verify); those return the status together with a result. */
MGC_API mgc_status mgc_compute_a3(mgc_session* s, int a, int b, int c, mgc_result** out);
/* mu may be NULL for all partitions of n. */
MGC_API mgc_status mgc_compute_m3(mgc_session* s, int n, const char* mu, mgc_result** out);
/* engine: "gk", "direct" or "both". */
MGC_API mgc_status mgc_boundary(mgc_session* s, int g, int n, const char* engine, mgc_result** out);
MGC_API mgc_status mgc_verify_counts(mgc_session* s, int q, int genus, mgc_result** out);
MGC_API mgc_status mgc_verify_data(mgc_session* s, mgc_result** out);
MGC_API mgc_status mgc_report(mgc_session* s, int n, mgc_result** out);
MGC_API mgc_status mgc_derive_a2(int max_size, const char* path, mgc_result** out);
/* Normalizes a class written in the expression grammar. */
MGC_API mgc_status mgc_normalize_motive(const char* text, mgc_result** out);

MGC_API const char* mgc_result_json(const mgc_result* r);
MGC_API const char* mgc_result_text(const mgc_result* r);
MGC_API void mgc_result_free(mgc_result* r);

#ifdef __cplusplus
}
#endif

#endif
