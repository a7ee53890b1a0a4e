/*
 * mnc: exact Morse-Novikov cohomology of mapping tori and rigidity criteria
 * for model Lie affine foliations.
 *
 * C interface over the C++ core. All handles are opaque and immutable after
 * construction; a handle may be shared between threads. Functions return an
 * mnc_status; on failure a human-readable message for the calling thread is
 * available from mnc_last_error(). Strings returned through char** outputs
 * are UTF-8 JSON owned by the caller and released with mnc_string_free().
 */
#ifndef MNC_MNC_H
#define MNC_MNC_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  define MNC_API __declspec(dllexport)
#else
#  define MNC_API __attribute__((visibility("default")))
#endif

typedef enum mnc_status {
  MNC_OK = 0,
  MNC_ERR_INVALID = 1,      /* validation failure: schema, shapes, preconditions */
  MNC_ERR_UNSUPPORTED = 2,  /* factorization degree beyond the certified range */
  MNC_ERR_SPLIT = 3,        /* twist modulus is reducible; message lists factors */
  MNC_ERR_NUMERIC = 4,      /* the floating-point oracle cannot run on this input */
  MNC_ERR_ARGUMENT = 5,     /* null pointer or out-of-range argument */
  MNC_ERR_INTERNAL = 6
} mnc_status;

typedef enum mnc_verdict {
  MNC_VERDICT_RIGID = 0,
  MNC_VERDICT_CRITERION_FAILS = 1
} mnc_verdict;

/* A parsed model file: cohomology data plus optional twist/rigidity blocks. */
typedef struct mnc_model mnc_model;
/* A twist scalar mu = e^{-c}, rational or a pinned algebraic number. */
typedef struct mnc_twist mnc_twist;

MNC_API const char* mnc_version(void);
/* Message of the last failed call on this thread ("" if none). */
MNC_API const char* mnc_last_error(void);
MNC_API void mnc_string_free(char* s);

MNC_API mnc_status mnc_model_parse(const char* json_text, mnc_model** out);
MNC_API void mnc_model_free(mnc_model* model);
/* Canonical re-serialization of the parsed file. */
MNC_API mnc_status mnc_model_serialize(const mnc_model* model, char** out_json);
/* 1 if the file describes H^*(L) with a monodromy action, 0 for a bare Lie algebra. */
MNC_API int mnc_model_has_cohomology(const mnc_model* model);
MNC_API int mnc_model_top_degree(const mnc_model* model);

/* "p/q" or "POLY in (lo,hi)". */
MNC_API mnc_status mnc_twist_parse(const char* spec, mnc_twist** out);
/* The twist from the model file's "twist" block. */
MNC_API mnc_status mnc_model_twist(const mnc_model* model, mnc_twist** out);
MNC_API void mnc_twist_free(mnc_twist* twist);
MNC_API mnc_status mnc_twist_describe(const mnc_twist* twist, char** out_json);

/* {"kind":"wang_betti","betti":[...]} */
MNC_API mnc_status mnc_betti(const mnc_model* model, char** out_json);
/* {"mu":{...},"kind":...,"dim_K":[...],"dim_C":[...],"dim_H":[...]} */
MNC_API mnc_status mnc_novikov(const mnc_model* model, const mnc_twist* mu, char** out_json);
/* Irreducible factors of charpoly(M_k) with isolated real roots. */
MNC_API mnc_status mnc_eigenvalue_candidates(const mnc_model* model, int degree, char** out_json);
/* Rigidity report from the file's "rigidity" block. */
MNC_API mnc_status mnc_rigidity(const mnc_model* model, char** out_json, mnc_verdict* verdict);
/* Chevalley-Eilenberg data for nilmanifold files. */
MNC_API mnc_status mnc_ce(const mnc_model* model, char** out_json);
/* Exact vs. discretized crosscheck; *passed is 1 on PASS. */
MNC_API mnc_status mnc_verify(const mnc_model* model, const mnc_twist* mu, int grid, double tolerance,
                              char** out_json, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* MNC_MNC_H */
