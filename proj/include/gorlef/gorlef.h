/* C interface to the gorlef engine.
 *
 * Every fallible call returns a gorlef_status. On failure the message of the last error
 * on the calling thread is available from gorlef_last_error(). Strings returned through
 * char** out-parameters are allocated by the library and released with gorlef_string_free.
 * Algebras are opaque handles released with gorlef_algebra_free.
 */
#ifndef GORLEF_H
#define GORLEF_H

#include <stddef.h>
#include <stdint.h>

#if defined(GORLEF_BUILDING_LIBRARY)
#define GORLEF_API __attribute__((visibility("default")))
#else
#define GORLEF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gorlef_status {
  GORLEF_OK = 0,
  GORLEF_ERR_INVALID_ARGUMENT = 1,
  GORLEF_ERR_PARSE = 2,
  GORLEF_ERR_DOMAIN = 3,
  GORLEF_ERR_NOT_REGULAR_SEQUENCE = 4,
  GORLEF_ERR_SLP_EVIDENCE = 5,
  GORLEF_ERR_DEGENERATE_ALGEBRA = 6,
  GORLEF_ERR_IO = 7,
  GORLEF_ERR_INTERNAL = 99
} gorlef_status;

typedef enum gorlef_format { GORLEF_FORMAT_JSON = 0, GORLEF_FORMAT_TEXT = 1 } gorlef_format;

typedef enum gorlef_input_kind {
  GORLEF_INPUT_AUTO = 0, /* one polynomial: form; several: generators */
  GORLEF_INPUT_FORM = 1,
  GORLEF_INPUT_GENERATORS = 2
} gorlef_input_kind;

typedef enum gorlef_lefschetz { GORLEF_WLP = 0, GORLEF_SLP = 1 } gorlef_lefschetz;

typedef struct gorlef_algebra gorlef_algebra;

GORLEF_API const char* gorlef_version(void);
GORLEF_API const char* gorlef_last_error(void);
/* Character offset of the last parse error, or -1. */
GORLEF_API long gorlef_last_error_position(void);
/* Failing Hilbert degree of the last GORLEF_ERR_NOT_REGULAR_SEQUENCE, or -1. */
GORLEF_API long gorlef_last_error_degree(void);
GORLEF_API void gorlef_string_free(char* s);

/* field: "rational", "Q" or "fp:<p>"; NULL means rational. n_vars = 0 infers the count. */
GORLEF_API gorlef_status gorlef_algebra_from_form(const char* form, size_t n_vars, const char* field,
                                                  gorlef_algebra** out);
GORLEF_API gorlef_status gorlef_algebra_from_generators(const char* const* generators, size_t count,
                                                        size_t n_vars, const char* field,
                                                        gorlef_algebra** out);
/* Polynomials separated by ';' or newlines, '#' starts a comment. */
GORLEF_API gorlef_status gorlef_algebra_from_text(const char* text, gorlef_input_kind kind, size_t n_vars,
                                                  const char* field, gorlef_algebra** out);
/* corpus_path NULL selects the corpus shipped with the library. */
GORLEF_API gorlef_status gorlef_algebra_from_corpus(const char* corpus_path, const char* name,
                                                    gorlef_algebra** out);
GORLEF_API void gorlef_algebra_free(gorlef_algebra* a);

GORLEF_API unsigned gorlef_algebra_socle_degree(const gorlef_algebra* a);
GORLEF_API size_t gorlef_algebra_n_vars(const gorlef_algebra* a);
/* Writes up to capacity values of the Hilbert function; *length receives N + 1. */
GORLEF_API gorlef_status gorlef_algebra_hilbert(const gorlef_algebra* a, size_t* values, size_t capacity,
                                                size_t* length);
GORLEF_API gorlef_status gorlef_algebra_to_json(const gorlef_algebra* a, char** out);

/* *holds is set to 1 when a witness of maximal rank was found. */
GORLEF_API gorlef_status gorlef_probe(const gorlef_algebra* a, gorlef_lefschetz kind, unsigned k,
                                      size_t trials, uint64_t seed, char** json_out, int* holds);

/* *structural_ok is 1 when symmetry, duality and standardness all hold. */
GORLEF_API gorlef_status gorlef_analyze(const gorlef_algebra* a, size_t trials, uint64_t seed,
                                        gorlef_format format, char** out, int* structural_ok);

/* Analyzes a corpus entry (or every entry when name is NULL or "all") and compares the
 * summary with the recorded expectations. *passed is 1 when everything matches. */
GORLEF_API gorlef_status gorlef_corpus_check(const char* corpus_path, const char* name, size_t trials,
                                             uint64_t seed, gorlef_format format, char** out,
                                             int* passed);

typedef struct gorlef_experiment_options {
  size_t trials;
  uint64_t seed;
  long long coeff_box;
  int include_monomial;
  size_t probe_trials;
  unsigned jobs;
} gorlef_experiment_options;

GORLEF_API void gorlef_experiment_options_init(gorlef_experiment_options* options);

/* Receives one line per trial, in trial order: JSON or text according to the format. */
typedef void (*gorlef_trial_callback)(const char* line, void* user);

/* family: "theorem_c" or "theorem_b". */
GORLEF_API gorlef_status gorlef_experiment(const char* family, const gorlef_experiment_options* options,
                                           gorlef_format format, gorlef_trial_callback on_trial,
                                           void* user, char** out, int* passed);

/* name: "perazzo". */
GORLEF_API gorlef_status gorlef_fixture(const char* name, uint64_t seed, gorlef_format format, char** out,
                                        int* passed);

/* Samples Gamma_k and checks the Ker-Coker and GGN identities on every sample. */
GORLEF_API gorlef_status gorlef_gamma(const gorlef_algebra* a, unsigned k, size_t samples, uint64_t seed,
                                      gorlef_format format, char** out, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* GORLEF_H */
