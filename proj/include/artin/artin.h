// Copyright 2026 The Artin Retractions Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to the Artin retraction toolkit.
 *
 * Every function returns an artin_status. On failure the message is available
 * from artin_last_error() on the same thread until the next call. Strings
 * returned through `char**` are owned by the caller and released with
 * artin_string_free(). Words use the textual grammar "a b^-2 c" ("1" is the
 * identity); labels are decimal integers or "inf". */

#ifndef ARTIN_ARTIN_H_
#define ARTIN_ARTIN_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ARTIN_BUILDING_LIBRARY)
#define ARTIN_API __declspec(dllexport)
#else
#define ARTIN_API __declspec(dllimport)
#endif
#else
#define ARTIN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum artin_status {
  ARTIN_OK = 0,
  /* The call succeeded and the mathematical answer is "no". */
  ARTIN_NEGATIVE = 1,
  ARTIN_ERR_PARSE = 2,
  ARTIN_ERR_INVALID_ARGUMENT = 3,
  ARTIN_ERR_PRECONDITION = 4,
  ARTIN_ERR_INTERNAL = 5,
} artin_status;

typedef struct artin_matrix artin_matrix;
typedef struct artin_retraction artin_retraction;

ARTIN_API const char* artin_version(void);
ARTIN_API const char* artin_status_name(artin_status status);
ARTIN_API const char* artin_last_error(void);
ARTIN_API void artin_string_free(char* s);

/* Coxeter matrices. */
ARTIN_API artin_status artin_matrix_parse(const char* json, artin_matrix** out);
ARTIN_API void artin_matrix_free(artin_matrix* m);
ARTIN_API artin_status artin_matrix_to_json(const artin_matrix* m, char** out);
ARTIN_API artin_status artin_matrix_rank(const artin_matrix* m, size_t* out);

/* OK with the odd-component partition when parabolic-retract-compatible,
 * NEGATIVE with a failing-triple certificate otherwise. */
ARTIN_API artin_status artin_classify(const artin_matrix* m, char** out_json);
/* OK when every triple passes, NEGATIVE otherwise. */
ARTIN_API artin_status artin_triples_criterion(const artin_matrix* m);

/* Retractions onto the parabolic subgroup generated by `keep`. */
ARTIN_API artin_status artin_retraction_synth(const artin_matrix* m, const char* const* keep,
                                              size_t keep_count, artin_retraction** out);
ARTIN_API void artin_retraction_free(artin_retraction* r);
ARTIN_API artin_status artin_retraction_to_json(const artin_retraction* r, int with_trace,
                                                char** out_json);
ARTIN_API artin_status artin_retraction_apply(const artin_retraction* r, const char* word,
                                              char** out_word);
/* OK when every defining relation maps to a relation, NEGATIVE otherwise. */
ARTIN_API artin_status artin_retraction_verify(const artin_retraction* r, char** out_json);

/* Words. `gens` is "a,b"-style or NULL for the default "a,b". */
ARTIN_API artin_status artin_word_reduce(const char* word, char** out_word);
ARTIN_API artin_status artin_word_normal_form(const char* m, const char* gens, const char* word,
                                              char** out_json);
/* OK when equal in A(m), NEGATIVE otherwise. */
ARTIN_API artin_status artin_word_equal(const char* m, const char* gens, const char* u,
                                        const char* v);
ARTIN_API artin_status artin_word_abelianize(const char* word, int per_generator,
                                             char** out_json);

/* Free products of two cyclic groups; `orders` is "2,3" or "inf,4". */
ARTIN_API artin_status artin_tree_classify(const char* orders, const char* word,
                                           char** out_json);

/* Homomorphisms of dihedral Artin groups sending a1 to b1. */
ARTIN_API artin_status artin_hom_list(const char* ma, const char* mb, char** out_json);
/* OK when the image of a2 defines a homomorphism, NEGATIVE otherwise. */
ARTIN_API artin_status artin_hom_verify(const char* ma, const char* mb, const char* image,
                                        char** out_json);
/* OK with the matched family, NEGATIVE when no family matched within `bound`
 * or the image does not define a homomorphism. */
ARTIN_API artin_status artin_hom_classify(const char* ma, const char* mb, const char* image,
                                          int bound, char** out_json);

/* Seeded instance generators; output is matrix JSON. */
ARTIN_API artin_status artin_gen_retract(size_t n, uint64_t seed, char** out_json);
/* `cross` may be NULL for randomly drawn even/inf labels. */
ARTIN_API artin_status artin_gen_parabolic(const size_t* block_sizes, size_t block_count,
                                           uint64_t seed, const char* cross, char** out_json);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // ARTIN_ARTIN_H_
