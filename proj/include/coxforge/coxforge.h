/* coxforge -- exact computation with finitely generated Coxeter groups.
 *
 * C interface of the shared library. All analysis results are returned as
 * JSON text (schema "coxforge/1"); strings handed out by the library are
 * malloc'd and must be released with cox_string_free().
 *
 * Every entry point returns a cox_status; the values double as the CLI
 * exit codes. On failure, *errmsg (when the argument is non-NULL) receives
 * a diagnostic string.
 */
#ifndef COXFORGE_H
#define COXFORGE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cox_status {
  COX_OK = 0,
  COX_ERR_INPUT = 1,    /* bad input: syntax, invalid matrix, bad arguments */
  COX_ERR_BUDGET = 2,   /* a work or size limit was exhausted */
  COX_ERR_INTERNAL = 3  /* invariant failure inside the library */
} cox_status;

/* Opaque handle to a validated Coxeter matrix. */
typedef struct cox_group cox_group;

const char *cox_version(void);
void cox_string_free(char *s);

/* Parse the text DSL ("matrix" or "vertices"/"edge" form). */
cox_status cox_group_parse(const char *text, cox_group **out, char **errmsg);

/* Build from a dense row-major n*n label matrix. Use 0 for infinity;
 * the diagonal must be 1 and off-diagonal labels must be >= 2. */
cox_status cox_group_from_labels(int32_t n, const int32_t *labels,
                                 cox_group **out, char **errmsg);

void cox_group_free(cox_group *g);
int32_t cox_group_rank(const cox_group *g);

/* Render back to the diagram form of the DSL (round-trips). */
cox_status cox_group_render(const cox_group *g, char **dsl_out, char **errmsg);

/* Per-component classification plus group-level verdicts (amenable radical
 * factors, reduced C*-algebra simplicity and trace uniqueness, primitivity). */
cox_status cox_classify_json(const cox_group *g, char **json_out, char **errmsg);

/* Signature (p,q,r) of the Tits form and an exact kernel basis. */
cox_status cox_signature_json(const cox_group *g, char **json_out, char **errmsg);

/* Reflection matrices and word-ball statistics up to max_length.
 * budget = 0 selects the default element budget (10^6). */
cox_status cox_repr_json(const cox_group *g, int32_t max_length, uint64_t budget,
                         char **json_out, char **errmsg);

/* Word-ball faithfulness check of the reduced representation: reports every
 * non-identity element of length <= max_length acting as I or -I modulo the
 * kernel of the Tits form. */
cox_status cox_verify_faithful_json(const cox_group *g, int32_t max_length,
                                    uint64_t budget, char **json_out,
                                    char **errmsg);

/* Enumerate connected diagrams up to isomorphism (n_min..n_max vertices,
 * n_max <= 9) and filter by a predicate such as "p=3 and q=1 and r=2"
 * (comparisons on p, q, r, n and kind equality joined by 'and'; empty or
 * NULL matches everything). alphabet example: "2,3,4,5,6,inf".
 * Results are JSON lines, one object per hit, in canonical order;
 * *truncated (when non-NULL) is set to 1 when limit cut the stream. */
cox_status cox_search_jsonl(int32_t n_min, int32_t n_max, const char *alphabet,
                            const char *where, uint64_t limit, int32_t workers,
                            char **jsonl_out, int32_t *truncated, char **errmsg);

#ifdef __cplusplus
}
#endif

#endif /* COXFORGE_H */
