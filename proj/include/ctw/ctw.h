#ifndef CTW_H
#define CTW_H

/*
 * C interface to the compositional-truth workbench.
 *
 * Conventions:
 *   - Every fallible function returns a ctw_status and reports results
 *     through out-parameters.  On failure the out-parameters are untouched
 *     and, when `err` is non-NULL, *err receives a malloc'd message the
 *     caller frees with ctw_string_free.
 *   - All returned strings are malloc'd; free them with ctw_string_free.
 *   - Handles are opaque; free them with the matching *_free function.
 *     NULL is always safe to free.
 *   - Natural-number parameters and results travel as decimal strings so
 *     arbitrary-precision values survive the ABI.
 *   - Formulas are written in the workbench S-expression syntax, e.g.
 *     "(all x (imp (lt (var x) (num 3)) (lt (var x) (num 4))))".
 *   - Three-valued results use 0 = false, 1 = true, 2 = unknown.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ctw_status {
  CTW_OK = 0,
  CTW_ERR_PARSE = 1,            /* malformed text input */
  CTW_ERR_SORT = 2,             /* sort discipline violation */
  CTW_ERR_DOMAIN = 3,           /* structural precondition violation */
  CTW_ERR_NOT_A_CODE = 4,       /* decode applied outside the code range */
  CTW_ERR_BUDGET = 5,           /* node budget exceeded */
  CTW_ERR_INVALID_ARGUMENT = 6, /* NULL handle, bad decimal, bad enum */
  CTW_ERR_INTERNAL = 7
} ctw_status;

typedef struct ctw_formula ctw_formula;
typedef struct ctw_bundle ctw_bundle;
typedef struct ctw_interp ctw_interp;
typedef struct ctw_report ctw_report;

const char* ctw_version(void);

void ctw_string_free(char* s);
void ctw_formula_free(ctw_formula* f);
void ctw_bundle_free(ctw_bundle* b);
void ctw_interp_free(ctw_interp* i);
void ctw_report_free(ctw_report* r);
/* Frees a formula array returned by ctw_parse_formulas (and each element). */
void ctw_formula_list_free(ctw_formula** list, size_t n);

/* ---------- syntax ---------- */

ctw_status ctw_parse_formula(const char* text, ctw_formula** out, char** err);
/* Whitespace-separated sequence of formulas, e.g. a corpus file's content. */
ctw_status ctw_parse_formulas(const char* text, ctw_formula*** out, size_t* out_n,
                              char** err);
ctw_status ctw_render_formula(const ctw_formula* f, char** out, char** err);
ctw_status ctw_desugar_formula(const ctw_formula* f, ctw_formula** out, char** err);
ctw_status ctw_big_or(ctw_formula* const* phis, size_t n, ctw_formula** out, char** err);
ctw_status ctw_big_and(ctw_formula* const* phis, size_t n, ctw_formula** out, char** err);
ctw_status ctw_relativize(const ctw_formula* f, const char* alpha, ctw_formula** out,
                          char** err);

/* ---------- coding ---------- */

ctw_status ctw_encode_formula(const ctw_formula* f, char** out_decimal, char** err);
/* Decodes a value; renders the coded term or formula. */
ctw_status ctw_decode(const char* decimal, char** out_text, int* out_is_formula,
                      char** err);
ctw_status ctw_is_code(const char* decimal, int* out, char** err);
ctw_status ctw_is_sentence_a(const char* decimal, int* out, char** err);
ctw_status ctw_diagonal_code(const char* decimal, char** out_decimal, char** err);
ctw_status ctw_ack_bit(const char* x_decimal, const char* y_decimal, int* out, char** err);

/* ---------- object formulas ---------- */

ctw_status ctw_ind_sentence(const ctw_formula* psi, ctw_formula** out, char** err);
ctw_status ctw_ic_instance(const ctw_formula* psi, ctw_formula** out, char** err);
ctw_status ctw_pc_u(ctw_formula** out, char** err);
ctw_status ctw_pc_phi(const ctw_formula* phi, ctw_formula** out, char** err);
ctw_status ctw_pc_of(const ctw_formula* phi, ctw_formula** out, char** err);
ctw_status ctw_theta_disjunction(ctw_formula* const* phis, size_t n, ctw_formula** out,
                                 char** err);
ctw_status ctw_theta_indexed(ctw_formula** out, char** err);
ctw_status ctw_biconditional(const ctw_formula* phi, ctw_formula** out, char** err);
/* gamma = fixed point of delta, delta_prime = the diagonalized unary formula,
 * unfolded = delta at gamma's code. */
ctw_status ctw_fixed_point(const ctw_formula* delta, ctw_formula** out_gamma,
                           ctw_formula** out_delta_prime, ctw_formula** out_unfolded,
                           char** err);

/* ---------- bundles ---------- */

ctw_status ctw_bundle_q(ctw_bundle** out, char** err);
ctw_status ctw_bundle_order(ctw_bundle** out, char** err);
/* Compositional-truth instances over the sentence pool, with a fixed small
 * built-in pool of term pairs and bounded existential templates. */
ctw_status ctw_bundle_tarski(ctw_formula* const* sents, size_t n, ctw_bundle** out,
                             char** err);
ctw_status ctw_bundle_dtb(ctw_formula* const* pool, size_t n, ctw_bundle** out, char** err);
ctw_status ctw_bundle_hbl(const ctw_formula* phi, const ctw_formula* psi, ctw_bundle** out,
                          char** err);
ctw_status ctw_bundle_loeb(ctw_formula* const* pool, size_t n, ctw_bundle** out, char** err);
ctw_status ctw_bundle_to_text(const ctw_bundle* b, char** out, char** err);
ctw_status ctw_bundle_from_text(const char* text, ctw_bundle** out, char** err);
/* Emits the problem file; *out_warnings (optional) receives the newline-
 * joined warning list ("" when clean). */
ctw_status ctw_bundle_to_tptp(const ctw_bundle* b, char** out_text, char** out_warnings,
                              char** err);
/* Re-parses emitted problem text and audits sort guards; CTW_OK when clean.
 * *out_guarded (optional) receives the number of guarded bindings. */
ctw_status ctw_tptp_selfcheck(const char* tptp_text, size_t* out_guarded, char** err);

/* ---------- interpretations ---------- */

ctw_status ctw_build_iota(const ctw_formula* psi, ctw_formula* const* pool, size_t n,
                          const char* stage_decimal, ctw_interp** out, char** err);
ctw_status ctw_interp_to_text(const ctw_interp* i, char** out, char** err);
ctw_status ctw_interp_from_text(const char* text, ctw_interp** out, char** err);
ctw_status ctw_translate(const ctw_interp* i, const ctw_formula* phi, ctw_formula** out,
                         char** err);
ctw_status ctw_size_profile_csv(const ctw_formula* psi, ctw_formula* const* pool, size_t n,
                                const char* n_max_decimal, const char* budget_decimal,
                                char** out_csv, char** err);

/* ---------- evaluation and checks ---------- */

ctw_status ctw_eval_sentence(const ctw_formula* f, const char* fuel_decimal, int* out_tri,
                             char** err);
/* The built-in 16-sentence corpus, one S-expression per line. */
ctw_status ctw_seed_corpus(char** out_text, char** err);

ctw_status ctw_check_dc(ctw_formula* const* corpus, size_t n, size_t s_max,
                        const char* fuel_decimal, ctw_report** out, char** err);
ctw_status ctw_check_cc(ctw_formula* const* corpus, size_t n, size_t s_max,
                        const char* fuel_decimal, ctw_report** out, char** err);
ctw_status ctw_check_star(ctw_formula* const* phis, size_t n, const char* fuel_decimal,
                          ctw_report** out, char** err);
ctw_status ctw_check_triangle(ctw_formula* const* corpus, size_t n, size_t max_pool_size,
                              const char* max_n_decimal, const char* fuel_decimal,
                              const char* budget_decimal, ctw_report** out, char** err);
ctw_status ctw_check_piecewise(const ctw_formula* phi, const char* u_decimal,
                               const char* fuel_decimal, ctw_report** out, char** err);
ctw_status ctw_check_dtb(const ctw_formula* psi, ctw_formula* const* pool, size_t n,
                         const char* n_max_decimal, const char* fuel_decimal,
                         ctw_report** out, char** err);

ctw_status ctw_report_pass(const ctw_report* r, int* out, char** err);
ctw_status ctw_report_to_json(const ctw_report* r, char** out, char** err);

#ifdef __cplusplus
}
#endif

#endif /* CTW_H */
