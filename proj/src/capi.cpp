#include "ctw/ctw.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "ast.hpp"
#include "axioms.hpp"
#include "diagonal.hpp"
#include "goedel.hpp"
#include "interp.hpp"
#include "semantics.hpp"
#include "serial.hpp"
#include "syntax.hpp"
#include "tptp.hpp"

struct ctw_formula {
  ctw::FormulaPtr f;
};
struct ctw_bundle {
  ctw::AxiomBundle b;
};
struct ctw_interp {
  ctw::Interpretation i;
};
struct ctw_report {
  ctw::CheckReport r;
};

namespace {

char* dupString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void setErr(char** err, const std::string& msg) {
  if (err) *err = dupString(msg);
}

ctw_status invalid(char** err, const char* msg) {
  setErr(err, msg);
  return CTW_ERR_INVALID_ARGUMENT;
}

template <class F>
ctw_status guarded(char** err, F&& fn) {
  try {
    fn();
    return CTW_OK;
  } catch (const ctw::ParseError& e) {
    setErr(err, e.what());
    return CTW_ERR_PARSE;
  } catch (const ctw::SortError& e) {
    setErr(err, e.what());
    return CTW_ERR_SORT;
  } catch (const ctw::NotACodeError& e) {
    setErr(err, e.what());
    return CTW_ERR_NOT_A_CODE;
  } catch (const ctw::BudgetError& e) {
    setErr(err, e.what());
    return CTW_ERR_BUDGET;
  } catch (const ctw::DomainError& e) {
    setErr(err, e.what());
    return CTW_ERR_DOMAIN;
  } catch (const std::exception& e) {
    setErr(err, e.what());
    return CTW_ERR_INTERNAL;
  } catch (...) {
    setErr(err, "unknown error");
    return CTW_ERR_INTERNAL;
  }
}

bool parseNat(const char* s, ctw::Nat& out) {
  if (!s || !*s) return false;
  for (const char* p = s; *p; ++p)
    if (*p < '0' || *p > '9') return false;
  out = ctw::Nat(s);
  return true;
}

std::vector<ctw::FormulaPtr> poolOf(ctw_formula* const* phis, size_t n) {
  std::vector<ctw::FormulaPtr> v;
  v.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (!phis[i] || !phis[i]->f) throw ctw::DomainError("null formula handle in pool");
    v.push_back(phis[i]->f);
  }
  return v;
}

}  // namespace

extern "C" {

const char* ctw_version(void) { return "ctw 1.0.0"; }

void ctw_string_free(char* s) { std::free(s); }
void ctw_formula_free(ctw_formula* f) { delete f; }
void ctw_bundle_free(ctw_bundle* b) { delete b; }
void ctw_interp_free(ctw_interp* i) { delete i; }
void ctw_report_free(ctw_report* r) { delete r; }

void ctw_formula_list_free(ctw_formula** list, size_t n) {
  if (!list) return;
  for (size_t i = 0; i < n; ++i) delete list[i];
  std::free(list);
}

/* ---------- syntax ---------- */

ctw_status ctw_parse_formula(const char* text, ctw_formula** out, char** err) {
  if (!text || !out) return invalid(err, "ctw_parse_formula: null argument");
  return guarded(err, [&] { *out = new ctw_formula{ctw::parseFormula(text)}; });
}

ctw_status ctw_parse_formulas(const char* text, ctw_formula*** out, size_t* out_n,
                              char** err) {
  if (!text || !out || !out_n) return invalid(err, "ctw_parse_formulas: null argument");
  return guarded(err, [&] {
    std::vector<ctw::FormulaPtr> fs = ctw::parseFormulas(text);
    auto** arr = static_cast<ctw_formula**>(
        std::malloc(sizeof(ctw_formula*) * (fs.empty() ? 1 : fs.size())));
    if (!arr) throw std::bad_alloc();
    for (size_t i = 0; i < fs.size(); ++i) arr[i] = new ctw_formula{fs[i]};
    *out = arr;
    *out_n = fs.size();
  });
}

ctw_status ctw_render_formula(const ctw_formula* f, char** out, char** err) {
  if (!f || !f->f || !out) return invalid(err, "ctw_render_formula: null argument");
  return guarded(err, [&] { *out = dupString(ctw::renderFormula(f->f)); });
}

ctw_status ctw_desugar_formula(const ctw_formula* f, ctw_formula** out, char** err) {
  if (!f || !f->f || !out) return invalid(err, "ctw_desugar_formula: null argument");
  return guarded(err, [&] { *out = new ctw_formula{ctw::desugar(f->f)}; });
}

ctw_status ctw_big_or(ctw_formula* const* phis, size_t n, ctw_formula** out, char** err) {
  if ((!phis && n) || !out) return invalid(err, "ctw_big_or: null argument");
  return guarded(err, [&] { *out = new ctw_formula{ctw::bigOr(poolOf(phis, n))}; });
}

ctw_status ctw_big_and(ctw_formula* const* phis, size_t n, ctw_formula** out, char** err) {
  if ((!phis && n) || !out) return invalid(err, "ctw_big_and: null argument");
  return guarded(err, [&] { *out = new ctw_formula{ctw::bigAnd(poolOf(phis, n))}; });
}

ctw_status ctw_relativize(const ctw_formula* f, const char* alpha, ctw_formula** out,
                          char** err) {
  if (!f || !f->f || !alpha || !out) return invalid(err, "ctw_relativize: null argument");
  return guarded(err, [&] { *out = new ctw_formula{ctw::relativize(f->f, alpha)}; });
}

/* ---------- coding ---------- */

ctw_status ctw_encode_formula(const ctw_formula* f, char** out_decimal, char** err) {
  if (!f || !f->f || !out_decimal) return invalid(err, "ctw_encode_formula: null argument");
  return guarded(err, [&] { *out_decimal = dupString(ctw::encodeFormula(f->f).str()); });
}

ctw_status ctw_decode(const char* decimal, char** out_text, int* out_is_formula,
                      char** err) {
  if (!out_text || !out_is_formula) return invalid(err, "ctw_decode: null argument");
  ctw::Nat g;
  if (!parseNat(decimal, g)) return invalid(err, "ctw_decode: expected a decimal natural");
  return guarded(err, [&] {
    ctw::Decoded d = ctw::decode(g);
    if (d.formula) {
      *out_text = dupString(ctw::renderFormula(d.formula));
      *out_is_formula = 1;
    } else {
      *out_text = dupString(ctw::renderTerm(d.term));
      *out_is_formula = 0;
    }
  });
}

ctw_status ctw_is_code(const char* decimal, int* out, char** err) {
  if (!out) return invalid(err, "ctw_is_code: null argument");
  ctw::Nat g;
  if (!parseNat(decimal, g)) return invalid(err, "ctw_is_code: expected a decimal natural");
  return guarded(err, [&] { *out = ctw::isCode(g) ? 1 : 0; });
}

ctw_status ctw_is_sentence_a(const char* decimal, int* out, char** err) {
  if (!out) return invalid(err, "ctw_is_sentence_a: null argument");
  ctw::Nat g;
  if (!parseNat(decimal, g))
    return invalid(err, "ctw_is_sentence_a: expected a decimal natural");
  return guarded(err, [&] { *out = ctw::isSentenceA(g) ? 1 : 0; });
}

ctw_status ctw_diagonal_code(const char* decimal, char** out_decimal, char** err) {
  if (!out_decimal) return invalid(err, "ctw_diagonal_code: null argument");
  ctw::Nat g;
  if (!parseNat(decimal, g))
    return invalid(err, "ctw_diagonal_code: expected a decimal natural");
  return guarded(err, [&] { *out_decimal = dupString(ctw::diagonalCode(g).str()); });
}

ctw_status ctw_ack_bit(const char* x_decimal, const char* y_decimal, int* out, char** err) {
  if (!out) return invalid(err, "ctw_ack_bit: null argument");
  ctw::Nat x, y;
  if (!parseNat(x_decimal, x) || !parseNat(y_decimal, y))
    return invalid(err, "ctw_ack_bit: expected decimal naturals");
  return guarded(err, [&] { *out = ctw::ackBit(x, y) ? 1 : 0; });
}

/* ---------- object formulas ---------- */

ctw_status ctw_ind_sentence(const ctw_formula* psi, ctw_formula** out, char** err) {
  if (!psi || !psi->f || !out) return invalid(err, "ctw_ind_sentence: null argument");
  return guarded(err, [&] { *out = new ctw_formula{ctw::indSentence(psi->f)}; });
}

ctw_status ctw_ic_instance(const ctw_formula* psi, ctw_formula** out, char** err) {
  if (!psi || !psi->f || !out) return invalid(err, "ctw_ic_instance: null argument");
  return guarded(err, [&] { *out = new ctw_formula{ctw::icInstance(psi->f)}; });
}

ctw_status ctw_pc_u(ctw_formula** out, char** err) {
  if (!out) return invalid(err, "ctw_pc_u: null argument");
  return guarded(err, [&] { *out = new ctw_formula{ctw::pcU()}; });
}

ctw_status ctw_pc_phi(const ctw_formula* phi, ctw_formula** out, char** err) {
  if (!phi || !phi->f || !out) return invalid(err, "ctw_pc_phi: null argument");
  return guarded(err, [&] { *out = new ctw_formula{ctw::pcPhi(phi->f)}; });
}

ctw_status ctw_pc_of(const ctw_formula* phi, ctw_formula** out, char** err) {
  if (!phi || !phi->f || !out) return invalid(err, "ctw_pc_of: null argument");
  return guarded(err, [&] { *out = new ctw_formula{ctw::pcOf(phi->f)}; });
}

ctw_status ctw_theta_disjunction(ctw_formula* const* phis, size_t n, ctw_formula** out,
                                 char** err) {
  if ((!phis && n) || !out) return invalid(err, "ctw_theta_disjunction: null argument");
  return guarded(err,
                 [&] { *out = new ctw_formula{ctw::thetaDisjunction(poolOf(phis, n))}; });
}

ctw_status ctw_theta_indexed(ctw_formula** out, char** err) {
  if (!out) return invalid(err, "ctw_theta_indexed: null argument");
  return guarded(err, [&] { *out = new ctw_formula{ctw::thetaIndexed()}; });
}

ctw_status ctw_biconditional(const ctw_formula* phi, ctw_formula** out, char** err) {
  if (!phi || !phi->f || !out) return invalid(err, "ctw_biconditional: null argument");
  return guarded(err, [&] { *out = new ctw_formula{ctw::biconditional(phi->f)}; });
}

ctw_status ctw_fixed_point(const ctw_formula* delta, ctw_formula** out_gamma,
                           ctw_formula** out_delta_prime, ctw_formula** out_unfolded,
                           char** err) {
  if (!delta || !delta->f || !out_gamma || !out_delta_prime || !out_unfolded)
    return invalid(err, "ctw_fixed_point: null argument");
  return guarded(err, [&] {
    ctw::FixedPointResult r = ctw::fixedPoint(delta->f);
    *out_gamma = new ctw_formula{r.gamma};
    *out_delta_prime = new ctw_formula{r.delta};
    *out_unfolded = new ctw_formula{r.unfolded};
  });
}

/* ---------- bundles ---------- */

ctw_status ctw_bundle_q(ctw_bundle** out, char** err) {
  if (!out) return invalid(err, "ctw_bundle_q: null argument");
  return guarded(err, [&] { *out = new ctw_bundle{ctw::qAxioms()}; });
}

ctw_status ctw_bundle_order(ctw_bundle** out, char** err) {
  if (!out) return invalid(err, "ctw_bundle_order: null argument");
  return guarded(err, [&] { *out = new ctw_bundle{ctw::orderAxioms()}; });
}

ctw_status ctw_bundle_tarski(ctw_formula* const* sents, size_t n, ctw_bundle** out,
                             char** err) {
  if ((!sents && n) || !out) return invalid(err, "ctw_bundle_tarski: null argument");
  return guarded(err, [&] {
    using namespace ctw;
    std::vector<std::pair<TermPtr, TermPtr>> termPool = {
        {numeral(0), numeral(0)}, {numeral(1), numeral(1)}, {numeral(0), numeral(1)}};
    std::vector<std::pair<FormulaPtr, Nat>> formPool = {
        {eq(var("x"), var("x")), Nat(4)}, {lt(var("x"), num(3)), Nat(4)}};
    *out = new ctw_bundle{tarskiInstances(poolOf(sents, n), termPool, formPool)};
  });
}

ctw_status ctw_bundle_dtb(ctw_formula* const* pool, size_t n, ctw_bundle** out,
                          char** err) {
  if ((!pool && n) || !out) return invalid(err, "ctw_bundle_dtb: null argument");
  return guarded(err, [&] { *out = new ctw_bundle{ctw::dtbBundle(poolOf(pool, n))}; });
}

ctw_status ctw_bundle_hbl(const ctw_formula* phi, const ctw_formula* psi, ctw_bundle** out,
                          char** err) {
  if (!phi || !phi->f || !psi || !psi->f || !out)
    return invalid(err, "ctw_bundle_hbl: null argument");
  return guarded(err, [&] { *out = new ctw_bundle{ctw::hblObligations(phi->f, psi->f)}; });
}

ctw_status ctw_bundle_loeb(ctw_formula* const* pool, size_t n, ctw_bundle** out,
                           char** err) {
  if ((!pool && n) || !out) return invalid(err, "ctw_bundle_loeb: null argument");
  return guarded(err, [&] { *out = new ctw_bundle{ctw::loebBundle(poolOf(pool, n))}; });
}

ctw_status ctw_bundle_to_text(const ctw_bundle* b, char** out, char** err) {
  if (!b || !out) return invalid(err, "ctw_bundle_to_text: null argument");
  return guarded(err, [&] { *out = dupString(ctw::bundleToText(b->b)); });
}

ctw_status ctw_bundle_from_text(const char* text, ctw_bundle** out, char** err) {
  if (!text || !out) return invalid(err, "ctw_bundle_from_text: null argument");
  return guarded(err, [&] { *out = new ctw_bundle{ctw::bundleFromText(text)}; });
}

ctw_status ctw_bundle_to_tptp(const ctw_bundle* b, char** out_text, char** out_warnings,
                              char** err) {
  if (!b || !out_text) return invalid(err, "ctw_bundle_to_tptp: null argument");
  return guarded(err, [&] {
    ctw::TptpResult r = ctw::toTptp(b->b);
    std::string joined;
    for (const std::string& w : r.warnings) {
      if (!joined.empty()) joined += "\n";
      joined += w;
    }
    *out_text = dupString(r.text);
    if (out_warnings) *out_warnings = dupString(joined);
  });
}

ctw_status ctw_tptp_selfcheck(const char* tptp_text, size_t* out_guarded, char** err) {
  if (!tptp_text) return invalid(err, "ctw_tptp_selfcheck: null argument");
  return guarded(err, [&] {
    std::size_t n = ctw::auditGuards(ctw::parseFof(tptp_text));
    if (out_guarded) *out_guarded = n;
  });
}

/* ---------- interpretations ---------- */

ctw_status ctw_build_iota(const ctw_formula* psi, ctw_formula* const* pool, size_t n,
                          const char* stage_decimal, ctw_interp** out, char** err) {
  if (!psi || !psi->f || (!pool && n) || !out)
    return invalid(err, "ctw_build_iota: null argument");
  ctw::Nat stage;
  if (!parseNat(stage_decimal, stage))
    return invalid(err, "ctw_build_iota: expected a decimal stage");
  return guarded(err,
                 [&] { *out = new ctw_interp{ctw::buildIota(psi->f, poolOf(pool, n), stage)}; });
}

ctw_status ctw_interp_to_text(const ctw_interp* i, char** out, char** err) {
  if (!i || !out) return invalid(err, "ctw_interp_to_text: null argument");
  return guarded(err, [&] { *out = dupString(ctw::interpretationToText(i->i)); });
}

ctw_status ctw_interp_from_text(const char* text, ctw_interp** out, char** err) {
  if (!text || !out) return invalid(err, "ctw_interp_from_text: null argument");
  return guarded(err, [&] { *out = new ctw_interp{ctw::interpretationFromText(text)}; });
}

ctw_status ctw_translate(const ctw_interp* i, const ctw_formula* phi, ctw_formula** out,
                         char** err) {
  if (!i || !phi || !phi->f || !out) return invalid(err, "ctw_translate: null argument");
  return guarded(err, [&] { *out = new ctw_formula{ctw::translate(i->i, phi->f)}; });
}

ctw_status ctw_size_profile_csv(const ctw_formula* psi, ctw_formula* const* pool, size_t n,
                                const char* n_max_decimal, const char* budget_decimal,
                                char** out_csv, char** err) {
  if (!psi || !psi->f || (!pool && n) || !out_csv)
    return invalid(err, "ctw_size_profile_csv: null argument");
  ctw::Nat nMax, budget;
  if (!parseNat(n_max_decimal, nMax) || !parseNat(budget_decimal, budget))
    return invalid(err, "ctw_size_profile_csv: expected decimal naturals");
  return guarded(err, [&] {
    ctw::SizeReport r = ctw::sizeProfile(psi->f, poolOf(pool, n), nMax, budget);
    *out_csv = dupString(ctw::sizeProfileCsv(r));
  });
}

/* ---------- evaluation and checks ---------- */

ctw_status ctw_eval_sentence(const ctw_formula* f, const char* fuel_decimal, int* out_tri,
                             char** err) {
  if (!f || !f->f || !out_tri) return invalid(err, "ctw_eval_sentence: null argument");
  ctw::Nat fuel;
  if (!parseNat(fuel_decimal, fuel))
    return invalid(err, "ctw_eval_sentence: expected a decimal fuel");
  return guarded(err,
                 [&] { *out_tri = static_cast<int>(ctw::evalSentence(f->f, fuel)); });
}

ctw_status ctw_seed_corpus(char** out_text, char** err) {
  if (!out_text) return invalid(err, "ctw_seed_corpus: null argument");
  return guarded(err, [&] {
    std::string text;
    for (const ctw::FormulaPtr& f : ctw::seedCorpus()) {
      text += ctw::renderFormula(f);
      text += "\n";
    }
    *out_text = dupString(text);
  });
}

namespace {

ctw_status checkArgs(const char* fuel_decimal, ctw::Nat& fuel, char** err, const char* who) {
  if (!parseNat(fuel_decimal, fuel)) {
    setErr(err, std::string(who) + ": expected a decimal fuel");
    return CTW_ERR_INVALID_ARGUMENT;
  }
  return CTW_OK;
}

}  // namespace

ctw_status ctw_check_dc(ctw_formula* const* corpus, size_t n, size_t s_max,
                        const char* fuel_decimal, ctw_report** out, char** err) {
  if ((!corpus && n) || !out) return invalid(err, "ctw_check_dc: null argument");
  ctw::Nat fuel;
  if (ctw_status st = checkArgs(fuel_decimal, fuel, err, "ctw_check_dc")) return st;
  return guarded(err,
                 [&] { *out = new ctw_report{ctw::suiteDC(poolOf(corpus, n), s_max, fuel)}; });
}

ctw_status ctw_check_cc(ctw_formula* const* corpus, size_t n, size_t s_max,
                        const char* fuel_decimal, ctw_report** out, char** err) {
  if ((!corpus && n) || !out) return invalid(err, "ctw_check_cc: null argument");
  ctw::Nat fuel;
  if (ctw_status st = checkArgs(fuel_decimal, fuel, err, "ctw_check_cc")) return st;
  return guarded(err,
                 [&] { *out = new ctw_report{ctw::suiteCC(poolOf(corpus, n), s_max, fuel)}; });
}

ctw_status ctw_check_star(ctw_formula* const* phis, size_t n, const char* fuel_decimal,
                          ctw_report** out, char** err) {
  if ((!phis && n) || !out) return invalid(err, "ctw_check_star: null argument");
  ctw::Nat fuel;
  if (ctw_status st = checkArgs(fuel_decimal, fuel, err, "ctw_check_star")) return st;
  return guarded(
      err, [&] { *out = new ctw_report{ctw::checkClaimStar(poolOf(phis, n), fuel)}; });
}

ctw_status ctw_check_triangle(ctw_formula* const* corpus, size_t n, size_t max_pool_size,
                              const char* max_n_decimal, const char* fuel_decimal,
                              const char* budget_decimal, ctw_report** out, char** err) {
  if ((!corpus && n) || !out) return invalid(err, "ctw_check_triangle: null argument");
  ctw::Nat maxN, fuel, budget;
  if (!parseNat(max_n_decimal, maxN) || !parseNat(fuel_decimal, fuel) ||
      !parseNat(budget_decimal, budget))
    return invalid(err, "ctw_check_triangle: expected decimal naturals");
  return guarded(err, [&] {
    *out = new ctw_report{
        ctw::suiteTriangle(poolOf(corpus, n), max_pool_size, maxN, fuel, budget)};
  });
}

ctw_status ctw_check_piecewise(const ctw_formula* phi, const char* u_decimal,
                               const char* fuel_decimal, ctw_report** out, char** err) {
  if (!phi || !phi->f || !out) return invalid(err, "ctw_check_piecewise: null argument");
  ctw::Nat u, fuel;
  if (!parseNat(u_decimal, u) || !parseNat(fuel_decimal, fuel))
    return invalid(err, "ctw_check_piecewise: expected decimal naturals");
  return guarded(err,
                 [&] { *out = new ctw_report{ctw::checkPiecewise(phi->f, u, fuel)}; });
}

ctw_status ctw_check_dtb(const ctw_formula* psi, ctw_formula* const* pool, size_t n,
                         const char* n_max_decimal, const char* fuel_decimal,
                         ctw_report** out, char** err) {
  if (!psi || !psi->f || (!pool && n) || !out)
    return invalid(err, "ctw_check_dtb: null argument");
  ctw::Nat nMax, fuel;
  if (!parseNat(n_max_decimal, nMax) || !parseNat(fuel_decimal, fuel))
    return invalid(err, "ctw_check_dtb: expected decimal naturals");
  return guarded(err, [&] {
    *out = new ctw_report{ctw::checkDtbFinite(psi->f, poolOf(pool, n), nMax, fuel)};
  });
}

ctw_status ctw_report_pass(const ctw_report* r, int* out, char** err) {
  if (!r || !out) return invalid(err, "ctw_report_pass: null argument");
  *out = r->r.pass ? 1 : 0;
  return CTW_OK;
}

ctw_status ctw_report_to_json(const ctw_report* r, char** out, char** err) {
  if (!r || !out) return invalid(err, "ctw_report_to_json: null argument");
  return guarded(err, [&] { *out = dupString(ctw::reportToJson(r->r)); });
}

}  // extern "C"
