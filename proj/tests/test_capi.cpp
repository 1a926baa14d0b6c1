#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include <ctw/ctw.h>

// Exercises the shared library through its C surface only.

namespace {

// tiny RAII helpers so failures do not leak
struct Str {
  char* p = nullptr;
  ~Str() { ctw_string_free(p); }
  std::string view() const { return p ? std::string(p) : std::string(); }
};
struct Fm {
  ctw_formula* p = nullptr;
  ~Fm() { ctw_formula_free(p); }
};
struct Bd {
  ctw_bundle* p = nullptr;
  ~Bd() { ctw_bundle_free(p); }
};
struct Ip {
  ctw_interp* p = nullptr;
  ~Ip() { ctw_interp_free(p); }
};
struct Rp {
  ctw_report* p = nullptr;
  ~Rp() { ctw_report_free(p); }
};

ctw_formula* mustParse(const char* text) {
  ctw_formula* f = nullptr;
  char* err = nullptr;
  REQUIRE(ctw_parse_formula(text, &f, &err) == CTW_OK);
  REQUIRE(f != nullptr);
  return f;
}

std::string render(const ctw_formula* f) {
  Str s;
  char* err = nullptr;
  REQUIRE(ctw_render_formula(f, &s.p, &err) == CTW_OK);
  return s.view();
}

}  // namespace

TEST_CASE("version string") {
  const char* v = ctw_version();
  REQUIRE(v != nullptr);
  CHECK(std::string(v).find("ctw") != std::string::npos);
}

TEST_CASE("free functions accept null") {
  ctw_string_free(nullptr);
  ctw_formula_free(nullptr);
  ctw_bundle_free(nullptr);
  ctw_interp_free(nullptr);
  ctw_report_free(nullptr);
  ctw_formula_list_free(nullptr, 0);
}

TEST_CASE("parse, render, desugar") {
  Fm f{mustParse("(and (eq z z) (lt z (s z)))")};
  CHECK(render(f.p) == "(and (eq z z) (lt z (s z)))");

  Fm d;
  char* err = nullptr;
  REQUIRE(ctw_desugar_formula(f.p, &d.p, &err) == CTW_OK);
  CHECK(render(d.p) == "(not (or (not (eq z z)) (not (lt z (s z)))))");

  // parse errors surface with the code and a message
  ctw_formula* bad = nullptr;
  err = nullptr;
  CHECK(ctw_parse_formula("(eq z", &bad, &err) == CTW_ERR_PARSE);
  CHECK(bad == nullptr);
  REQUIRE(err != nullptr);
  CHECK(std::string(err).find("offset") != std::string::npos);
  ctw_string_free(err);

  err = nullptr;
  CHECK(ctw_parse_formula("(ex-i a (eq (var a) z))", &bad, &err) == CTW_ERR_SORT);
  ctw_string_free(err);

  // null arguments are invalid, not crashes
  CHECK(ctw_parse_formula(nullptr, &bad, &err) == CTW_ERR_INVALID_ARGUMENT);
  ctw_string_free(err);
  err = nullptr;
  CHECK(ctw_render_formula(nullptr, nullptr, &err) == CTW_ERR_INVALID_ARGUMENT);
  ctw_string_free(err);
}

TEST_CASE("parse_formulas and list free") {
  ctw_formula** list = nullptr;
  size_t n = 0;
  char* err = nullptr;
  REQUIRE(ctw_parse_formulas("(eq z z) (lt z (s z))\n(eq z (s z))", &list, &n, &err) ==
          CTW_OK);
  REQUIRE(n == 3);
  CHECK(render(list[0]) == "(eq z z)");
  CHECK(render(list[2]) == "(eq z (s z))");
  ctw_formula_list_free(list, n);

  list = nullptr;
  n = 0;
  CHECK(ctw_parse_formulas("(eq z", &list, &n, &err) == CTW_ERR_PARSE);
  CHECK(list == nullptr);
  ctw_string_free(err);
}

TEST_CASE("big_or / big_and / relativize") {
  Fm a{mustParse("(eq z z)")};
  Fm b{mustParse("(lt z (s z))")};
  ctw_formula* pool[2] = {a.p, b.p};
  char* err = nullptr;

  Fm o;
  REQUIRE(ctw_big_or(pool, 2, &o.p, &err) == CTW_OK);
  CHECK(render(o.p) == "(or (eq z z) (lt z (s z)))");

  Fm c;
  REQUIRE(ctw_big_and(pool, 2, &c.p, &err) == CTW_OK);
  CHECK(render(c.p) == "(not (or (not (eq z z)) (not (lt z (s z)))))");

  ctw_formula* empty = nullptr;
  err = nullptr;
  CHECK(ctw_big_or(nullptr, 0, &empty, &err) == CTW_ERR_DOMAIN);
  ctw_string_free(err);

  Fm idx{mustParse("(ex-i b (ieq b b))")};
  Fm r;
  err = nullptr;
  REQUIRE(ctw_relativize(idx.p, "a", &r.p, &err) == CTW_OK);
  CHECK(render(r.p) == "(ex-i b (not (or (not (prec b a)) (not (ieq b b)))))");
  ctw_formula* bad = nullptr;
  CHECK(ctw_relativize(idx.p, "NotAName", &bad, &err) == CTW_ERR_DOMAIN);
  ctw_string_free(err);
}

TEST_CASE("coding functions") {
  Fm f{mustParse("(eq z z)")};
  char* err = nullptr;

  Str code;
  REQUIRE(ctw_encode_formula(f.p, &code.p, &err) == CTW_OK);
  CHECK(code.view() == "24627");

  Str text;
  int isFormula = 0;
  REQUIRE(ctw_decode("24627", &text.p, &isFormula, &err) == CTW_OK);
  CHECK(text.view() == "(eq z z)");
  CHECK(isFormula == 1);

  Str termText;
  isFormula = 1;
  REQUIRE(ctw_decode("35", &termText.p, &isFormula, &err) == CTW_OK);
  CHECK(termText.view() == "z");
  CHECK(isFormula == 0);

  char* none = nullptr;
  CHECK(ctw_decode("6", &none, &isFormula, &err) == CTW_ERR_NOT_A_CODE);
  ctw_string_free(err);
  err = nullptr;
  CHECK(ctw_decode("not-a-number", &none, &isFormula, &err) == CTW_ERR_INVALID_ARGUMENT);
  ctw_string_free(err);

  int flag = -1;
  REQUIRE(ctw_is_code("24627", &flag, &err) == CTW_OK);
  CHECK(flag == 1);
  REQUIRE(ctw_is_code("6", &flag, &err) == CTW_OK);
  CHECK(flag == 0);

  REQUIRE(ctw_is_sentence_a("24627", &flag, &err) == CTW_OK);
  CHECK(flag == 1);
  REQUIRE(ctw_is_sentence_a("35", &flag, &err) == CTW_OK);
  CHECK(flag == 0);

  // diagonal code of a unary matrix
  Fm unary{mustParse("(eq (var x) z)")};
  Str unaryCode;
  REQUIRE(ctw_encode_formula(unary.p, &unaryCode.p, &err) == CTW_OK);
  Str diag;
  REQUIRE(ctw_diagonal_code(unaryCode.p, &diag.p, &err) == CTW_OK);
  REQUIRE(ctw_is_sentence_a(diag.p, &flag, &err) == CTW_OK);
  CHECK(flag == 1);
  char* noDiag = nullptr;
  CHECK(ctw_diagonal_code("24627", &noDiag, &err) == CTW_ERR_DOMAIN);
  ctw_string_free(err);

  REQUIRE(ctw_ack_bit("0", "13", &flag, &err) == CTW_OK);
  CHECK(flag == 1);
  REQUIRE(ctw_ack_bit("1", "13", &flag, &err) == CTW_OK);
  CHECK(flag == 0);
}

TEST_CASE("object formulas") {
  char* err = nullptr;
  Fm psi{mustParse("(eq (var x) z)")};

  Fm ind;
  REQUIRE(ctw_ind_sentence(psi.p, &ind.p, &err) == CTW_OK);
  CHECK(render(ind.p).find("(imp") == 0);

  Fm ic;
  REQUIRE(ctw_ic_instance(psi.p, &ic.p, &err) == CTW_OK);
  CHECK(render(ic.p).find("(tru") == 0);

  Fm u;
  REQUIRE(ctw_pc_u(&u.p, &err) == CTW_OK);
  CHECK(render(u.p).find("(all u") == 0);

  Fm p;
  REQUIRE(ctw_pc_phi(psi.p, &p.p, &err) == CTW_OK);
  Fm pof;
  REQUIRE(ctw_pc_of(psi.p, &pof.p, &err) == CTW_OK);

  Fm a{mustParse("(eq z z)")};
  Fm b{mustParse("(eq z (s z))")};
  ctw_formula* pool[2] = {a.p, b.p};
  Fm theta;
  REQUIRE(ctw_theta_disjunction(pool, 2, &theta.p, &err) == CTW_OK);

  Fm thetaIdx;
  REQUIRE(ctw_theta_indexed(&thetaIdx.p, &err) == CTW_OK);
  CHECK(render(thetaIdx.p) == "(all-i a (itru a (var x)))");

  Fm bic;
  REQUIRE(ctw_biconditional(a.p, &bic.p, &err) == CTW_OK);
  CHECK(render(bic.p).find("(all-i") == 0);
  ctw_formula* bad = nullptr;
  CHECK(ctw_biconditional(psi.p, &bad, &err) == CTW_ERR_DOMAIN);
  ctw_string_free(err);

  Fm delta{mustParse("(not (tru (var y)))")};
  Fm gamma, dprime, unfolded;
  err = nullptr;
  REQUIRE(ctw_fixed_point(delta.p, &gamma.p, &dprime.p, &unfolded.p, &err) == CTW_OK);
  CHECK(render(gamma.p).find("(ex") == 0);
  CHECK(render(unfolded.p).find("(not (tru (num ") == 0);
}

TEST_CASE("bundles: builders, serializer, prover export") {
  char* err = nullptr;

  Bd q;
  REQUIRE(ctw_bundle_q(&q.p, &err) == CTW_OK);
  Bd order;
  REQUIRE(ctw_bundle_order(&order.p, &err) == CTW_OK);

  Fm a{mustParse("(eq z z)")};
  ctw_formula* pool[1] = {a.p};

  Bd tarski;
  REQUIRE(ctw_bundle_tarski(pool, 1, &tarski.p, &err) == CTW_OK);
  Bd dtb;
  REQUIRE(ctw_bundle_dtb(pool, 1, &dtb.p, &err) == CTW_OK);
  Bd loeb;
  REQUIRE(ctw_bundle_loeb(pool, 1, &loeb.p, &err) == CTW_OK);
  Fm phi{mustParse("(eq z z)")};
  Fm psi2{mustParse("(lt z (s z))")};
  Bd hbl;
  REQUIRE(ctw_bundle_hbl(phi.p, psi2.p, &hbl.p, &err) == CTW_OK);

  // empty pools are allowed where the math allows them
  Bd emptyDtb;
  REQUIRE(ctw_bundle_dtb(nullptr, 0, &emptyDtb.p, &err) == CTW_OK);

  Str text;
  REQUIRE(ctw_bundle_to_text(dtb.p, &text.p, &err) == CTW_OK);
  CHECK(text.view().find("(bundle dtb") == 0);
  Bd back;
  REQUIRE(ctw_bundle_from_text(text.p, &back.p, &err) == CTW_OK);
  Str text2;
  REQUIRE(ctw_bundle_to_text(back.p, &text2.p, &err) == CTW_OK);
  CHECK(text.view() == text2.view());

  ctw_bundle* bad = nullptr;
  CHECK(ctw_bundle_from_text("(not a bundle)", &bad, &err) == CTW_ERR_PARSE);
  ctw_string_free(err);

  Str tptp, warnings;
  err = nullptr;
  REQUIRE(ctw_bundle_to_tptp(dtb.p, &tptp.p, &warnings.p, &err) == CTW_OK);
  CHECK(tptp.view().find("fof(") != std::string::npos);
  size_t guarded = 0;
  REQUIRE(ctw_tptp_selfcheck(tptp.p, &guarded, &err) == CTW_OK);
  CHECK(guarded > 0);

  err = nullptr;
  CHECK(ctw_tptp_selfcheck("fof(a, axiom, (! [X] : p(X))).", &guarded, &err) ==
        CTW_ERR_DOMAIN);
  ctw_string_free(err);
}

TEST_CASE("interpretations through the C surface") {
  char* err = nullptr;
  Fm psi{mustParse("(eq z (s z))")};
  Fm a{mustParse("(eq z z)")};
  ctw_formula* pool[1] = {a.p};

  Ip iota;
  REQUIRE(ctw_build_iota(psi.p, pool, 1, "2", &iota.p, &err) == CTW_OK);

  Str text;
  REQUIRE(ctw_interp_to_text(iota.p, &text.p, &err) == CTW_OK);
  CHECK(text.view().find("(interpretation") == 0);
  Ip back;
  REQUIRE(ctw_interp_from_text(text.p, &back.p, &err) == CTW_OK);
  Str text2;
  REQUIRE(ctw_interp_to_text(back.p, &text2.p, &err) == CTW_OK);
  CHECK(text.view() == text2.view());

  Fm claim{mustParse("(ex-i g (ieq g g))")};
  Fm t;
  REQUIRE(ctw_translate(iota.p, claim.p, &t.p, &err) == CTW_OK);
  int tri = -1;
  REQUIRE(ctw_eval_sentence(t.p, "32", &tri, &err) == CTW_OK);
  CHECK(tri == 1);

  Str csv;
  REQUIRE(ctw_size_profile_csv(psi.p, pool, 1, "2", "0", &csv.p, &err) == CTW_OK);
  CHECK(csv.view().substr(0, 17) == "n,literal,shared\n");

  // budget trips cleanly
  char* noCsv = nullptr;
  CHECK(ctw_size_profile_csv(psi.p, pool, 1, "3", "10", &noCsv, &err) == CTW_ERR_BUDGET);
  ctw_string_free(err);

  // bad stage number
  ctw_interp* noIota = nullptr;
  err = nullptr;
  CHECK(ctw_build_iota(psi.p, pool, 1, "2x", &noIota, &err) == CTW_ERR_INVALID_ARGUMENT);
  ctw_string_free(err);
}

TEST_CASE("evaluation and the seed corpus") {
  char* err = nullptr;
  Fm t{mustParse("(eq z z)")};
  Fm f{mustParse("(eq z (s z))")};
  Fm u{mustParse("(ex x (eq (* (var x) (var x)) (num 1000000)))")};
  int tri = -1;
  REQUIRE(ctw_eval_sentence(t.p, "16", &tri, &err) == CTW_OK);
  CHECK(tri == 1);
  REQUIRE(ctw_eval_sentence(f.p, "16", &tri, &err) == CTW_OK);
  CHECK(tri == 0);
  REQUIRE(ctw_eval_sentence(u.p, "4", &tri, &err) == CTW_OK);
  CHECK(tri == 2);

  Fm open{mustParse("(eq (var x) z)")};
  CHECK(ctw_eval_sentence(open.p, "16", &tri, &err) == CTW_ERR_DOMAIN);
  ctw_string_free(err);
  err = nullptr;
  Fm idx{mustParse("(ex-i a (ieq a a))")};
  CHECK(ctw_eval_sentence(idx.p, "16", &tri, &err) == CTW_ERR_SORT);
  ctw_string_free(err);

  Str corpus;
  err = nullptr;
  REQUIRE(ctw_seed_corpus(&corpus.p, &err) == CTW_OK);
  std::string body = corpus.view();
  CHECK(std::count(body.begin(), body.end(), '\n') == 16);
  CHECK(body.find("(eq z z)") == 0);
}

TEST_CASE("check functions and reports") {
  char* err = nullptr;
  Fm a{mustParse("(eq z z)")};
  Fm b{mustParse("(eq z (s z))")};
  ctw_formula* pool[2] = {a.p, b.p};

  Rp dc;
  REQUIRE(ctw_check_dc(pool, 2, 2, "64", &dc.p, &err) == CTW_OK);
  int pass = 0;
  REQUIRE(ctw_report_pass(dc.p, &pass, &err) == CTW_OK);
  CHECK(pass == 1);
  Str json;
  REQUIRE(ctw_report_to_json(dc.p, &json.p, &err) == CTW_OK);
  CHECK(json.view().find("\"check\": \"dc-suite\"") != std::string::npos);

  Rp cc;
  REQUIRE(ctw_check_cc(pool, 2, 2, "64", &cc.p, &err) == CTW_OK);
  Rp star;
  REQUIRE(ctw_check_star(pool, 2, "64", &star.p, &err) == CTW_OK);
  Rp tri;
  REQUIRE(ctw_check_triangle(pool, 2, 2, "1", "64", "0", &tri.p, &err) == CTW_OK);
  Fm even{mustParse("(ex-le y (var x) (eq (+ (var y) (var y)) (var x)))")};
  Rp pc;
  REQUIRE(ctw_check_piecewise(even.p, "6", "64", &pc.p, &err) == CTW_OK);
  Fm psi{mustParse("(eq z (s z))")};
  Rp dtb;
  REQUIRE(ctw_check_dtb(psi.p, pool, 2, "2", "64", &dtb.p, &err) == CTW_OK);
  for (ctw_report* r : {cc.p, star.p, tri.p, pc.p, dtb.p}) {
    REQUIRE(ctw_report_pass(r, &pass, &err) == CTW_OK);
    CHECK(pass == 1);
  }

  // bad fuel string
  ctw_report* bad = nullptr;
  CHECK(ctw_check_dc(pool, 2, 2, "sixty-four", &bad, &err) == CTW_ERR_INVALID_ARGUMENT);
  ctw_string_free(err);
  err = nullptr;
  CHECK(ctw_check_piecewise(a.p, "3", "64", &bad, &err) == CTW_ERR_DOMAIN);
  ctw_string_free(err);
}
