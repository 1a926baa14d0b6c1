#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "ast.hpp"
#include "axioms.hpp"
#include "diagonal.hpp"
#include "goedel.hpp"
#include "semantics.hpp"
#include "syntax.hpp"

using namespace ctw;

namespace {
FormulaPtr fp(const char* s) { return parseFormula(s); }
}

TEST_CASE("diagonalCode substitutes the code into its own formula") {
  FormulaPtr f = fp("(eq (var x) z)");
  Nat g = encodeFormula(f);
  Nat d = diagonalCode(g);
  CHECK(equal(decodeFormula(d), substitute(f, "x", numeral(g))));
  // result codes a sentence
  CHECK(isSentenceA(d));
}

TEST_CASE("diagonalCode rejects everything but unary number matrices") {
  CHECK_THROWS_AS(diagonalCode(encodeFormula(fp("(eq z z)"))), DomainError);
  CHECK_THROWS_AS(diagonalCode(encodeFormula(fp("(eq (var x) (var y))"))), DomainError);
  CHECK_THROWS_AS(diagonalCode(encodeFormula(fp("(itru a (var x))"))), DomainError);
  CHECK_THROWS_AS(diagonalCode(encodeTerm(zero())), NotACodeError);
  CHECK_THROWS_AS(diagonalCode(Nat(0)), NotACodeError);
}

TEST_CASE("fixedPoint: construction identities") {
  FormulaPtr delta = fp("(lt (var w) (s z))");
  FixedPointResult r = fixedPoint(delta);

  // delta' = exists y (diag(v, y) and delta(y)) with fresh y, v
  REQUIRE(r.delta->kind == FormulaKind::ExistsNum);
  VarSet dv = freeVariables(r.delta);
  REQUIRE(dv.size() == 1);
  std::string v = dv.begin()->first;

  // gamma = delta'[v := code(delta')]
  Nat deltaCode = encodeFormula(r.delta);
  CHECK(equal(r.gamma, substitute(r.delta, v, numeral(deltaCode))));
  CHECK(isClosed(r.gamma));

  // unfolded = delta[w := code(gamma)]
  CHECK(equal(r.unfolded, substitute(delta, "w", numeral(encodeFormula(r.gamma)))));

  // the coded diagnosis: diagonalCode(code delta') = code gamma
  CHECK(diagonalCode(deltaCode) == encodeFormula(r.gamma));

  CHECK_THROWS_AS(fixedPoint(fp("(eq z z)")), DomainError);
  CHECK_THROWS_AS(fixedPoint(fp("(eq (var x) (var y))")), DomainError);
}

TEST_CASE("fixedPoint: gamma and its unfolding agree on decidable matrices") {
  // ten decidable deltas: the fixed point of each must evaluate exactly like
  // its one-step unfolding, decided on both sides
  std::vector<FormulaPtr> deltas = {
      fp("(eq (var w) (var w))"),                 // always true
      fp("(not (eq (var w) (var w)))"),           // always false
      fp("(lt (var w) (s z))"),                   // w < 1: false for code values
      fp("(not (lt (var w) (s z)))"),             // true for code values
      fp("(lt z (var w))"),                       // 0 < w
      fp("(ack z (var w))"),                      // lowest bit of w
      fp("(not (ack z (var w)))"),                // parity flipped
      fp("(and (eq z z) (not (lt (var w) z)))"),  // w is never below zero
      fp("(all-le x (s z) (lt (var x) (var w)))"),  // bounded claim about w
      fp("(or (eq (var w) z) (not (eq (var w) z)))"),  // tautology
  };
  const Nat fuel = 16;
  for (const FormulaPtr& delta : deltas) {
    FixedPointResult r = fixedPoint(delta);
    TriBool g = evalSentence(r.gamma, fuel);
    TriBool u = evalSentence(r.unfolded, fuel);
    CAPTURE(renderFormula(delta));
    CHECK(g != TriBool::Unknown);
    CHECK(g == u);
  }
}

TEST_CASE("fixedPoint: the liar stays undecided at every fuel") {
  FixedPointResult r = fixedPoint(mkNot(tru(var("y"))));
  for (Nat fuel : {Nat(1), Nat(4), Nat(16), Nat(64), Nat(256)}) {
    CHECK(evalSentence(r.gamma, fuel) == TriBool::Unknown);
    CHECK(evalSentence(r.unfolded, fuel) == TriBool::Unknown);
  }
}

TEST_CASE("fixedPoint: the truth-teller is likewise undecided") {
  FixedPointResult r = fixedPoint(tru(var("y")));
  CHECK(evalSentence(r.gamma, Nat(64)) == TriBool::Unknown);
}

TEST_CASE("theta: the everywhere-true template and its instances") {
  FormulaPtr t = thetaIndexed();
  CHECK(renderFormula(t) == "(all-i a (itru a (var x)))");
  VarSet fv = freeVariables(t);
  REQUIRE(fv.size() == 1);
  CHECK(fv.begin()->first == "x");
  CHECK(fv.begin()->second == Sort::Number);

  FormulaPtr phi = fp("(eq z z)");
  FormulaPtr at = thetaAt(phi);
  CHECK(equal(at, forallIdx("a", itru("a", numeral(encodeFormula(phi))))));
  CHECK_THROWS_AS(thetaAt(fp("(eq (var x) z)")), DomainError);
}

TEST_CASE("derivability-condition obligations") {
  FormulaPtr phi = fp("(eq z z)");
  FormulaPtr psi = fp("(lt z (s z))");
  AxiomBundle b = hblObligations(phi, psi);
  CHECK(b.name == "hbl");
  CHECK_NOTHROW(validateBundle(b));
  REQUIRE(b.sentences.size() == 3);

  // distribution over implication, introspection, and the instance claim
  const NamedSentence& k = b.sentences[0];
  CHECK(k.name == "hbl2");
  CHECK(equal(k.body, imp(thetaAt(imp(phi, psi)), imp(thetaAt(phi), thetaAt(psi)))));
  const NamedSentence& four = b.sentences[1];
  CHECK(four.name == "hbl3");
  CHECK(equal(four.body, imp(thetaAt(phi), thetaAt(thetaAt(phi)))));
  const NamedSentence& nec = b.sentences[2];
  CHECK(nec.name == "hbl1");
  CHECK(nec.role == Role::Obligation);
  CHECK(equal(nec.body, thetaAt(phi)));

  CHECK_THROWS_AS(hblObligations(fp("(eq (var x) z)"), psi), DomainError);
}

TEST_CASE("loeb-style refutation bundle") {
  std::vector<FormulaPtr> pool = {fp("(eq z z)")};
  AxiomBundle b = loebBundle(pool);
  CHECK(b.name == "loeb");
  CHECK_NOTHROW(validateBundle(b));

  // all non-goal content of the descending bundle is carried over
  AxiomBundle dtb = dtbBundle(pool);
  for (const NamedSentence& s : dtb.sentences) {
    if (s.role == Role::Conjecture) continue;
    bool found = false;
    for (const NamedSentence& t : b.sentences)
      if (t.name == s.name && equal(t.body, s.body)) found = true;
    CAPTURE(s.name);
    CHECK(found);
  }

  // the proof skeleton appears as obligations
  std::vector<std::string> names;
  for (const NamedSentence& s : b.sentences) names.push_back(s.name);
  for (const char* want : {"lemma_not_theta_absurd", "lemma_fixed_point", "hbl1", "hbl2",
                           "hbl3", "goal"})
    CHECK(std::find(names.begin(), names.end(), want) != names.end());

  // goal is the lone conjecture and comes last
  CHECK(b.sentences.back().name == "goal");
  CHECK(b.sentences.back().role == Role::Conjecture);
  CHECK(equal(b.sentences.back().body, falseSentence()));
  int conjectures = 0, obligations = 0;
  for (const NamedSentence& s : b.sentences) {
    if (s.role == Role::Conjecture) ++conjectures;
    if (s.role == Role::Obligation) ++obligations;
  }
  CHECK(conjectures == 1);
  CHECK(obligations == 5);

  // the fixed-point lemma really is a fixed point of "not everywhere true"
  for (const NamedSentence& s : b.sentences)
    if (s.name == "lemma_fixed_point") {
      REQUIRE(s.body->kind == FormulaKind::Iff);
      FixedPointResult r = fixedPoint(mkNot(thetaIndexed()));
      CHECK(equal(s.body->f1, r.gamma));
      CHECK(equal(s.body->f2, r.unfolded));
    }
}
