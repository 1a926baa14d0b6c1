#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "ast.hpp"
#include "axioms.hpp"
#include "goedel.hpp"
#include "semantics.hpp"
#include "syntax.hpp"

using namespace ctw;

namespace {
FormulaPtr fp(const char* s) { return parseFormula(s); }
const Nat kFuel = 64;
}

TEST_CASE("three-valued connectives follow the strong Kleene tables") {
  using T = TriBool;
  CHECK(triNot(T::True) == T::False);
  CHECK(triNot(T::False) == T::True);
  CHECK(triNot(T::Unknown) == T::Unknown);
  CHECK(triOr(T::False, T::Unknown) == T::Unknown);
  CHECK(triOr(T::True, T::Unknown) == T::True);
  CHECK(triOr(T::Unknown, T::True) == T::True);
  CHECK(triAnd(T::False, T::Unknown) == T::False);
  CHECK(triAnd(T::True, T::Unknown) == T::Unknown);
  CHECK(triAnd(T::True, T::True) == T::True);
  CHECK(triName(T::True) == "True");
  CHECK(triName(T::False) == "False");
  CHECK(triName(T::Unknown) == "Unknown");
}

TEST_CASE("evalTerm computes over the environment") {
  Env env{{"x", Nat(3)}, {"y", Nat(5)}};
  CHECK(evalTerm(parseTerm("(+ (var x) (* (var y) (s z)))"), env) == 8);
  CHECK(evalTerm(parseTerm("(num 100)"), env) == 100);
  CHECK(evalTerm(parseTerm("(s (var x))"), env) == 4);
  CHECK_THROWS_AS(evalTerm(parseTerm("(var q)"), env), DomainError);
}

TEST_CASE("evalDelta0 decides the bounded fragment") {
  Env env;
  CHECK(evalDelta0(fp("(eq z z)"), env));
  CHECK_FALSE(evalDelta0(fp("(eq z (s z))"), env));
  CHECK(evalDelta0(fp("(all-le x (num 9) (not (lt (num 9) (var x))))"), env));
  CHECK(evalDelta0(fp("(ex-le x (num 4) (eq (+ (var x) (var x)) (num 4)))"), env));
  // inclusive bound: x = 4 is inside
  CHECK(evalDelta0(fp("(ex-le x (num 4) (eq (var x) (num 4)))"), env));
  CHECK(evalDelta0(fp("(exp (num 3) (num 8))"), env));
  CHECK_FALSE(evalDelta0(fp("(exp (num 3) (num 9))"), env));
  CHECK(evalDelta0(fp("(ack (s z) (num 2))"), env));
  CHECK_FALSE(evalDelta0(fp("(ack z (num 2))"), env));
}

TEST_CASE("evalDelta0 rejects what it cannot decide") {
  Env env;
  CHECK_THROWS_AS(evalDelta0(fp("(ex x (eq (var x) z))"), env), DomainError);
  CHECK_THROWS_AS(evalDelta0(fp("(all x (eq (var x) (var x)))"), env), DomainError);
  CHECK_THROWS_AS(evalDelta0(fp("(tru z)"), env), SortError);
  CHECK_THROWS_AS(evalDelta0(fp("(itru a z)"), env), SortError);
  CHECK_THROWS_AS(evalDelta0(fp("(senta z)"), env), SortError);
  // range cap on bounded loops
  CHECK_THROWS_AS(evalDelta0(fp("(ex-le x (num 3000000) (eq (var x) (num 2999999)))"), env),
                  BudgetError);
}

TEST_CASE("the seed corpus alternates truth values") {
  std::vector<FormulaPtr> corpus = seedCorpus();
  std::vector<bool> truths = seedCorpusTruths();
  REQUIRE(corpus.size() == 16);
  REQUIRE(truths.size() == 16);
  Env env;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CAPTURE(i);
    CHECK(isClosed(corpus[i]));
    CHECK(isPurelyArithmetical(corpus[i]));
    CHECK(truths[i] == (i % 2 == 0));
    // the bounded oracle and the fuelled evaluator agree with the table
    CHECK(evalDelta0(corpus[i], env) == truths[i]);
    CHECK(evalSentence(corpus[i], kFuel) == (truths[i] ? TriBool::True : TriBool::False));
  }
}

TEST_CASE("loadCorpus(data file) matches the builtin corpus") {
  std::string dir = CTW_SOURCE_DIR;
  std::vector<FormulaPtr> fromFile = loadCorpus(dir + "/data/seed_corpus.sexpr");
  std::vector<FormulaPtr> builtin = seedCorpus();
  REQUIRE(fromFile.size() == builtin.size());
  for (std::size_t i = 0; i < builtin.size(); ++i) CHECK(equal(fromFile[i], builtin[i]));
  CHECK_THROWS_AS(loadCorpus(dir + "/data/does_not_exist.sexpr"), DomainError);
}

TEST_CASE("quantifier evaluation: bounded loops decide, unbounded search never refutes") {
  // bounded: exact decision both ways
  CHECK(evalSentence(fp("(ex-le x (num 10) (eq (var x) (num 7)))"), kFuel) == TriBool::True);
  CHECK(evalSentence(fp("(ex-le x (num 10) (eq (var x) (num 11)))"), kFuel) == TriBool::False);
  CHECK(evalSentence(fp("(all-le x (num 10) (lt (var x) (num 11)))"), kFuel) == TriBool::True);
  CHECK(evalSentence(fp("(all-le x (num 10) (lt (var x) (num 10)))"), kFuel) == TriBool::False);

  // unbounded with a witness inside the fuel range: found
  CHECK(evalSentence(fp("(ex x (eq (* (var x) (var x)) (num 9)))"), kFuel) == TriBool::True);
  // witness outside the fuel range (x = 1000, not pinnable): undecided, never false
  CHECK(evalSentence(fp("(ex x (eq (* (var x) (var x)) (num 1000000)))"), Nat(8)) ==
        TriBool::Unknown);
  // unbounded false claim: undecided
  CHECK(evalSentence(fp("(ex x (lt (s (var x)) (var x)))"), kFuel) == TriBool::Unknown);
  // universal dual: refuted by counterexample inside fuel
  CHECK(evalSentence(fp("(all x (lt (var x) (num 5)))"), kFuel) == TriBool::False);
  // universal true claim: undecided without a bound
  CHECK(evalSentence(fp("(all x (not (lt (s (var x)) (var x))))"), kFuel) == TriBool::Unknown);
}

TEST_CASE("pinned witnesses decide without search") {
  // equality pin: x is forced, even far outside the fuel range
  CHECK(evalSentence(fp("(ex x (and (eq (var x) (num 100000)) (lt (num 99999) (var x))))"),
                     Nat(4)) == TriBool::True);
  // pin from the reversed equation
  CHECK(evalSentence(fp("(ex x (and (eq (num 12) (var x)) (eq (var x) (num 12))))"), Nat(4)) ==
        TriBool::True);
  // exp pin: x = 2^20 forced by the relation
  CHECK(evalSentence(fp("(ex x (and (exp (num 20) (var x)) (lt (num 1000) (var x))))"),
                     Nat(4)) == TriBool::True);
  // exp with a non-power witness value refutes the pinned conjunct
  CHECK(evalSentence(fp("(ex x (and (exp (var x) (num 12)) (eq z z)))"), Nat(4)) ==
        TriBool::False);
  // syntactic upper bound from a strict comparison makes exists exact
  CHECK(evalSentence(fp("(ex x (and (lt (var x) (num 5)) (eq (+ (var x) (var x)) (num 8))))"),
                     Nat(2)) == TriBool::True);
  CHECK(evalSentence(fp("(ex x (and (lt (var x) (num 5)) (eq (+ (var x) (var x)) (num 9))))"),
                     Nat(2)) == TriBool::False);
}

TEST_CASE("truth-predicate atoms unfold codes") {
  Nat trueCode = encodeFormula(fp("(eq z z)"));
  Nat falseCode = encodeFormula(fp("(eq z (s z))"));
  CHECK(evalSentence(tru(numeral(trueCode)), kFuel) == TriBool::True);
  CHECK(evalSentence(tru(numeral(falseCode)), kFuel) == TriBool::False);
  // nesting: truth of the code of a truth claim
  Nat nested = encodeFormula(tru(numeral(trueCode)));
  CHECK(evalSentence(tru(numeral(nested)), kFuel) == TriBool::True);
  // fuel exhaustion surfaces as Unknown
  CHECK(evalSentence(tru(numeral(trueCode)), Nat(0)) == TriBool::Unknown);
  // non-codes, term codes, and open-formula codes are simply not true
  CHECK(evalSentence(tru(numeral(Nat(0))), kFuel) == TriBool::False);
  CHECK(evalSentence(tru(numeral(encodeTerm(zero()))), kFuel) == TriBool::False);
  CHECK(evalSentence(tru(numeral(encodeFormula(fp("(eq (var x) z)")))), kFuel) ==
        TriBool::False);
  // index syntax under the unindexed truth predicate is not true either
  CHECK(evalSentence(tru(numeral(encodeFormula(fp("(ex-i a (ieq a a))")))), kFuel) ==
        TriBool::False);
}

TEST_CASE("sentence-hood and substitution atoms") {
  Nat good = encodeFormula(fp("(eq z z)"));
  Nat open = encodeFormula(fp("(eq (var x) z)"));
  CHECK(evalSentence(sentA(numeral(good)), kFuel) == TriBool::True);
  CHECK(evalSentence(sentA(numeral(open)), kFuel) == TriBool::False);
  CHECK(evalSentence(sentA(numeral(encodeFormula(fp("(tru z)")))), kFuel) == TriBool::False);
  CHECK(evalSentence(sentA(numeral(Nat(7))), kFuel) == TriBool::False);

  // subT(code of phi(x), k) means: the instance phi(k) is true
  CHECK(evalSentence(subT(numeral(open), zero()), kFuel) == TriBool::True);
  CHECK(evalSentence(subT(numeral(open), num(1)), kFuel) == TriBool::False);
  // wrong arity or closed matrix: false
  CHECK(evalSentence(subT(numeral(good), zero()), kFuel) == TriBool::False);
  CHECK(evalSentence(subT(numeral(Nat(5)), zero()), kFuel) == TriBool::False);
}

TEST_CASE("index syntax cannot be evaluated directly") {
  CHECK_THROWS_AS(evalSentence(fp("(ex-i a (ieq a a))"), kFuel), SortError);
  CHECK_THROWS_AS(evalSentence(fp("(all-i a (prec a a))"), kFuel), SortError);
  Env env;
  CHECK_THROWS_AS(evalFormula(fp("(itru a (num 3))"), env, kFuel), SortError);
}

TEST_CASE("iff is decided only when both sides are") {
  Nat trueCode = encodeFormula(fp("(eq z z)"));
  FormulaPtr undecided = fp("(ex x (lt (s (var x)) (var x)))");
  CHECK(evalSentence(iff(fp("(eq z z)"), fp("(eq z z)")), kFuel) == TriBool::True);
  CHECK(evalSentence(iff(fp("(eq z z)"), fp("(eq z (s z))")), kFuel) == TriBool::False);
  CHECK(evalSentence(iff(fp("(eq z z)"), undecided), kFuel) == TriBool::Unknown);
  CHECK(evalSentence(iff(undecided, tru(numeral(trueCode))), kFuel) == TriBool::Unknown);
}

TEST_CASE("checkDC and checkCC: clean pools pass with full sign coverage") {
  std::vector<FormulaPtr> pool = {fp("(eq z z)"), fp("(eq z (s z))"), fp("(lt z (s z))")};
  CheckReport dc = checkDC(pool, kFuel);
  CHECK(dc.check == "dc");
  CHECK(dc.pass);
  CHECK(dc.fuel == kFuel);
  CHECK(dc.total == 9);  // 2^3 sign masks + the instance sentence
  CHECK(dc.mismatches == 0);
  CHECK(dc.unknowns == 0);

  CheckReport cc = checkCC(pool, kFuel);
  CHECK(cc.check == "cc");
  CHECK(cc.pass);
  CHECK(cc.total == 9);
  CHECK(cc.mismatches == 0);
  CHECK(cc.unknowns == 0);

  CHECK_THROWS_AS(checkDC({}, kFuel), DomainError);
  CHECK_THROWS_AS(checkCC({}, kFuel), DomainError);
}

TEST_CASE("checkDC reports undecided components as unknowns, not failures") {
  std::vector<FormulaPtr> pool = {fp("(ex x (lt (s (var x)) (var x)))")};
  CheckReport dc = checkDC(pool, Nat(4));
  CHECK(dc.pass);  // no decided mismatch
  CHECK(dc.unknowns > 0);
}

TEST_CASE("suiteDC / suiteCC: every subset up to the size limit") {
  std::vector<FormulaPtr> corpus = {fp("(eq z z)"), fp("(eq z (s z))"), fp("(lt z (s z))"),
                                    fp("(lt (s z) z)")};
  CheckReport dc = suiteDC(corpus, 2, kFuel);
  CHECK(dc.check == "dc-suite");
  CHECK(dc.pass);
  CHECK(dc.mismatches == 0);
  CHECK(dc.unknowns == 0);
  // 4 singletons (2^1+1 rows each) + 6 pairs (2^2+1 rows each) = 12 + 30
  CHECK(dc.total == 42);
  CheckReport cc = suiteCC(corpus, 2, kFuel);
  CHECK(cc.check == "cc-suite");
  CHECK(cc.pass);
  CHECK(cc.total == 42);
}

TEST_CASE("claim-star: theta instances mirror component truth") {
  std::vector<FormulaPtr> pool = {fp("(eq z z)"), fp("(eq z (s z))"), fp("(lt z (s z))")};
  CheckReport r = checkClaimStar(pool, kFuel);
  CHECK(r.check == "star");
  CHECK(r.pass);
  CHECK(r.total == 3);
  CHECK(r.mismatches == 0);
  CHECK(r.unknowns == 0);
  CHECK_THROWS_AS(checkClaimStar({}, kFuel), DomainError);
}

TEST_CASE("piecewise coding: bits match the bounded truth set") {
  // phi(x): x is even, over u = 6: truth set {0,2,4}, code 2^0+2^2+2^4 = 21
  FormulaPtr even = fp("(ex-le y (var x) (eq (+ (var y) (var y)) (var x)))");
  CheckReport r = checkPiecewise(even, Nat(6), kFuel);
  CHECK(r.check == "pc");
  CHECK(r.pass);
  CHECK(r.mismatches == 0);
  CHECK(r.unknowns == 0);
  // rows: one code row + 6 bit rows + one code-formula row
  CHECK(r.total == 8);

  // always-true matrix gives the all-ones code
  FormulaPtr always = fp("(eq (var x) (var x))");
  CheckReport a = checkPiecewise(always, Nat(5), kFuel);
  CHECK(a.pass);

  CHECK_THROWS_AS(checkPiecewise(fp("(eq z z)"), Nat(3), kFuel), DomainError);
  CHECK_THROWS_AS(checkPiecewise(even, Nat(5000), kFuel), DomainError);
}

TEST_CASE("predecessorsCode is the all-ones word") {
  CHECK(predecessorsCode(Nat(0)) == 0);
  CHECK(predecessorsCode(Nat(1)) == 1);
  CHECK(predecessorsCode(Nat(5)) == 31);
  CHECK(predecessorsCode(Nat(16)) == 65535);
  CHECK(predecessorsCode(Nat(64)) == (Nat(1) << 64) - 1);
  CHECK_THROWS_AS(predecessorsCode(Nat(2000000)), DomainError);
}

TEST_CASE("triangle: stage translations of the biconditionals hold") {
  FormulaPtr psi = fp("(eq z (s z))");
  std::vector<FormulaPtr> pool = {fp("(eq z z)"), fp("(eq z (s z))")};
  for (unsigned n = 0; n <= 2; ++n) {
    for (std::size_t s = 0; s < pool.size(); ++s) {
      CheckReport r = checkTriangle(psi, pool, Nat(n), s, kFuel, Nat(0));
      CAPTURE(n);
      CAPTURE(s);
      CHECK(r.pass);
      CHECK(r.mismatches == 0);
      CHECK(r.unknowns == 0);
    }
  }
  CHECK_THROWS_AS(checkTriangle(psi, pool, Nat(1), 5, kFuel, Nat(0)), DomainError);
}

TEST_CASE("triangle: a tiny node budget reports unknown instead of failing") {
  FormulaPtr psi = fp("(eq z (s z))");
  std::vector<FormulaPtr> pool = {fp("(eq z z)")};
  CheckReport r = checkTriangle(psi, pool, Nat(3), 0, kFuel, Nat(50));
  CHECK(r.pass);
  CHECK(r.unknowns == 1);
  REQUIRE(r.instances.size() == 1);
  CHECK(r.instances[0].verdict == "unknown");
  CHECK(r.instances[0].input.find("budget-exceeded") != std::string::npos);
  CHECK(r.instances[0].got == "Unknown");
}

TEST_CASE("suiteTriangle covers pools, stages, and positions") {
  std::vector<FormulaPtr> corpus = {fp("(eq z z)"), fp("(eq z (s z))")};
  CheckReport r = suiteTriangle(corpus, 2, Nat(1), kFuel, Nat(0));
  CHECK(r.check == "triangle-suite");
  CHECK(r.pass);
  CHECK(r.mismatches == 0);
  CHECK(r.unknowns == 0);
  // pools {0},{1},{0,1}: sizes 1,1,2 -> positions 1+1+2 = 4, stages n=0,1
  CHECK(r.total == 8);
}

TEST_CASE("finite descending stages refute the descent axiom") {
  FormulaPtr psi = fp("(eq z (s z))");
  std::vector<FormulaPtr> pool = {fp("(eq z z)")};
  CheckReport r = checkDtbFinite(psi, pool, Nat(3), kFuel);
  CHECK(r.check == "dtb");
  CHECK(r.pass);
  CHECK(r.total == 4);  // stages 0..3
  CHECK(r.mismatches == 0);
  CHECK(r.unknowns == 0);
  for (const CheckInstance& inst : r.instances) {
    CHECK(inst.expected == "False");
    CHECK(inst.verdict == "ok");
  }
}

TEST_CASE("reports keep at most a few passing samples but every failure") {
  // large clean run: instance list is capped, counters are not
  std::vector<FormulaPtr> corpus = seedCorpus();
  CheckReport r = suiteDC(corpus, 1, kFuel);
  CHECK(r.pass);
  CHECK(r.total == 16 * 3);  // 16 singleton pools, 2 signs + instance row each
  CHECK(r.instances.size() <= 64);
}
