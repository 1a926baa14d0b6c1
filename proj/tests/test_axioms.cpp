#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "ast.hpp"
#include "axioms.hpp"
#include "goedel.hpp"
#include "syntax.hpp"

using namespace ctw;

namespace {

FormulaPtr fp(const char* s) { return parseFormula(s); }

const NamedSentence* find(const AxiomBundle& b, const std::string& name) {
  for (const NamedSentence& s : b.sentences)
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace

TEST_CASE("role names round trip") {
  CHECK(roleName(Role::Axiom) == "axiom");
  CHECK(roleName(Role::Conjecture) == "conjecture");
  CHECK(roleName(Role::Obligation) == "obligation");
  CHECK(roleFromName("axiom") == Role::Axiom);
  CHECK(roleFromName("conjecture") == Role::Conjecture);
  CHECK(roleFromName("obligation") == Role::Obligation);
  CHECK_THROWS_AS(roleFromName("lemma"), DomainError);
}

TEST_CASE("validateBundle rejects broken bundles") {
  AxiomBundle ok{"b", "p", {{"a1", Role::Axiom, fp("(eq z z)")}}};
  CHECK_NOTHROW(validateBundle(ok));

  AxiomBundle nullBody = ok;
  nullBody.sentences.push_back({"a2", Role::Axiom, nullptr});
  CHECK_THROWS_AS(validateBundle(nullBody), DomainError);

  AxiomBundle dup = ok;
  dup.sentences.push_back({"a1", Role::Axiom, fp("(lt z z)")});
  CHECK_THROWS_AS(validateBundle(dup), DomainError);
}

TEST_CASE("base arithmetic bundle") {
  AxiomBundle q = qAxioms();
  CHECK(q.name == "q");
  REQUIRE(q.sentences.size() == 8);
  for (unsigned i = 0; i < 8; ++i) {
    CHECK(q.sentences[i].name == "q" + std::to_string(i + 1));
    CHECK(q.sentences[i].role == Role::Axiom);
    CHECK(isClosed(q.sentences[i].body));
    CHECK(isPurelyArithmetical(q.sentences[i].body));
  }
  // successor injectivity is the first axiom
  CHECK(renderFormula(q.sentences[0].body) ==
        "(all x (all y (imp (eq (s (var x)) (s (var y))) (eq (var x) (var y)))))");
  // the order axiom defines < from +
  CHECK(containsKind(q.sentences[7].body, FormulaKind::Lt));
}

TEST_CASE("index order bundle") {
  AxiomBundle o = orderAxioms();
  CHECK(o.name == "order");
  REQUIRE(o.sentences.size() == 2);
  CHECK(o.sentences[0].name == "ord_irrefl");
  CHECK(o.sentences[1].name == "ord_trans");
  CHECK(renderFormula(o.sentences[0].body) == "(all-i a (not (prec a a)))");
  for (const NamedSentence& s : o.sentences) {
    CHECK(isClosed(s.body));
    CHECK(hasIndexSyntax(s.body));
  }
}

TEST_CASE("tarski instance bundle shapes") {
  std::vector<FormulaPtr> sents = {fp("(eq z z)"), fp("(lt z (s z))")};
  std::vector<std::pair<TermPtr, TermPtr>> terms = {{num(0), num(0)}, {num(0), num(1)}};
  std::vector<std::pair<FormulaPtr, Nat>> forms = {{fp("(eq (var x) (var x))"), Nat(3)}};
  AxiomBundle t = tarskiInstances(sents, terms, forms);
  CHECK(t.name == "tarski");
  CHECK_NOTHROW(validateBundle(t));

  // the sentence-hood guard quantifies over all codes
  const NamedSentence* guard = find(t, "tarski_0");
  REQUIRE(guard);
  CHECK(renderFormula(guard->body) == "(all x (imp (tru (var x)) (senta (var x))))");

  // atomic instances: truth of the code of s=t iff s=t
  const NamedSentence* a0 = find(t, "tarski_1_0");
  REQUIRE(a0);
  FormulaPtr lhsEq = eq(evalClosedTerm(num(0)) == 0 ? zero() : zero(), zero());
  CHECK(equal(a0->body, iff(tru(numeral(encodeFormula(lhsEq))), lhsEq)));

  // negation instances commute with truth
  const NamedSentence* n0 = find(t, "tarski_2_0");
  REQUIRE(n0);
  FormulaPtr s0 = sents[0];
  CHECK(equal(n0->body, iff(tru(numeral(encodeFormula(mkNot(s0)))),
                            mkNot(tru(numeral(encodeFormula(s0)))))));

  // disjunction instances for every ordered pair
  for (const char* name : {"tarski_3_0_0", "tarski_3_0_1", "tarski_3_1_0", "tarski_3_1_1"})
    CHECK(find(t, name));
  const NamedSentence* d01 = find(t, "tarski_3_0_1");
  CHECK(equal(d01->body, iff(tru(numeral(encodeFormula(mkOr(sents[0], sents[1])))),
                             mkOr(tru(numeral(encodeFormula(sents[0]))),
                                  tru(numeral(encodeFormula(sents[1])))))));

  // quantifier instances appear as bounded surrogates
  const NamedSentence* q0 = find(t, "tarski_4_0_surrogate");
  REQUIRE(q0);
  CHECK(containsKind(q0->body, FormulaKind::Or));

  for (const NamedSentence& s : t.sentences) {
    CHECK(s.role == Role::Axiom);
    CHECK(isClosed(s.body));
  }
}

TEST_CASE("disjunctive and conjunctive correctness instances") {
  std::vector<FormulaPtr> phis = {fp("(eq z z)"), fp("(lt z (s z))"), fp("(eq z (s z))")};

  FormulaPtr dc = dcInstance(phis);
  std::vector<FormulaPtr> truAtoms;
  for (const FormulaPtr& f : phis) truAtoms.push_back(tru(numeral(encodeFormula(f))));
  CHECK(equal(dc, iff(tru(numeral(encodeFormula(bigOr(phis)))), bigOr(truAtoms))));

  FormulaPtr cc = ccInstance(phis);
  CHECK(equal(cc, iff(tru(numeral(encodeFormula(bigAnd(phis)))), bigAnd(truAtoms))));

  CHECK_THROWS_AS(dcInstance({}), DomainError);
  CHECK_THROWS_AS(ccInstance({}), DomainError);
  // pool members must be sentences
  CHECK_THROWS_AS(dcInstance({fp("(eq (var x) z)")}), DomainError);
}

TEST_CASE("induction sentence over the unary matrix") {
  FormulaPtr psi = fp("(eq (var x) z)");
  FormulaPtr got = indSentence(psi);
  FormulaPtr base = substitute(psi, "x", zero());
  FormulaPtr step = forallNum("x", imp(psi, substitute(psi, "x", add(var("x"), num(1)))));
  CHECK(equal(got, imp(base, imp(step, forallNum("x", psi)))));
  CHECK(isClosed(got));
  // matrix must have exactly one free number variable
  CHECK_THROWS_AS(indSentence(fp("(eq z z)")), DomainError);
  CHECK_THROWS_AS(indSentence(fp("(eq (var x) (var y))")), DomainError);
}

TEST_CASE("internal induction instance is a truth claim about the code") {
  FormulaPtr psi = fp("(eq (var x) z)");
  FormulaPtr ic = icInstance(psi);
  REQUIRE(ic->kind == FormulaKind::Tru);
  REQUIRE(ic->t1->kind == TermKind::Num);
  CHECK(equal(decodeFormula(ic->t1->value), indSentence(psi)));
}

TEST_CASE("indexed biconditional: fresh stage variable, code on the left") {
  FormulaPtr phi = fp("(eq z z)");
  FormulaPtr b = biconditional(phi);
  REQUIRE(b->kind == FormulaKind::ForallIdx);
  std::string alpha = b->v1;
  FormulaPtr body = b->f1;
  REQUIRE(body->kind == FormulaKind::Iff);
  CHECK(equal(body->f1, itru(alpha, numeral(encodeFormula(phi)))));
  // arithmetical content is untouched by stage relativization
  CHECK(equal(body->f2, phi));

  // index quantifiers inside phi get guarded by prec
  FormulaPtr deep = fp("(all-i a (itru a (num 24627)))");
  FormulaPtr b2 = biconditional(deep);
  CHECK(containsKind(b2, FormulaKind::Prec));

  CHECK_THROWS_AS(biconditional(fp("(eq (var x) z)")), DomainError);
  CHECK_THROWS_AS(biconditional(fp("(tru z)")), SortError);
  CHECK_THROWS_AS(biconditional(fp("(senta z)")), SortError);
  CHECK_THROWS_AS(biconditional(fp("(subt z z)")), SortError);
}

TEST_CASE("piecewise coding sentences") {
  // the uniform claim: some y collects the true codes below u as bits
  FormulaPtr u = pcU();
  CHECK(renderFormula(u) ==
        "(all u (ex y (all x (iff (and (tru (var x)) (lt (var x) (var u))) "
        "(ack (var x) (var y))))))");

  FormulaPtr phi = fp("(eq (var x) z)");
  FormulaPtr p = pcPhi(phi);
  CHECK(isClosed(p));
  CHECK(containsKind(p, FormulaKind::Ack));
  CHECK_THROWS_AS(pcPhi(fp("(eq z z)")), DomainError);

  // codeOf(phi) has free variables c and u: "c codes the truth set of phi below u"
  FormulaPtr c = codeOf(phi);
  VarSet fv = freeVariables(c);
  std::set<std::string> names;
  for (const auto& [n, s] : fv) {
    CHECK(s == Sort::Number);
    names.insert(n);
  }
  CHECK(names == std::set<std::string>{"c", "u"});

  FormulaPtr pc = pcOf(phi);
  CHECK(isClosed(pc));
  CHECK(containsKind(pc, FormulaKind::SubT));
}

TEST_CASE("theta disjunction selects by position") {
  std::vector<FormulaPtr> phis = {fp("(eq z z)"), fp("(lt z (s z))")};
  FormulaPtr theta = thetaDisjunction(phis);
  VarSet fv = freeVariables(theta);
  REQUIRE(fv.size() == 1);
  std::string x = fv.begin()->first;
  // instantiating the selector at i yields (x=i and phi_i) as a disjunct
  FormulaPtr at0 = substitute(theta, x, num(0));
  CHECK(containsKind(at0, FormulaKind::Or));
  CHECK_THROWS_AS(thetaDisjunction({}), DomainError);
}

TEST_CASE("descending truth bundle composition") {
  std::vector<FormulaPtr> pool = {fp("(eq z z)"), fp("(lt z (s z))")};
  AxiomBundle d = dtbBundle(pool);
  CHECK(d.name == "dtb");
  CHECK_NOTHROW(validateBundle(d));

  // arithmetic, order, descent, nonemptiness, biconditionals, then the goal
  for (const char* name :
       {"q1", "q8", "ord_irrefl", "ord_trans", "descending", "nonempty", "b_0", "b_1", "goal"})
    CHECK(find(d, name));
  CHECK(renderFormula(find(d, "descending")->body) == "(all-i a (ex-i b (prec b a)))");
  CHECK(renderFormula(find(d, "nonempty")->body) == "(ex-i a (ieq a a))");

  // each pool sentence gets its biconditional
  CHECK(equal(find(d, "b_0")->body, biconditional(pool[0])));
  CHECK(equal(find(d, "b_1")->body, biconditional(pool[1])));

  // the refutation goal is the canonical false sentence, and comes last
  const NamedSentence& last = d.sentences.back();
  CHECK(last.name == "goal");
  CHECK(last.role == Role::Conjecture);
  CHECK(equal(last.body, falseSentence()));
  CHECK(equal(falseSentence(), fp("(eq z (s z))")));

  // only the goal is a conjecture
  int conjectures = 0;
  for (const NamedSentence& s : d.sentences)
    if (s.role == Role::Conjecture) ++conjectures;
  CHECK(conjectures == 1);

  // empty pool is still a valid (biconditional-free) bundle
  AxiomBundle empty = dtbBundle({});
  CHECK_NOTHROW(validateBundle(empty));
  CHECK(find(empty, "descending"));
  CHECK_FALSE(find(empty, "b_0"));
}
