#include "axioms.hpp"

#include <set>

#include "goedel.hpp"
#include "syntax.hpp"

namespace ctw {

std::string roleName(Role r) {
  switch (r) {
    case Role::Axiom: return "axiom";
    case Role::Conjecture: return "conjecture";
    case Role::Obligation: return "obligation";
  }
  return "axiom";
}

Role roleFromName(const std::string& s) {
  if (s == "axiom") return Role::Axiom;
  if (s == "conjecture") return Role::Conjecture;
  if (s == "obligation") return Role::Obligation;
  throw DomainError("unknown sentence role '" + s + "'");
}

void validateBundle(const AxiomBundle& b) {
  std::set<std::string> seen;
  for (const auto& s : b.sentences) {
    if (!s.body) throw DomainError("bundle '" + b.name + "': null sentence body");
    if (!seen.insert(s.name).second)
      throw DomainError("bundle '" + b.name + "': duplicate sentence name '" + s.name + "'");
  }
}

namespace {

FormulaPtr truCode(const FormulaPtr& phi) { return tru(numeral(encodeFormula(phi))); }

void requireClosedArithmetical(const FormulaPtr& phi, const char* who) {
  if (!isPurelyArithmetical(phi))
    throw SortError(std::string(who) + ": pool sentence outside the arithmetic fragment");
  if (!isClosed(phi)) throw DomainError(std::string(who) + ": pool sentence has free variables");
}

// The single free number variable of a unary formula.
std::string unaryVariable(const FormulaPtr& phi, const char* who) {
  VarSet fv = freeVariables(phi);
  if (fv.size() != 1 || fv.begin()->second != Sort::Number)
    throw DomainError(std::string(who) + ": formula must have exactly one free number variable");
  return fv.begin()->first;
}

}  // namespace

AxiomBundle tarskiInstances(const std::vector<FormulaPtr>& sentPool,
                            const std::vector<std::pair<TermPtr, TermPtr>>& termPool,
                            const std::vector<std::pair<FormulaPtr, Nat>>& formPool) {
  AxiomBundle b;
  b.name = "tarski";
  b.provenance = "compositional truth instances over finite pools";

  // tarski_0: the truth predicate holds only of codes of closed
  // arithmetic-fragment sentences.
  b.sentences.push_back(
      {"tarski_0", Role::Axiom,
       forallNum("x", imp(tru(var("x")), sentA(var("x"))))});

  for (std::size_t i = 0; i < termPool.size(); ++i) {
    const auto& [t1, t2] = termPool[i];
    Nat v1 = evalClosedTerm(t1), v2 = evalClosedTerm(t2);
    b.sentences.push_back({"tarski_1_" + std::to_string(i), Role::Axiom,
                           iff(truCode(eq(t1, t2)), eq(numeral(v1), numeral(v2)))});
  }

  for (std::size_t i = 0; i < sentPool.size(); ++i) {
    requireClosedArithmetical(sentPool[i], "tarskiInstances");
    b.sentences.push_back({"tarski_2_" + std::to_string(i), Role::Axiom,
                           iff(truCode(mkNot(sentPool[i])), mkNot(truCode(sentPool[i])))});
  }

  for (std::size_t i = 0; i < sentPool.size(); ++i)
    for (std::size_t j = 0; j < sentPool.size(); ++j)
      b.sentences.push_back(
          {"tarski_3_" + std::to_string(i) + "_" + std::to_string(j), Role::Axiom,
           iff(truCode(mkOr(sentPool[i], sentPool[j])),
               mkOr(truCode(sentPool[i]), truCode(sentPool[j])))});

  for (std::size_t i = 0; i < formPool.size(); ++i) {
    const auto& [gamma, bound] = formPool[i];
    if (!isPurelyArithmetical(gamma))
      throw SortError("tarskiInstances: witness formula outside the arithmetic fragment");
    std::string v = unaryVariable(gamma, "tarskiInstances");
    if (bound < 1) throw DomainError("tarskiInstances: witness bound must be at least 1");
    std::vector<FormulaPtr> disjuncts;
    for (Nat x = 0; x < bound; ++x)
      disjuncts.push_back(truCode(substitute(gamma, v, numeral(x))));
    b.sentences.push_back({"tarski_4_" + std::to_string(i) + "_surrogate", Role::Axiom,
                           iff(truCode(existsNum(v, gamma)), bigOr(disjuncts))});
  }

  validateBundle(b);
  return b;
}

FormulaPtr dcInstance(const std::vector<FormulaPtr>& phis) {
  if (phis.empty()) throw DomainError("dcInstance: empty pool");
  std::vector<FormulaPtr> rhs;
  for (const auto& phi : phis) {
    requireClosedArithmetical(phi, "dcInstance");
    rhs.push_back(truCode(phi));
  }
  return iff(truCode(bigOr(phis)), bigOr(rhs));
}

FormulaPtr ccInstance(const std::vector<FormulaPtr>& phis) {
  if (phis.empty()) throw DomainError("ccInstance: empty pool");
  std::vector<FormulaPtr> rhs;
  for (const auto& phi : phis) {
    requireClosedArithmetical(phi, "ccInstance");
    rhs.push_back(truCode(phi));
  }
  return iff(truCode(bigAnd(phis)), bigAnd(rhs));
}

FormulaPtr indSentence(const FormulaPtr& psi) {
  std::string v = unaryVariable(psi, "indSentence");
  FormulaPtr base = substitute(psi, v, zero());
  FormulaPtr step = forallNum(v, imp(psi, substitute(psi, v, add(var(v), num(1)))));
  return imp(base, imp(step, forallNum(v, psi)));
}

FormulaPtr icInstance(const FormulaPtr& psi) { return truCode(indSentence(psi)); }

FormulaPtr biconditional(const FormulaPtr& phi) {
  if (!isClosed(phi)) throw DomainError("biconditional: formula has free variables");
  for (FormulaKind k : {FormulaKind::Tru, FormulaKind::SentA, FormulaKind::SubT})
    if (containsKind(phi, k))
      throw SortError("biconditional: unindexed truth vocabulary not allowed here");
  std::set<std::string> used = allNames(phi);
  std::string alpha = leastUnusedName(used);
  return forallIdx(alpha, iff(itru(alpha, numeral(encodeFormula(phi))), relativize(phi, alpha)));
}

FormulaPtr pcU() {
  return forallNum(
      "u", existsNum("y", forallNum("x", iff(mkAnd(tru(var("x")), lt(var("x"), var("u"))),
                                             ack(var("x"), var("y"))))));
}

namespace {

// 2c = (a+b)(a+b+1) + 2b: the pairing graph without division.
FormulaPtr pairingEq(const TermPtr& c, const TermPtr& a, const TermPtr& b) {
  TermPtr sum = add(a, b);
  return eq(mul(num(2), c), add(mul(sum, succ(sum)), mul(num(2), b)));
}

}  // namespace

FormulaPtr pcPhi(const FormulaPtr& phi) {
  VarSet fv = freeVariables(phi);
  std::vector<std::string> xs;
  for (const auto& [name, sort] : fv) {
    if (sort != Sort::Number) throw SortError("pcPhi: free index variable not allowed");
    xs.push_back(name);
  }
  if (xs.empty()) throw DomainError("pcPhi: formula must have at least one free variable");

  std::set<std::string> used = allNames(phi);
  auto fresh = [&used]() {
    std::string n = leastUnusedName(used);
    used.insert(n);
    return n;
  };
  auto pick = [&used, &fresh](const char* preferred) {
    if (!used.count(preferred)) {
      used.insert(preferred);
      return std::string(preferred);
    }
    return fresh();
  };
  std::string u = pick("u"), y = pick("y"), c = pick("c");

  // tuple(c, xs): chain of pairing equations through fresh intermediates
  FormulaPtr tupleEq;
  if (xs.size() == 1) {
    tupleEq = eq(var(c), var(xs[0]));
  } else {
    std::vector<std::string> mids;  // codes of the proper prefixes
    for (std::size_t i = 0; i + 2 < xs.size(); ++i) mids.push_back(fresh());
    mids.push_back(c);
    std::vector<FormulaPtr> eqs;
    eqs.push_back(pairingEq(var(mids[0]), var(xs[0]), var(xs[1])));
    for (std::size_t i = 2; i < xs.size(); ++i)
      eqs.push_back(pairingEq(var(mids[i - 1]), var(mids[i - 2]), var(xs[i])));
    tupleEq = bigAnd(eqs);
    for (std::size_t i = mids.size() - 1; i-- > 0;) tupleEq = existsNum(mids[i], tupleEq);
  }

  FormulaPtr matrix =
      imp(tupleEq, iff(mkAnd(phi, lt(var(c), var(u))), ack(var(c), var(y))));
  FormulaPtr body = forallNum(c, matrix);
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) body = forallNum(*it, body);
  return forallNum(u, existsNum(y, body));
}

FormulaPtr codeOf(const FormulaPtr& phi) {
  unaryVariable(phi, "codeOf");
  if (!isPurelyArithmetical(phi))
    throw SortError("codeOf: formula outside the arithmetic fragment");
  TermPtr g = numeral(encodeFormula(phi));
  return forallNum("x", imp(lt(var("x"), var("u")),
                            iff(subT(g, var("x")), ack(var("x"), var("c")))));
}

FormulaPtr pcOf(const FormulaPtr& phi) {
  return forallNum("u", existsNum("c", codeOf(phi)));
}

FormulaPtr thetaDisjunction(const std::vector<FormulaPtr>& phis) {
  if (phis.empty()) throw DomainError("thetaDisjunction: empty pool");
  std::vector<FormulaPtr> disjuncts;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    requireClosedArithmetical(phis[i], "thetaDisjunction");
    disjuncts.push_back(mkAnd(eq(var("x"), numeral(i)), phis[i]));
  }
  return bigOr(disjuncts);
}

AxiomBundle qAxioms() {
  AxiomBundle b;
  b.name = "q";
  b.provenance = "base arithmetic: the eight standard axioms";
  auto x = var("x"), y = var("y"), zv = var("z");
  b.sentences.push_back(
      {"q1", Role::Axiom,
       forallNum("x", forallNum("y", imp(eq(succ(x), succ(y)), eq(x, y))))});
  b.sentences.push_back({"q2", Role::Axiom, forallNum("x", mkNot(eq(succ(x), zero())))});
  b.sentences.push_back(
      {"q3", Role::Axiom,
       forallNum("x", imp(mkNot(eq(x, zero())), existsNum("y", eq(x, succ(y)))))});
  b.sentences.push_back({"q4", Role::Axiom, forallNum("x", eq(add(x, zero()), x))});
  b.sentences.push_back(
      {"q5", Role::Axiom,
       forallNum("x", forallNum("y", eq(add(x, succ(y)), succ(add(x, y)))))});
  b.sentences.push_back({"q6", Role::Axiom, forallNum("x", eq(mul(x, zero()), zero()))});
  b.sentences.push_back(
      {"q7", Role::Axiom,
       forallNum("x", forallNum("y", eq(mul(x, succ(y)), add(mul(x, y), x))))});
  b.sentences.push_back(
      {"q8", Role::Axiom,
       forallNum("x", forallNum("y", iff(lt(x, y), existsNum("z", eq(add(succ(zv), x), y)))))});
  validateBundle(b);
  return b;
}

AxiomBundle orderAxioms() {
  AxiomBundle b;
  b.name = "order";
  b.provenance = "strict partial order on truth indices";
  b.sentences.push_back({"ord_irrefl", Role::Axiom, forallIdx("a", mkNot(prec("a", "a")))});
  b.sentences.push_back(
      {"ord_trans", Role::Axiom,
       forallIdx("a", forallIdx("b", forallIdx("c", imp(mkAnd(prec("a", "b"), prec("b", "c")),
                                                        prec("a", "c")))))});
  validateBundle(b);
  return b;
}

FormulaPtr falseSentence() { return eq(zero(), num(1)); }

AxiomBundle dtbBundle(const std::vector<FormulaPtr>& phis) {
  AxiomBundle b;
  b.name = "dtb";
  b.provenance = "descending-index truth biconditionals; inconsistency target";
  for (const auto& s : qAxioms().sentences) b.sentences.push_back(s);
  for (const auto& s : orderAxioms().sentences) b.sentences.push_back(s);
  b.sentences.push_back(
      {"descending", Role::Axiom, forallIdx("a", existsIdx("b", prec("b", "a")))});
  b.sentences.push_back({"nonempty", Role::Axiom, existsIdx("a", idxEq("a", "a"))});
  for (std::size_t i = 0; i < phis.size(); ++i)
    b.sentences.push_back({"b_" + std::to_string(i), Role::Axiom, biconditional(phis[i])});
  b.sentences.push_back({"goal", Role::Conjecture, falseSentence()});
  validateBundle(b);
  return b;
}

}  // namespace ctw
