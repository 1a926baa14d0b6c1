#include "diagonal.hpp"

#include <set>

#include "goedel.hpp"
#include "syntax.hpp"

namespace ctw {

Nat diagonalCode(const Nat& g) {
  FormulaPtr f = decodeFormula(g);
  VarSet fv = freeVariables(f);
  if (fv.size() != 1 || fv.begin()->second != Sort::Number)
    throw DomainError("diagonalCode: coded formula must have exactly one free number variable");
  return encodeFormula(substitute(f, fv.begin()->first, numeral(g)));
}

FixedPointResult fixedPoint(const FormulaPtr& delta) {
  VarSet fv = freeVariables(delta);
  if (fv.size() != 1 || fv.begin()->second != Sort::Number)
    throw DomainError("fixedPoint: formula must have exactly one free number variable");
  std::string w = fv.begin()->first;

  std::set<std::string> used = allNames(delta);
  std::string y = leastUnusedName(used);
  used.insert(y);
  std::string v = leastUnusedName(used);

  FixedPointResult r;
  r.delta = existsNum(y, mkAnd(diag(var(v), var(y)), substitute(delta, w, var(y))));
  Nat deltaCode = encodeFormula(r.delta);
  r.gamma = substitute(r.delta, v, numeral(deltaCode));
  r.unfolded = substitute(delta, w, numeral(encodeFormula(r.gamma)));
  return r;
}

FormulaPtr thetaIndexed() { return forallIdx("a", itru("a", var("x"))); }

FormulaPtr thetaAt(const FormulaPtr& phi) {
  if (!isClosed(phi)) throw DomainError("thetaAt: formula has free variables");
  return forallIdx("a", itru("a", numeral(encodeFormula(phi))));
}

AxiomBundle hblObligations(const FormulaPtr& phi, const FormulaPtr& psi) {
  if (!isClosed(phi) || !isClosed(psi))
    throw DomainError("hblObligations: formulas must be closed");
  AxiomBundle b;
  b.name = "hbl";
  b.provenance = "derivability conditions for the indexed-truth predicate";
  b.sentences.push_back(
      {"hbl2", Role::Axiom, imp(thetaAt(imp(phi, psi)), imp(thetaAt(phi), thetaAt(psi)))});
  b.sentences.push_back({"hbl3", Role::Axiom, imp(thetaAt(phi), thetaAt(thetaAt(phi)))});
  b.sentences.push_back({"hbl1", Role::Obligation, thetaAt(phi)});
  validateBundle(b);
  return b;
}

AxiomBundle loebBundle(const std::vector<FormulaPtr>& phis) {
  AxiomBundle b;
  b.name = "loeb";
  b.provenance = "inconsistency of the descending-index theory via the derivability conditions";

  AxiomBundle dtb = dtbBundle(phis);
  for (const auto& s : dtb.sentences)
    if (s.role != Role::Conjecture) b.sentences.push_back(s);

  FormulaPtr absurd = falseSentence();
  b.sentences.push_back(
      {"lemma_not_theta_absurd", Role::Obligation, mkNot(thetaAt(absurd))});

  FixedPointResult fp = fixedPoint(mkNot(thetaIndexed()));
  b.sentences.push_back(
      {"lemma_fixed_point", Role::Obligation, iff(fp.gamma, fp.unfolded)});

  AxiomBundle hbl = hblObligations(fp.gamma, absurd);
  for (auto s : hbl.sentences) {
    s.role = Role::Obligation;
    b.sentences.push_back(s);
  }

  b.sentences.push_back({"goal", Role::Conjecture, absurd});
  validateBundle(b);
  return b;
}

}  // namespace ctw
