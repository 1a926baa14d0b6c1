#pragma once

// Syntactic operations on the two-sorted AST: concrete S-expression syntax,
// desugaring, capture-avoiding substitution, variable bookkeeping, the
// left-grouped big connectives, and relativization of index quantifiers.

#include "ast.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ctw {

// ---------- identifier order ----------
// Shortlex bijection between naturals and identifiers: all length-1 names
// a..z first, then longer names; continuation characters are ordered
// 0-9 < _ < a-z.  Used by variable encoding and by fresh-name selection.

Nat nameToIndex(const std::string& name);
std::string indexToName(const Nat& index);
// Least identifier (in the order above) not contained in `used`.
std::string leastUnusedName(const std::set<std::string>& used);

// ---------- concrete syntax ----------
// parse(render(x)) == x for every term and formula.  render is canonical:
// numerals up to 64 print as s-towers over z, larger ones as (num N).

struct SExpr;  // sexpr.hpp

FormulaPtr parseFormula(const std::string& text);
TermPtr parseTerm(const std::string& text);
// Parses a whitespace-separated sequence of formulas (e.g. a corpus file).
std::vector<FormulaPtr> parseFormulas(const std::string& text);
// Converts an already-parsed S-expression node into a formula.
FormulaPtr formulaFromSExpr(const SExpr& e);
std::string renderFormula(const FormulaPtr& f);
std::string renderTerm(const TermPtr& t);

// ---------- variables ----------

using VarSet = std::set<std::pair<std::string, Sort>>;

VarSet freeVariables(const FormulaPtr& f);
void freeTermVariables(const TermPtr& t, VarSet& out);
bool isClosed(const FormulaPtr& f);
// Every identifier occurring anywhere (free, bound, or as a binder).
std::set<std::string> allNames(const FormulaPtr& f);

// ---------- transforms ----------

// S applied n times to 0 (canonically represented).
TermPtr numeral(const Nat& n);

// Lowers sugar to {¬, ∨, ∃} only: ∀v φ ↦ ¬∃v¬φ, φ∧ψ ↦ ¬(¬φ∨¬ψ),
// φ→ψ ↦ ¬φ∨ψ, φ↔ψ via ∧ of the two implications, ∃x≤t φ ↦ ∃x(¬(t<x)∧φ),
// ∀x≤t φ ↦ ¬∃x≤t¬φ.  Idempotent; identity on primitive formulas.
FormulaPtr desugar(const FormulaPtr& f);

// Capture-avoiding substitution of term t for the free number variable v.
// A capturing binder is renamed to the least identifier unused in the whole
// formula and in t.
FormulaPtr substitute(const FormulaPtr& f, const std::string& v, const TermPtr& t);
TermPtr substituteTerm(const TermPtr& in, const std::string& v, const TermPtr& t);

// ∀-closure: number-sort quantifiers outermost, index-sort innermost, each
// group in ascending identifier order.
FormulaPtr universalClosure(const FormulaPtr& f);

// Left-grouped disjunction/conjunction.  bigOr([a]) = a,
// bigOr([a,b,c]) = (a∨b)∨c; bigAnd(φs) = ¬ bigOr(¬φs).  Empty lists are
// rejected (DomainError).
FormulaPtr bigOr(const std::vector<FormulaPtr>& fs);
FormulaPtr bigAnd(const std::vector<FormulaPtr>& fs);

// Guards every index-sort quantifier by ≺ alpha: ∃β ψ ↦ ∃β ¬(¬(β≺α) ∨ ¬ψ′)
// and ∀β ψ ↦ ∀β ((¬(β≺α)) ∨ ¬¬ψ′) — the primitive images of β≺α ∧ ψ and
// β≺α → ψ, chosen so that relativize commutes with desugar literally.
// Binders named alpha are renamed first.  Identity on formulas with no index
// quantifier.
FormulaPtr relativize(const FormulaPtr& f, const std::string& alpha);

// ---------- measurement ----------

// Tree node count (terms and formulas both count), computed DAG-wise so
// shared subtrees do not blow up the walk; throws BudgetError if the count
// exceeds `budget` (0 = unlimited).
Nat nodeCountLiteral(const FormulaPtr& f, const Nat& budget = 0);
// Number of structurally distinct subterms/subformulas (DAG size).
std::size_t nodeCountShared(const FormulaPtr& f);

}  // namespace ctw
