#pragma once

// First-order problem-file export.  A bundle becomes one unsorted FOF file:
// the two sorts collapse to unary guards num(X) / idx(A), quantifiers are
// relativized through the guards, and a small closure block keeps the
// arithmetic function symbols inside num.  The module also carries its own
// FOF reader and a guard audit so emitted files can be checked round-trip.
//
// Symbol map: zero/0, s/1, plus/2, times/2; equality as =; lt/2, tru/1,
// itru/2, prec/2, ack/2, diag/2, expr/2, senta/1, subt/2.  Roles: axiom,
// conjecture, and lemma for subsidiary proof obligations.  The canonical
// false sentence 0 = S0 exports as $false when it is the conjecture.
//
// Numerals emit as literal s-towers up to 10^4; towers up to 10^5 emit with
// a size warning; beyond that the numeral becomes an interned constant with
// pairwise-distinctness axioms and a warning naming the suppressed value.

#include <memory>
#include <string>
#include <vector>

#include "axioms.hpp"

namespace ctw {

struct TptpResult {
  std::string text;
  std::vector<std::string> warnings;  // also present as % comments in text
};

TptpResult toTptp(const AxiomBundle& bundle);

// ---------- internal FOF reader ----------

struct FofTerm {
  bool isVar = false;
  std::string name;            // variable or function/constant symbol
  std::vector<FofTerm> args;   // empty for variables and constants
  unsigned sWraps = 0;         // successor applications folded around the term
};

enum class FofKind {
  True, False, Pred, Equal, NotEqual, Not, And, Or, Imp, Iff, Forall, Exists
};

struct FofFormula;
using FofPtr = std::shared_ptr<const FofFormula>;

struct FofFormula {
  FofKind kind;
  std::string name;            // Pred symbol; quantified variable
  std::vector<FofTerm> args;   // Pred arguments; Equal/NotEqual use terms a, b
  FofTerm a, b;                // Equal/NotEqual sides
  FofPtr f1, f2;               // connective / quantifier children
};

struct FofStatement {
  std::string name;
  std::string role;
  FofPtr formula;
};

struct FofFile {
  std::vector<std::string> comments;
  std::vector<FofStatement> statements;
};

// Parses fof(name, role, formula). statements and % comments; ParseError
// with byte position on malformed input.
FofFile parseFof(const std::string& text);

// Checks every statement: no free variables, no variable bound twice, every
// quantifier introduces one variable immediately guarded by num(V) (with &
// under ?, => under !) or idx(V), and no second guard atom for the same
// variable anywhere in the statement.  Throws DomainError on violation;
// returns the number of guarded variable bindings seen.
std::size_t auditGuards(const FofFile& file);

}  // namespace ctw
