#pragma once

// Two-sorted first-order syntax: a number sort (terms built from 0, S, +, *)
// and an index sort whose only terms are variables.  Formulas keep sugar
// connectives as real nodes; desugar() lowers everything to {not, or, exists}.

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctw {

// Arbitrary-precision natural.  Invariant: never negative.
using Nat = boost::multiprecision::cpp_int;

// ---------- errors ----------

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text; `pos` is a byte offset into the source.
struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t p)
      : Error(msg + " (at offset " + std::to_string(p) + ")"), pos(p) {}
};

// Sort discipline violation (number variable in index position etc).
struct SortError : Error {
  using Error::Error;
};

// Structural precondition violation: wrong arity, open formula where a
// sentence is required, empty pool, and similar.
struct DomainError : Error {
  using Error::Error;
};

// decode() applied to a natural outside the code range.
struct NotACodeError : Error {
  using Error::Error;
};

// Node budget exceeded while materializing or measuring a formula.
struct BudgetError : Error {
  using Error::Error;
};

// ---------- sorts and identifiers ----------

enum class Sort { Number, Index };

// Identifiers are [a-z][a-z0-9_]*.
bool validIdentifier(const std::string& name);

// ---------- terms ----------

struct Term;
using TermPtr = std::shared_ptr<const Term>;

enum class TermKind {
  Var,   // number variable
  Num,   // canonical numeral: S applied `value` times to 0
  Succ,  // successor of a non-numeral term
  Add,
  Mul,
};

struct Term {
  TermKind kind;
  std::string name;  // Var
  Nat value;         // Num
  TermPtr a, b;      // Succ: a; Add/Mul: a, b
};

TermPtr var(const std::string& name);
TermPtr zero();
TermPtr num(const Nat& value);
// Folds succ(num(k)) to num(k+1) so pure towers stay canonical.
TermPtr succ(const TermPtr& t);
TermPtr add(const TermPtr& a, const TermPtr& b);
TermPtr mul(const TermPtr& a, const TermPtr& b);

bool equal(const TermPtr& a, const TermPtr& b);

// ---------- formulas ----------

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class FormulaKind {
  // atoms
  Eq,      // t1 = t2
  Lt,      // t1 < t2
  Tru,     // T(t1): truth of the sentence coded by t1
  ITru,    // T_v1(t1): indexed truth
  Prec,    // v1 ≺ v2 on the index sort
  Ack,     // bit t1 of t2 is 1 (Ackermann membership)
  Diag,    // t2 = diagonalCode(t1)
  ExpRel,  // t2 = 2^t1
  // primitive connectives
  Not,
  Or,
  ExistsNum,  // ∃ v1 (number sort)
  ExistsIdx,  // ∃ v1 (index sort)
  // sugar (retained in the AST; desugar() removes them)
  And,
  Imp,
  Iff,
  ForallNum,
  ForallIdx,
  BoundedExists,  // ∃ v1 ≤ t1. f1
  BoundedForall,  // ∀ v1 ≤ t1. f1
  // additional primitive atoms
  IdxEq,  // v1 = v2 on the index sort
  SentA,  // t1 codes a purely arithmetical sentence
  SubT,   // T holds of the code of φ(t2̲) where φ = decode(t1)
};

struct Formula {
  FormulaKind kind;
  TermPtr t1, t2;       // atom arguments; bound term of Bounded* lives in t1
  std::string v1, v2;   // index-variable / binder names
  FormulaPtr f1, f2;
};

// atom factories
FormulaPtr eq(const TermPtr& a, const TermPtr& b);
FormulaPtr lt(const TermPtr& a, const TermPtr& b);
FormulaPtr tru(const TermPtr& t);
FormulaPtr itru(const std::string& idxVar, const TermPtr& t);
FormulaPtr prec(const std::string& a, const std::string& b);
FormulaPtr ack(const TermPtr& a, const TermPtr& b);
FormulaPtr diag(const TermPtr& a, const TermPtr& b);
FormulaPtr expRel(const TermPtr& a, const TermPtr& b);
FormulaPtr idxEq(const std::string& a, const std::string& b);
FormulaPtr sentA(const TermPtr& t);
FormulaPtr subT(const TermPtr& code, const TermPtr& arg);

// connective factories
FormulaPtr mkNot(const FormulaPtr& f);
FormulaPtr mkOr(const FormulaPtr& a, const FormulaPtr& b);
FormulaPtr existsNum(const std::string& v, const FormulaPtr& f);
FormulaPtr existsIdx(const std::string& v, const FormulaPtr& f);
FormulaPtr mkAnd(const FormulaPtr& a, const FormulaPtr& b);
FormulaPtr imp(const FormulaPtr& a, const FormulaPtr& b);
FormulaPtr iff(const FormulaPtr& a, const FormulaPtr& b);
FormulaPtr forallNum(const std::string& v, const FormulaPtr& f);
FormulaPtr forallIdx(const std::string& v, const FormulaPtr& f);
FormulaPtr boundedExists(const std::string& v, const TermPtr& bound, const FormulaPtr& f);
FormulaPtr boundedForall(const std::string& v, const TermPtr& bound, const FormulaPtr& f);

bool equal(const FormulaPtr& a, const FormulaPtr& b);

// classification
bool isAtom(FormulaKind k);
bool isSugar(FormulaKind k);
// No truth or index vocabulary of any kind.
bool isPurelyArithmetical(const FormulaPtr& f);
// Some ITru/Prec/IdxEq atom or index quantifier occurs.
bool hasIndexSyntax(const FormulaPtr& f);
// Some node of the given kind occurs.
bool containsKind(const FormulaPtr& f, FormulaKind k);

}  // namespace ctw
