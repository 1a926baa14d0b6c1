#pragma once

// Injective arbitrary-precision coding of terms and formulas, recognizers
// over codes, the Ackermann bit relation, and closed-term evaluation.
//
// Scheme (self-delimiting prefix code, read MSB first):
//   value bits = [1 guard][sort: 0 term, 1 formula][node]
// The guard bit is the natural leading 1 of the value, so leading zeros of
// the payload survive the round trip through an integer.  Inner nodes carry
// no guard/sort prefix.  Node layout:
//   term    = 3-bit tag in constructor order (Var Num Succ Add Mul)
//             followed by components
//   formula = 5-bit tag in constructor order (see FormulaKind)
//             followed by components
// Components: variables and numeral values use varnat(n) = Elias-gamma(n+1);
// children are encoded in place.  Decoding demands full consumption of the
// bit string, rejects invalid tags, rejects 0 and 1, and rejects a Succ node
// directly over a Num node (constructors fold that shape away, so such a
// string would denote an unreachable tree).

#include <string>
#include <unordered_map>

#include "ast.hpp"

namespace ctw {

// Stateful encoder with a per-node cache; cheap to reuse when many formulas
// share subtrees.
class Coder {
 public:
  Nat term(const TermPtr& t);
  Nat formula(const FormulaPtr& f);

 private:
  friend void encodeTermInto(Coder&, const TermPtr&, std::string&);
  friend void encodeFormulaInto(Coder&, const FormulaPtr&, std::string&);
  // Keys are owning pointers: a cached node must stay alive, otherwise its
  // address could be recycled by a fresh allocation and alias a stale entry.
  std::unordered_map<TermPtr, std::string> termCache_;
  std::unordered_map<FormulaPtr, std::string> formulaCache_;
};

Nat encodeTerm(const TermPtr& t);
Nat encodeFormula(const FormulaPtr& f);

// Exactly one of the two fields is non-null.
struct Decoded {
  TermPtr term;
  FormulaPtr formula;
};

// Throw NotACodeError when g is not in the range of the encoder.
Decoded decode(const Nat& g);
TermPtr decodeTerm(const Nat& g);
FormulaPtr decodeFormula(const Nat& g);

bool isCode(const Nat& g);
bool isFormulaCode(const Nat& g);

// True iff g decodes to a closed formula of the arithmetic fragment
// (no truth or index vocabulary).
bool isSentenceA(const Nat& g);

// True iff g decodes to an arithmetic-fragment formula with exactly n
// distinct free variables.
bool isFormAn(const Nat& g, const Nat& n);

// Bit x of the binary expansion of y.
bool ackBit(const Nat& x, const Nat& y);

// Standard-model value of a closed term; DomainError on free variables.
Nat evalClosedTerm(const TermPtr& t);

}  // namespace ctw
