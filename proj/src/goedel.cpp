#include "goedel.hpp"

#include "syntax.hpp"

namespace ctw {

namespace {

// Elias gamma of m ≥ 1: (bitlen−1) zeros, then the binary digits of m.
void gammaInto(const Nat& m, std::string& out) {
  unsigned len = boost::multiprecision::msb(m) + 1;
  out.append(len - 1, '0');
  for (unsigned i = len; i-- > 0;)
    out.push_back(boost::multiprecision::bit_test(m, i) ? '1' : '0');
}

void varnatInto(const Nat& n, std::string& out) { gammaInto(n + 1, out); }

void tagInto(unsigned tag, unsigned width, std::string& out) {
  for (unsigned i = width; i-- > 0;) out.push_back((tag >> i) & 1 ? '1' : '0');
}

Nat bitsToNat(const std::string& bits) {
  Nat n = 0;
  for (char c : bits) {
    n <<= 1;
    if (c == '1') boost::multiprecision::bit_set(n, 0);
  }
  return n;
}

}  // namespace

void encodeTermInto(Coder& c, const TermPtr& t, std::string& out) {
  auto it = c.termCache_.find(t);
  if (it != c.termCache_.end()) {
    out += it->second;
    return;
  }
  std::string bits;
  tagInto(static_cast<unsigned>(t->kind), 3, bits);
  switch (t->kind) {
    case TermKind::Var: varnatInto(nameToIndex(t->name), bits); break;
    case TermKind::Num: varnatInto(t->value, bits); break;
    case TermKind::Succ: encodeTermInto(c, t->a, bits); break;
    case TermKind::Add:
    case TermKind::Mul:
      encodeTermInto(c, t->a, bits);
      encodeTermInto(c, t->b, bits);
      break;
  }
  out += bits;
  c.termCache_.emplace(t, std::move(bits));
}

void encodeFormulaInto(Coder& c, const FormulaPtr& f, std::string& out) {
  auto it = c.formulaCache_.find(f);
  if (it != c.formulaCache_.end()) {
    out += it->second;
    return;
  }
  std::string bits;
  tagInto(static_cast<unsigned>(f->kind), 5, bits);
  switch (f->kind) {
    case FormulaKind::Eq:
    case FormulaKind::Lt:
    case FormulaKind::Ack:
    case FormulaKind::Diag:
    case FormulaKind::ExpRel:
    case FormulaKind::SubT:
      encodeTermInto(c, f->t1, bits);
      encodeTermInto(c, f->t2, bits);
      break;
    case FormulaKind::Tru:
    case FormulaKind::SentA:
      encodeTermInto(c, f->t1, bits);
      break;
    case FormulaKind::ITru:
      varnatInto(nameToIndex(f->v1), bits);
      encodeTermInto(c, f->t1, bits);
      break;
    case FormulaKind::Prec:
    case FormulaKind::IdxEq:
      varnatInto(nameToIndex(f->v1), bits);
      varnatInto(nameToIndex(f->v2), bits);
      break;
    case FormulaKind::Not:
      encodeFormulaInto(c, f->f1, bits);
      break;
    case FormulaKind::Or:
    case FormulaKind::And:
    case FormulaKind::Imp:
    case FormulaKind::Iff:
      encodeFormulaInto(c, f->f1, bits);
      encodeFormulaInto(c, f->f2, bits);
      break;
    case FormulaKind::ExistsNum:
    case FormulaKind::ExistsIdx:
    case FormulaKind::ForallNum:
    case FormulaKind::ForallIdx:
      varnatInto(nameToIndex(f->v1), bits);
      encodeFormulaInto(c, f->f1, bits);
      break;
    case FormulaKind::BoundedExists:
    case FormulaKind::BoundedForall:
      varnatInto(nameToIndex(f->v1), bits);
      encodeTermInto(c, f->t1, bits);
      encodeFormulaInto(c, f->f1, bits);
      break;
  }
  out += bits;
  c.formulaCache_.emplace(f, std::move(bits));
}

Nat Coder::term(const TermPtr& t) {
  if (!t) throw DomainError("encode: null term");
  std::string bits = "10";  // guard, term sort
  encodeTermInto(*this, t, bits);
  return bitsToNat(bits);
}

Nat Coder::formula(const FormulaPtr& f) {
  if (!f) throw DomainError("encode: null formula");
  std::string bits = "11";  // guard, formula sort
  encodeFormulaInto(*this, f, bits);
  return bitsToNat(bits);
}

Nat encodeTerm(const TermPtr& t) {
  Coder c;
  return c.term(t);
}

Nat encodeFormula(const FormulaPtr& f) {
  Coder c;
  return c.formula(f);
}

// ---------- decoding ----------

namespace {

struct BitReader {
  std::string bits;
  std::size_t pos = 0;

  explicit BitReader(const Nat& g) {
    unsigned len = boost::multiprecision::msb(g) + 1;
    bits.reserve(len);
    for (unsigned i = len; i-- > 0;)
      bits.push_back(boost::multiprecision::bit_test(g, i) ? '1' : '0');
  }

  bool take() {
    if (pos >= bits.size()) throw NotACodeError("not a code: truncated bit string");
    return bits[pos++] == '1';
  }

  unsigned takeTag(unsigned width) {
    unsigned v = 0;
    for (unsigned i = 0; i < width; ++i) v = (v << 1) | (take() ? 1u : 0u);
    return v;
  }

  Nat takeVarnat() {
    std::size_t zeros = 0;
    while (!take()) ++zeros;  // consumes the leading 1 of the payload
    Nat m = 1;
    for (std::size_t i = 0; i < zeros; ++i) {
      m <<= 1;
      if (take()) boost::multiprecision::bit_set(m, 0);
    }
    return m - 1;
  }

  void expectDone() const {
    if (pos != bits.size()) throw NotACodeError("not a code: trailing bits");
  }
};

TermPtr readTerm(BitReader& r) {
  switch (r.takeTag(3)) {
    case 0: return var(indexToName(r.takeVarnat()));
    case 1: return num(r.takeVarnat());
    case 2: {
      TermPtr a = readTerm(r);
      if (a->kind == TermKind::Num)
        throw NotACodeError("not a code: successor applied to a numeral node");
      return succ(a);
    }
    case 3: {
      TermPtr a = readTerm(r);
      return add(a, readTerm(r));
    }
    case 4: {
      TermPtr a = readTerm(r);
      return mul(a, readTerm(r));
    }
    default: throw NotACodeError("not a code: invalid term tag");
  }
}

FormulaPtr readFormula(BitReader& r) {
  unsigned tag = r.takeTag(5);
  if (tag > static_cast<unsigned>(FormulaKind::SubT))
    throw NotACodeError("not a code: invalid formula tag");
  switch (static_cast<FormulaKind>(tag)) {
    case FormulaKind::Eq: {
      TermPtr a = readTerm(r);
      return eq(a, readTerm(r));
    }
    case FormulaKind::Lt: {
      TermPtr a = readTerm(r);
      return lt(a, readTerm(r));
    }
    case FormulaKind::Ack: {
      TermPtr a = readTerm(r);
      return ack(a, readTerm(r));
    }
    case FormulaKind::Diag: {
      TermPtr a = readTerm(r);
      return diag(a, readTerm(r));
    }
    case FormulaKind::ExpRel: {
      TermPtr a = readTerm(r);
      return expRel(a, readTerm(r));
    }
    case FormulaKind::SubT: {
      TermPtr a = readTerm(r);
      return subT(a, readTerm(r));
    }
    case FormulaKind::Tru: return tru(readTerm(r));
    case FormulaKind::SentA: return sentA(readTerm(r));
    case FormulaKind::ITru: {
      std::string v = indexToName(r.takeVarnat());
      return itru(v, readTerm(r));
    }
    case FormulaKind::Prec: {
      std::string a = indexToName(r.takeVarnat());
      return prec(a, indexToName(r.takeVarnat()));
    }
    case FormulaKind::IdxEq: {
      std::string a = indexToName(r.takeVarnat());
      return idxEq(a, indexToName(r.takeVarnat()));
    }
    case FormulaKind::Not: return mkNot(readFormula(r));
    case FormulaKind::Or: {
      FormulaPtr a = readFormula(r);
      return mkOr(a, readFormula(r));
    }
    case FormulaKind::And: {
      FormulaPtr a = readFormula(r);
      return mkAnd(a, readFormula(r));
    }
    case FormulaKind::Imp: {
      FormulaPtr a = readFormula(r);
      return imp(a, readFormula(r));
    }
    case FormulaKind::Iff: {
      FormulaPtr a = readFormula(r);
      return iff(a, readFormula(r));
    }
    case FormulaKind::ExistsNum: {
      std::string v = indexToName(r.takeVarnat());
      return existsNum(v, readFormula(r));
    }
    case FormulaKind::ExistsIdx: {
      std::string v = indexToName(r.takeVarnat());
      return existsIdx(v, readFormula(r));
    }
    case FormulaKind::ForallNum: {
      std::string v = indexToName(r.takeVarnat());
      return forallNum(v, readFormula(r));
    }
    case FormulaKind::ForallIdx: {
      std::string v = indexToName(r.takeVarnat());
      return forallIdx(v, readFormula(r));
    }
    case FormulaKind::BoundedExists: {
      std::string v = indexToName(r.takeVarnat());
      TermPtr b = readTerm(r);
      return boundedExists(v, b, readFormula(r));
    }
    case FormulaKind::BoundedForall: {
      std::string v = indexToName(r.takeVarnat());
      TermPtr b = readTerm(r);
      return boundedForall(v, b, readFormula(r));
    }
  }
  throw NotACodeError("not a code: invalid formula tag");
}

}  // namespace

Decoded decode(const Nat& g) {
  if (g < 2) throw NotACodeError("not a code: values 0 and 1 are outside the range");
  BitReader r(g);
  r.take();  // guard bit, always 1 for a positive value
  bool isFormula = r.take();
  Decoded d;
  if (isFormula)
    d.formula = readFormula(r);
  else
    d.term = readTerm(r);
  r.expectDone();
  return d;
}

TermPtr decodeTerm(const Nat& g) {
  Decoded d = decode(g);
  if (!d.term) throw NotACodeError("not a term code: value codes a formula");
  return d.term;
}

FormulaPtr decodeFormula(const Nat& g) {
  Decoded d = decode(g);
  if (!d.formula) throw NotACodeError("not a formula code: value codes a term");
  return d.formula;
}

bool isCode(const Nat& g) {
  try {
    decode(g);
    return true;
  } catch (const NotACodeError&) {
    return false;
  }
}

bool isFormulaCode(const Nat& g) {
  try {
    decodeFormula(g);
    return true;
  } catch (const NotACodeError&) {
    return false;
  }
}

bool isSentenceA(const Nat& g) {
  try {
    FormulaPtr f = decodeFormula(g);
    return isPurelyArithmetical(f) && isClosed(f);
  } catch (const NotACodeError&) {
    return false;
  }
}

bool isFormAn(const Nat& g, const Nat& n) {
  try {
    FormulaPtr f = decodeFormula(g);
    if (!isPurelyArithmetical(f)) return false;
    return Nat(freeVariables(f).size()) == n;
  } catch (const NotACodeError&) {
    return false;
  }
}

bool ackBit(const Nat& x, const Nat& y) {
  if (y == 0) return false;
  if (x > boost::multiprecision::msb(y)) return false;
  return boost::multiprecision::bit_test(y, x.convert_to<unsigned>());
}

Nat evalClosedTerm(const TermPtr& t) {
  if (!t) throw DomainError("evalClosedTerm: null term");
  switch (t->kind) {
    case TermKind::Var:
      throw DomainError("evalClosedTerm: open term (free variable '" + t->name + "')");
    case TermKind::Num: return t->value;
    case TermKind::Succ: return evalClosedTerm(t->a) + 1;
    case TermKind::Add: return evalClosedTerm(t->a) + evalClosedTerm(t->b);
    case TermKind::Mul: return evalClosedTerm(t->a) * evalClosedTerm(t->b);
  }
  throw DomainError("evalClosedTerm: unknown term kind");
}

}  // namespace ctw
