#include "ast.hpp"

namespace ctw {

bool validIdentifier(const std::string& name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name)
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
  return true;
}

static void checkIdent(const std::string& name, const char* what) {
  if (!validIdentifier(name))
    throw SortError(std::string(what) + " '" + name + "' is not a valid identifier");
}

// ---------- term factories ----------

TermPtr var(const std::string& name) {
  checkIdent(name, "number variable");
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->name = name;
  return t;
}

TermPtr num(const Nat& value) {
  if (value < 0) throw DomainError("numeral value must be a natural");
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Num;
  t->value = value;
  return t;
}

TermPtr zero() { return num(0); }

TermPtr succ(const TermPtr& t) {
  if (!t) throw DomainError("succ: null term");
  if (t->kind == TermKind::Num) return num(t->value + 1);
  auto r = std::make_shared<Term>();
  r->kind = TermKind::Succ;
  r->a = t;
  return r;
}

static TermPtr binTerm(TermKind k, const TermPtr& a, const TermPtr& b) {
  if (!a || !b) throw DomainError("binary term: null argument");
  auto r = std::make_shared<Term>();
  r->kind = k;
  r->a = a;
  r->b = b;
  return r;
}

TermPtr add(const TermPtr& a, const TermPtr& b) { return binTerm(TermKind::Add, a, b); }
TermPtr mul(const TermPtr& a, const TermPtr& b) { return binTerm(TermKind::Mul, a, b); }

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Var: return a->name == b->name;
    case TermKind::Num: return a->value == b->value;
    case TermKind::Succ: return equal(a->a, b->a);
    case TermKind::Add:
    case TermKind::Mul: return equal(a->a, b->a) && equal(a->b, b->b);
  }
  return false;
}

// ---------- formula factories ----------

static FormulaPtr node(FormulaKind k) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  return f;
}

static FormulaPtr atom2(FormulaKind k, const TermPtr& a, const TermPtr& b) {
  if (!a || !b) throw DomainError("atom: null term argument");
  auto f = std::const_pointer_cast<Formula>(node(k));
  f->t1 = a;
  f->t2 = b;
  return f;
}

FormulaPtr eq(const TermPtr& a, const TermPtr& b) { return atom2(FormulaKind::Eq, a, b); }
FormulaPtr lt(const TermPtr& a, const TermPtr& b) { return atom2(FormulaKind::Lt, a, b); }
FormulaPtr ack(const TermPtr& a, const TermPtr& b) { return atom2(FormulaKind::Ack, a, b); }
FormulaPtr diag(const TermPtr& a, const TermPtr& b) { return atom2(FormulaKind::Diag, a, b); }
FormulaPtr expRel(const TermPtr& a, const TermPtr& b) { return atom2(FormulaKind::ExpRel, a, b); }
FormulaPtr subT(const TermPtr& code, const TermPtr& arg) {
  return atom2(FormulaKind::SubT, code, arg);
}

FormulaPtr tru(const TermPtr& t) {
  if (!t) throw DomainError("tru: null term");
  auto f = std::const_pointer_cast<Formula>(node(FormulaKind::Tru));
  f->t1 = t;
  return f;
}

FormulaPtr sentA(const TermPtr& t) {
  if (!t) throw DomainError("senta: null term");
  auto f = std::const_pointer_cast<Formula>(node(FormulaKind::SentA));
  f->t1 = t;
  return f;
}

FormulaPtr itru(const std::string& idxVar, const TermPtr& t) {
  checkIdent(idxVar, "index variable");
  if (!t) throw DomainError("itru: null term");
  auto f = std::const_pointer_cast<Formula>(node(FormulaKind::ITru));
  f->v1 = idxVar;
  f->t1 = t;
  return f;
}

static FormulaPtr idxAtom(FormulaKind k, const std::string& a, const std::string& b) {
  checkIdent(a, "index variable");
  checkIdent(b, "index variable");
  auto f = std::const_pointer_cast<Formula>(node(k));
  f->v1 = a;
  f->v2 = b;
  return f;
}

FormulaPtr prec(const std::string& a, const std::string& b) {
  return idxAtom(FormulaKind::Prec, a, b);
}
FormulaPtr idxEq(const std::string& a, const std::string& b) {
  return idxAtom(FormulaKind::IdxEq, a, b);
}

FormulaPtr mkNot(const FormulaPtr& f) {
  if (!f) throw DomainError("not: null formula");
  auto r = std::const_pointer_cast<Formula>(node(FormulaKind::Not));
  r->f1 = f;
  return r;
}

static FormulaPtr bin(FormulaKind k, const FormulaPtr& a, const FormulaPtr& b) {
  if (!a || !b) throw DomainError("binary connective: null argument");
  auto r = std::const_pointer_cast<Formula>(node(k));
  r->f1 = a;
  r->f2 = b;
  return r;
}

FormulaPtr mkOr(const FormulaPtr& a, const FormulaPtr& b) { return bin(FormulaKind::Or, a, b); }
FormulaPtr mkAnd(const FormulaPtr& a, const FormulaPtr& b) { return bin(FormulaKind::And, a, b); }
FormulaPtr imp(const FormulaPtr& a, const FormulaPtr& b) { return bin(FormulaKind::Imp, a, b); }
FormulaPtr iff(const FormulaPtr& a, const FormulaPtr& b) { return bin(FormulaKind::Iff, a, b); }

static FormulaPtr quant(FormulaKind k, const std::string& v, const FormulaPtr& f) {
  checkIdent(v, "bound variable");
  if (!f) throw DomainError("quantifier: null body");
  auto r = std::const_pointer_cast<Formula>(node(k));
  r->v1 = v;
  r->f1 = f;
  return r;
}

FormulaPtr existsNum(const std::string& v, const FormulaPtr& f) {
  return quant(FormulaKind::ExistsNum, v, f);
}
FormulaPtr existsIdx(const std::string& v, const FormulaPtr& f) {
  return quant(FormulaKind::ExistsIdx, v, f);
}
FormulaPtr forallNum(const std::string& v, const FormulaPtr& f) {
  return quant(FormulaKind::ForallNum, v, f);
}
FormulaPtr forallIdx(const std::string& v, const FormulaPtr& f) {
  return quant(FormulaKind::ForallIdx, v, f);
}

static FormulaPtr bounded(FormulaKind k, const std::string& v, const TermPtr& bound,
                          const FormulaPtr& f) {
  checkIdent(v, "bound variable");
  if (!bound || !f) throw DomainError("bounded quantifier: null argument");
  auto r = std::const_pointer_cast<Formula>(node(k));
  r->v1 = v;
  r->t1 = bound;
  r->f1 = f;
  return r;
}

FormulaPtr boundedExists(const std::string& v, const TermPtr& bound, const FormulaPtr& f) {
  return bounded(FormulaKind::BoundedExists, v, bound, f);
}
FormulaPtr boundedForall(const std::string& v, const TermPtr& bound, const FormulaPtr& f) {
  return bounded(FormulaKind::BoundedForall, v, bound, f);
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  if (a->v1 != b->v1 || a->v2 != b->v2) return false;
  if (!equal(a->t1, b->t1) || !equal(a->t2, b->t2)) return false;
  return equal(a->f1, b->f1) && equal(a->f2, b->f2);
}

// ---------- classification ----------

bool isAtom(FormulaKind k) {
  switch (k) {
    case FormulaKind::Eq:
    case FormulaKind::Lt:
    case FormulaKind::Tru:
    case FormulaKind::ITru:
    case FormulaKind::Prec:
    case FormulaKind::Ack:
    case FormulaKind::Diag:
    case FormulaKind::ExpRel:
    case FormulaKind::IdxEq:
    case FormulaKind::SentA:
    case FormulaKind::SubT: return true;
    default: return false;
  }
}

bool isSugar(FormulaKind k) {
  switch (k) {
    case FormulaKind::And:
    case FormulaKind::Imp:
    case FormulaKind::Iff:
    case FormulaKind::ForallNum:
    case FormulaKind::ForallIdx:
    case FormulaKind::BoundedExists:
    case FormulaKind::BoundedForall: return true;
    default: return false;
  }
}

static bool allOf(const FormulaPtr& f, bool (*bad)(FormulaKind)) {
  if (!f) return true;
  if (bad(f->kind)) return false;
  return allOf(f->f1, bad) && allOf(f->f2, bad);
}

bool isPurelyArithmetical(const FormulaPtr& f) {
  return allOf(f, [](FormulaKind k) {
    return k == FormulaKind::Tru || k == FormulaKind::SentA || k == FormulaKind::ITru ||
           k == FormulaKind::Prec || k == FormulaKind::IdxEq || k == FormulaKind::SubT ||
           k == FormulaKind::ExistsIdx || k == FormulaKind::ForallIdx;
  });
}

bool hasIndexSyntax(const FormulaPtr& f) {
  return !allOf(f, [](FormulaKind k) {
    return k == FormulaKind::ITru || k == FormulaKind::Prec || k == FormulaKind::IdxEq ||
           k == FormulaKind::ExistsIdx || k == FormulaKind::ForallIdx;
  });
}

bool containsKind(const FormulaPtr& f, FormulaKind k) {
  if (!f) return false;
  if (f->kind == k) return true;
  return containsKind(f->f1, k) || containsKind(f->f2, k);
}

}  // namespace ctw
