#include "syntax.hpp"

#include "sexpr.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>

namespace ctw {

// ---------- identifier order ----------

namespace {

// Continuation alphabet in order: digits, underscore, letters (base 37).
int contIndex(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c == '_') return 10;
  if (c >= 'a' && c <= 'z') return 11 + (c - 'a');
  return -1;
}

char contChar(int i) {
  if (i < 10) return static_cast<char>('0' + i);
  if (i == 10) return '_';
  return static_cast<char>('a' + (i - 11));
}

}  // namespace

Nat nameToIndex(const std::string& name) {
  if (!validIdentifier(name))
    throw DomainError("'" + name + "' is not a valid identifier");
  std::size_t len = name.size();
  // offset = number of identifiers shorter than `len`
  Nat offset = 0, block = 26;
  for (std::size_t l = 1; l < len; ++l) {
    offset += block;
    block *= 37;
  }
  Nat rank = name[0] - 'a';
  for (std::size_t i = 1; i < len; ++i) rank = rank * 37 + contIndex(name[i]);
  return offset + rank;
}

std::string indexToName(const Nat& index) {
  Nat i = index;
  std::size_t len = 1;
  Nat block = 26;
  while (i >= block) {
    i -= block;
    block *= 37;
    ++len;
  }
  // i is the rank within length `len`; peel continuation digits from the right
  std::string out(len, 'a');
  for (std::size_t p = len; p-- > 1;) {
    out[p] = contChar(static_cast<int>(i % 37));
    i /= 37;
  }
  out[0] = static_cast<char>('a' + static_cast<int>(i));
  return out;
}

std::string leastUnusedName(const std::set<std::string>& used) {
  for (Nat i = 0;; ++i) {
    std::string cand = indexToName(i);
    if (!used.count(cand)) return cand;
  }
}

// ---------- parsing ----------

namespace {

// Tracks binder scopes so that a bound name used at the wrong sort is a
// SortError; free names take their sort from position.
struct ScopeStack {
  std::map<std::string, std::vector<Sort>> scopes;

  void push(const std::string& v, Sort s) { scopes[v].push_back(s); }
  void pop(const std::string& v) {
    auto it = scopes.find(v);
    it->second.pop_back();
    if (it->second.empty()) scopes.erase(it);
  }
  const Sort* boundSort(const std::string& v) const {
    auto it = scopes.find(v);
    if (it == scopes.end() || it->second.empty()) return nullptr;
    return &it->second.back();
  }
};

[[noreturn]] void fail(const SExpr& e, const std::string& msg) {
  throw ParseError(msg, e.pos);
}

void expectArity(const SExpr& e, std::size_t n, const char* head) {
  if (e.items.size() != n)
    fail(e, std::string("'") + head + "' expects " + std::to_string(n - 1) + " argument(s)");
}

std::string identOf(const SExpr& e, const char* what) {
  if (!e.isAtom || e.quoted || !validIdentifier(e.atom))
    fail(e, std::string("expected an identifier for ") + what);
  return e.atom;
}

Nat natOf(const SExpr& e) {
  if (!e.isAtom || e.quoted || e.atom.empty()) fail(e, "expected a numeral literal");
  for (char c : e.atom)
    if (c < '0' || c > '9') fail(e, "expected a numeral literal");
  return Nat(e.atom);
}

// Index-variable position: a bare identifier or (ivar a).
std::string idxVarOf(const SExpr& e, ScopeStack& sc) {
  std::string name;
  if (e.isAtom) {
    name = identOf(e, "an index variable");
  } else {
    if (e.items.size() != 2 || !e.items[0].isAtom || e.items[0].atom != "ivar")
      fail(e, "expected an index variable");
    name = identOf(e.items[1], "an index variable");
  }
  if (const Sort* s = sc.boundSort(name); s && *s != Sort::Index)
    throw SortError("sort violation: number variable '" + name + "' used at index sort");
  return name;
}

TermPtr termOf(const SExpr& e, ScopeStack& sc);

TermPtr termOf(const SExpr& e, ScopeStack& sc) {
  if (e.isAtom) {
    if (e.atom == "z") return zero();
    fail(e, "unknown term atom '" + e.atom + "'");
  }
  if (e.items.empty() || !e.items[0].isAtom) fail(e, "expected a term");
  const std::string& head = e.items[0].atom;
  if (head == "s") {
    expectArity(e, 2, "s");
    return succ(termOf(e.items[1], sc));
  }
  if (head == "+") {
    expectArity(e, 3, "+");
    return add(termOf(e.items[1], sc), termOf(e.items[2], sc));
  }
  if (head == "*") {
    expectArity(e, 3, "*");
    return mul(termOf(e.items[1], sc), termOf(e.items[2], sc));
  }
  if (head == "var") {
    expectArity(e, 2, "var");
    std::string name = identOf(e.items[1], "a number variable");
    if (const Sort* s = sc.boundSort(name); s && *s != Sort::Number)
      throw SortError("sort violation: index variable '" + name + "' used at number sort");
    return var(name);
  }
  if (head == "ivar")
    throw SortError("sort violation: index variable in number-term position");
  if (head == "num") {
    expectArity(e, 2, "num");
    return num(natOf(e.items[1]));
  }
  fail(e, "unknown term head '" + head + "'");
}

FormulaPtr formulaOf(const SExpr& e, ScopeStack& sc);

FormulaPtr quantOf(const SExpr& e, ScopeStack& sc, Sort sort,
                   FormulaPtr (*mk)(const std::string&, const FormulaPtr&)) {
  expectArity(e, 3, e.items[0].atom.c_str());
  std::string v = identOf(e.items[1], "a bound variable");
  sc.push(v, sort);
  FormulaPtr body = formulaOf(e.items[2], sc);
  sc.pop(v);
  return mk(v, body);
}

FormulaPtr boundedOf(const SExpr& e, ScopeStack& sc,
                     FormulaPtr (*mk)(const std::string&, const TermPtr&, const FormulaPtr&)) {
  expectArity(e, 4, e.items[0].atom.c_str());
  std::string v = identOf(e.items[1], "a bound variable");
  TermPtr bound = termOf(e.items[2], sc);  // bound term is outside the scope of v
  sc.push(v, Sort::Number);
  FormulaPtr body = formulaOf(e.items[3], sc);
  sc.pop(v);
  return mk(v, bound, body);
}

FormulaPtr formulaOf(const SExpr& e, ScopeStack& sc) {
  if (e.isAtom) fail(e, "expected a formula");
  if (e.items.empty() || !e.items[0].isAtom) fail(e, "expected a formula");
  const std::string& head = e.items[0].atom;

  auto atom2 = [&](FormulaPtr (*mk)(const TermPtr&, const TermPtr&)) {
    expectArity(e, 3, head.c_str());
    return mk(termOf(e.items[1], sc), termOf(e.items[2], sc));
  };
  auto bin2 = [&](FormulaPtr (*mk)(const FormulaPtr&, const FormulaPtr&)) {
    expectArity(e, 3, head.c_str());
    return mk(formulaOf(e.items[1], sc), formulaOf(e.items[2], sc));
  };

  if (head == "eq") return atom2(eq);
  if (head == "lt") return atom2(lt);
  if (head == "ack") return atom2(ack);
  if (head == "diag") return atom2(diag);
  if (head == "exp") return atom2(expRel);
  if (head == "subt") return atom2(subT);
  if (head == "tru") {
    expectArity(e, 2, "tru");
    return tru(termOf(e.items[1], sc));
  }
  if (head == "senta") {
    expectArity(e, 2, "senta");
    return sentA(termOf(e.items[1], sc));
  }
  if (head == "itru") {
    expectArity(e, 3, "itru");
    std::string a = idxVarOf(e.items[1], sc);
    return itru(a, termOf(e.items[2], sc));
  }
  if (head == "prec") {
    expectArity(e, 3, "prec");
    return prec(idxVarOf(e.items[1], sc), idxVarOf(e.items[2], sc));
  }
  if (head == "ieq") {
    expectArity(e, 3, "ieq");
    return idxEq(idxVarOf(e.items[1], sc), idxVarOf(e.items[2], sc));
  }
  if (head == "not") {
    expectArity(e, 2, "not");
    return mkNot(formulaOf(e.items[1], sc));
  }
  if (head == "or") return bin2(mkOr);
  if (head == "and") return bin2(mkAnd);
  if (head == "imp") return bin2(imp);
  if (head == "iff") return bin2(iff);
  if (head == "ex") return quantOf(e, sc, Sort::Number, existsNum);
  if (head == "all") return quantOf(e, sc, Sort::Number, forallNum);
  if (head == "ex-i") return quantOf(e, sc, Sort::Index, existsIdx);
  if (head == "all-i") return quantOf(e, sc, Sort::Index, forallIdx);
  if (head == "ex-le") return boundedOf(e, sc, boundedExists);
  if (head == "all-le") return boundedOf(e, sc, boundedForall);
  fail(e, "unknown formula head '" + head + "'");
}

}  // namespace

FormulaPtr parseFormula(const std::string& text) {
  SExpr e = sexprParseOne(text);
  ScopeStack sc;
  return formulaOf(e, sc);
}

TermPtr parseTerm(const std::string& text) {
  SExpr e = sexprParseOne(text);
  ScopeStack sc;
  return termOf(e, sc);
}

std::vector<FormulaPtr> parseFormulas(const std::string& text) {
  std::vector<FormulaPtr> out;
  for (const SExpr& e : sexprParseMany(text)) {
    ScopeStack sc;
    out.push_back(formulaOf(e, sc));
  }
  return out;
}

FormulaPtr formulaFromSExpr(const SExpr& e) {
  ScopeStack sc;
  return formulaOf(e, sc);
}

// ---------- rendering ----------

namespace {

// Numerals up to this value render as literal s-towers; larger as (num N).
constexpr unsigned kTowerRenderMax = 64;

void renderTermInto(const TermPtr& t, std::string& out) {
  switch (t->kind) {
    case TermKind::Var:
      out += "(var ";
      out += t->name;
      out.push_back(')');
      return;
    case TermKind::Num: {
      if (t->value > kTowerRenderMax) {
        out += "(num ";
        out += t->value.str();
        out.push_back(')');
        return;
      }
      unsigned n = static_cast<unsigned>(t->value);
      for (unsigned i = 0; i < n; ++i) out += "(s ";
      out.push_back('z');
      for (unsigned i = 0; i < n; ++i) out.push_back(')');
      return;
    }
    case TermKind::Succ:
      out += "(s ";
      renderTermInto(t->a, out);
      out.push_back(')');
      return;
    case TermKind::Add:
    case TermKind::Mul:
      out += (t->kind == TermKind::Add) ? "(+ " : "(* ";
      renderTermInto(t->a, out);
      out.push_back(' ');
      renderTermInto(t->b, out);
      out.push_back(')');
      return;
  }
}

void renderFormulaInto(const FormulaPtr& f, std::string& out) {
  auto atom2 = [&](const char* head) {
    out += head;
    out.push_back(' ');
    renderTermInto(f->t1, out);
    out.push_back(' ');
    renderTermInto(f->t2, out);
    out.push_back(')');
  };
  auto bin2 = [&](const char* head) {
    out += head;
    out.push_back(' ');
    renderFormulaInto(f->f1, out);
    out.push_back(' ');
    renderFormulaInto(f->f2, out);
    out.push_back(')');
  };
  auto quant = [&](const char* head) {
    out += head;
    out.push_back(' ');
    out += f->v1;
    out.push_back(' ');
    renderFormulaInto(f->f1, out);
    out.push_back(')');
  };
  switch (f->kind) {
    case FormulaKind::Eq: atom2("(eq"); return;
    case FormulaKind::Lt: atom2("(lt"); return;
    case FormulaKind::Ack: atom2("(ack"); return;
    case FormulaKind::Diag: atom2("(diag"); return;
    case FormulaKind::ExpRel: atom2("(exp"); return;
    case FormulaKind::SubT: atom2("(subt"); return;
    case FormulaKind::Tru:
      out += "(tru ";
      renderTermInto(f->t1, out);
      out.push_back(')');
      return;
    case FormulaKind::SentA:
      out += "(senta ";
      renderTermInto(f->t1, out);
      out.push_back(')');
      return;
    case FormulaKind::ITru:
      out += "(itru ";
      out += f->v1;
      out.push_back(' ');
      renderTermInto(f->t1, out);
      out.push_back(')');
      return;
    case FormulaKind::Prec:
    case FormulaKind::IdxEq:
      out += (f->kind == FormulaKind::Prec) ? "(prec " : "(ieq ";
      out += f->v1;
      out.push_back(' ');
      out += f->v2;
      out.push_back(')');
      return;
    case FormulaKind::Not:
      out += "(not ";
      renderFormulaInto(f->f1, out);
      out.push_back(')');
      return;
    case FormulaKind::Or: bin2("(or"); return;
    case FormulaKind::And: bin2("(and"); return;
    case FormulaKind::Imp: bin2("(imp"); return;
    case FormulaKind::Iff: bin2("(iff"); return;
    case FormulaKind::ExistsNum: quant("(ex"); return;
    case FormulaKind::ForallNum: quant("(all"); return;
    case FormulaKind::ExistsIdx: quant("(ex-i"); return;
    case FormulaKind::ForallIdx: quant("(all-i"); return;
    case FormulaKind::BoundedExists:
    case FormulaKind::BoundedForall:
      out += (f->kind == FormulaKind::BoundedExists) ? "(ex-le " : "(all-le ";
      out += f->v1;
      out.push_back(' ');
      renderTermInto(f->t1, out);
      out.push_back(' ');
      renderFormulaInto(f->f1, out);
      out.push_back(')');
      return;
  }
}

}  // namespace

std::string renderTerm(const TermPtr& t) {
  std::string out;
  renderTermInto(t, out);
  return out;
}

std::string renderFormula(const FormulaPtr& f) {
  std::string out;
  renderFormulaInto(f, out);
  return out;
}

// ---------- variables ----------

void freeTermVariables(const TermPtr& t, VarSet& out) {
  if (!t) return;
  if (t->kind == TermKind::Var) out.insert({t->name, Sort::Number});
  freeTermVariables(t->a, out);
  freeTermVariables(t->b, out);
}

namespace {

void freeVarsRec(const FormulaPtr& f, VarSet& bound, VarSet& out) {
  if (!f) return;
  auto addTerm = [&](const TermPtr& t) {
    VarSet vs;
    freeTermVariables(t, vs);
    for (auto& v : vs)
      if (!bound.count(v)) out.insert(v);
  };
  auto addIdx = [&](const std::string& name) {
    std::pair<std::string, Sort> v{name, Sort::Index};
    if (!bound.count(v)) out.insert(v);
  };
  switch (f->kind) {
    case FormulaKind::ITru:
      addIdx(f->v1);
      addTerm(f->t1);
      return;
    case FormulaKind::Prec:
    case FormulaKind::IdxEq:
      addIdx(f->v1);
      addIdx(f->v2);
      return;
    case FormulaKind::ExistsNum:
    case FormulaKind::ForallNum:
    case FormulaKind::ExistsIdx:
    case FormulaKind::ForallIdx: {
      Sort s = (f->kind == FormulaKind::ExistsIdx || f->kind == FormulaKind::ForallIdx)
                   ? Sort::Index
                   : Sort::Number;
      std::pair<std::string, Sort> v{f->v1, s};
      bool wasBound = bound.count(v);
      bound.insert(v);
      freeVarsRec(f->f1, bound, out);
      if (!wasBound) bound.erase(v);
      return;
    }
    case FormulaKind::BoundedExists:
    case FormulaKind::BoundedForall: {
      addTerm(f->t1);  // bound term sits outside the binder scope
      std::pair<std::string, Sort> v{f->v1, Sort::Number};
      bool wasBound = bound.count(v);
      bound.insert(v);
      freeVarsRec(f->f1, bound, out);
      if (!wasBound) bound.erase(v);
      return;
    }
    default:
      addTerm(f->t1);
      addTerm(f->t2);
      freeVarsRec(f->f1, bound, out);
      freeVarsRec(f->f2, bound, out);
      return;
  }
}

void allNamesTerm(const TermPtr& t, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind == TermKind::Var) out.insert(t->name);
  allNamesTerm(t->a, out);
  allNamesTerm(t->b, out);
}

void allNamesRec(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (!f->v1.empty()) out.insert(f->v1);
  if (!f->v2.empty()) out.insert(f->v2);
  allNamesTerm(f->t1, out);
  allNamesTerm(f->t2, out);
  allNamesRec(f->f1, out);
  allNamesRec(f->f2, out);
}

}  // namespace

VarSet freeVariables(const FormulaPtr& f) {
  VarSet bound, out;
  freeVarsRec(f, bound, out);
  return out;
}

bool isClosed(const FormulaPtr& f) { return freeVariables(f).empty(); }

std::set<std::string> allNames(const FormulaPtr& f) {
  std::set<std::string> out;
  allNamesRec(f, out);
  return out;
}

// ---------- numeral ----------

TermPtr numeral(const Nat& n) { return num(n); }

// ---------- desugar ----------

FormulaPtr desugar(const FormulaPtr& f) {
  if (!f) return f;
  switch (f->kind) {
    case FormulaKind::Not: {
      FormulaPtr a = desugar(f->f1);
      return a == f->f1 ? f : mkNot(a);
    }
    case FormulaKind::Or: {
      FormulaPtr a = desugar(f->f1), b = desugar(f->f2);
      return (a == f->f1 && b == f->f2) ? f : mkOr(a, b);
    }
    case FormulaKind::ExistsNum:
    case FormulaKind::ExistsIdx: {
      FormulaPtr a = desugar(f->f1);
      if (a == f->f1) return f;
      return f->kind == FormulaKind::ExistsNum ? existsNum(f->v1, a) : existsIdx(f->v1, a);
    }
    case FormulaKind::And: {
      FormulaPtr a = desugar(f->f1), b = desugar(f->f2);
      return mkNot(mkOr(mkNot(a), mkNot(b)));
    }
    case FormulaKind::Imp: {
      FormulaPtr a = desugar(f->f1), b = desugar(f->f2);
      return mkOr(mkNot(a), b);
    }
    case FormulaKind::Iff: {
      FormulaPtr a = desugar(f->f1), b = desugar(f->f2);
      FormulaPtr ab = mkOr(mkNot(a), b), ba = mkOr(mkNot(b), a);
      return mkNot(mkOr(mkNot(ab), mkNot(ba)));
    }
    case FormulaKind::ForallNum:
      return mkNot(existsNum(f->v1, mkNot(desugar(f->f1))));
    case FormulaKind::ForallIdx:
      return mkNot(existsIdx(f->v1, mkNot(desugar(f->f1))));
    case FormulaKind::BoundedExists: {
      // ∃x≤t φ ↦ ∃x(¬(t<x) ∧ φ), with the ∧ in primitive form
      FormulaPtr body = desugar(f->f1);
      FormulaPtr guard = mkNot(lt(f->t1, var(f->v1)));
      return existsNum(f->v1, mkNot(mkOr(mkNot(guard), mkNot(body))));
    }
    case FormulaKind::BoundedForall: {
      // ∀x≤t φ ↦ ¬∃x≤t¬φ
      FormulaPtr body = desugar(f->f1);
      FormulaPtr guard = mkNot(lt(f->t1, var(f->v1)));
      return mkNot(existsNum(f->v1, mkNot(mkOr(mkNot(guard), mkNot(mkNot(body))))));
    }
    default:
      return f;  // atoms are already primitive
  }
}

// ---------- substitution ----------

TermPtr substituteTerm(const TermPtr& in, const std::string& v, const TermPtr& t) {
  if (!in) return in;
  switch (in->kind) {
    case TermKind::Var: return in->name == v ? t : in;
    case TermKind::Num: return in;
    case TermKind::Succ: {
      TermPtr a = substituteTerm(in->a, v, t);
      return a == in->a ? in : succ(a);
    }
    case TermKind::Add:
    case TermKind::Mul: {
      TermPtr a = substituteTerm(in->a, v, t);
      TermPtr b = substituteTerm(in->b, v, t);
      if (a == in->a && b == in->b) return in;
      return in->kind == TermKind::Add ? add(a, b) : mul(a, b);
    }
  }
  return in;
}

namespace {

bool freeInTerm(const TermPtr& t, const std::string& v) {
  if (!t) return false;
  if (t->kind == TermKind::Var) return t->name == v;
  return freeInTerm(t->a, v) || freeInTerm(t->b, v);
}

bool freeNumVarIn(const FormulaPtr& f, const std::string& v) {
  return freeVariables(f).count({v, Sort::Number}) != 0;
}

// Rename a number binder's variable to `fresh` inside its body: a plain
// traversal is safe because `fresh` occurs nowhere in the formula.
FormulaPtr renameFreeNumVar(const FormulaPtr& f, const std::string& from, const TermPtr& to);

struct Subst {
  std::string v;
  TermPtr t;
  std::set<std::string> used;  // all names in the whole formula, t, and v

  FormulaPtr apply(const FormulaPtr& f) {
    if (!f) return f;
    switch (f->kind) {
      case FormulaKind::ExistsNum:
      case FormulaKind::ForallNum:
      case FormulaKind::BoundedExists:
      case FormulaKind::BoundedForall: {
        bool isBounded =
            f->kind == FormulaKind::BoundedExists || f->kind == FormulaKind::BoundedForall;
        TermPtr bound = isBounded ? substituteTerm(f->t1, v, t) : nullptr;
        if (f->v1 == v) {
          // binder shadows v; only the bound term (outside the scope) changes
          if (!isBounded || bound == f->t1) return f;
          return f->kind == FormulaKind::BoundedExists ? boundedExists(f->v1, bound, f->f1)
                                                       : boundedForall(f->v1, bound, f->f1);
        }
        FormulaPtr body = f->f1;
        std::string binder = f->v1;
        if (freeInTerm(t, binder) && freeNumVarIn(body, v)) {
          // would capture: rename the binder to the least unused identifier
          std::string fresh = leastUnusedName(used);
          used.insert(fresh);
          body = renameFreeNumVar(body, binder, var(fresh));
          binder = fresh;
        }
        FormulaPtr nb = apply(body);
        if (nb == f->f1 && binder == f->v1 && (!isBounded || bound == f->t1)) return f;
        switch (f->kind) {
          case FormulaKind::ExistsNum: return existsNum(binder, nb);
          case FormulaKind::ForallNum: return forallNum(binder, nb);
          case FormulaKind::BoundedExists: return boundedExists(binder, bound, nb);
          default: return boundedForall(binder, bound, nb);
        }
      }
      case FormulaKind::ExistsIdx:
      case FormulaKind::ForallIdx: {
        // index binders cannot capture number terms
        FormulaPtr nb = apply(f->f1);
        if (nb == f->f1) return f;
        return f->kind == FormulaKind::ExistsIdx ? existsIdx(f->v1, nb) : forallIdx(f->v1, nb);
      }
      default: {
        TermPtr a = substituteTerm(f->t1, v, t);
        TermPtr b = substituteTerm(f->t2, v, t);
        FormulaPtr x = apply(f->f1);
        FormulaPtr y = apply(f->f2);
        if (a == f->t1 && b == f->t2 && x == f->f1 && y == f->f2) return f;
        auto r = std::make_shared<Formula>();
        r->kind = f->kind;
        r->t1 = a;
        r->t2 = b;
        r->v1 = f->v1;
        r->v2 = f->v2;
        r->f1 = x;
        r->f2 = y;
        return r;
      }
    }
  }
};

FormulaPtr renameFreeNumVar(const FormulaPtr& f, const std::string& from, const TermPtr& to) {
  Subst s;
  s.v = from;
  s.t = to;
  // `to` is a fresh variable, so no capture is possible and `used` stays empty
  return s.apply(f);
}

}  // namespace

FormulaPtr substitute(const FormulaPtr& f, const std::string& v, const TermPtr& t) {
  if (!validIdentifier(v)) throw DomainError("substitute: invalid variable '" + v + "'");
  if (!t) throw DomainError("substitute: null term");
  Subst s;
  s.v = v;
  s.t = t;
  s.used = allNames(f);
  allNamesTerm(t, s.used);
  s.used.insert(v);
  return s.apply(f);
}

// ---------- universal closure ----------

FormulaPtr universalClosure(const FormulaPtr& f) {
  VarSet fv = freeVariables(f);
  std::vector<std::string> nums, idxs;
  for (auto& [name, sort] : fv)
    (sort == Sort::Number ? nums : idxs).push_back(name);
  auto byOrder = [](const std::string& a, const std::string& b) {
    return nameToIndex(a) < nameToIndex(b);
  };
  std::sort(nums.begin(), nums.end(), byOrder);
  std::sort(idxs.begin(), idxs.end(), byOrder);
  FormulaPtr out = f;
  for (auto it = idxs.rbegin(); it != idxs.rend(); ++it) out = forallIdx(*it, out);
  for (auto it = nums.rbegin(); it != nums.rend(); ++it) out = forallNum(*it, out);
  return out;
}

// ---------- big connectives ----------

FormulaPtr bigOr(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) throw DomainError("bigOr: empty disjunction rejected");
  FormulaPtr out = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) out = mkOr(out, fs[i]);
  return out;
}

FormulaPtr bigAnd(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) throw DomainError("bigAnd: empty conjunction rejected");
  std::vector<FormulaPtr> negs;
  negs.reserve(fs.size());
  for (const auto& f : fs) negs.push_back(mkNot(f));
  return mkNot(bigOr(negs));
}

// ---------- relativization ----------

namespace {

bool hasIdxBinderNamed(const FormulaPtr& f, const std::string& name) {
  if (!f) return false;
  if ((f->kind == FormulaKind::ExistsIdx || f->kind == FormulaKind::ForallIdx) && f->v1 == name)
    return true;
  return hasIdxBinderNamed(f->f1, name) || hasIdxBinderNamed(f->f2, name);
}

// Renames free occurrences of index variable `from` to `to`; stops at
// shadowing binders.
FormulaPtr renameFreeIdxVar(const FormulaPtr& f, const std::string& from, const std::string& to) {
  if (!f) return f;
  switch (f->kind) {
    case FormulaKind::ITru:
      return f->v1 == from ? itru(to, f->t1) : f;
    case FormulaKind::Prec:
    case FormulaKind::IdxEq: {
      std::string a = f->v1 == from ? to : f->v1;
      std::string b = f->v2 == from ? to : f->v2;
      if (a == f->v1 && b == f->v2) return f;
      return f->kind == FormulaKind::Prec ? prec(a, b) : idxEq(a, b);
    }
    case FormulaKind::ExistsIdx:
    case FormulaKind::ForallIdx: {
      if (f->v1 == from) return f;  // shadowed
      FormulaPtr nb = renameFreeIdxVar(f->f1, from, to);
      if (nb == f->f1) return f;
      return f->kind == FormulaKind::ExistsIdx ? existsIdx(f->v1, nb) : forallIdx(f->v1, nb);
    }
    default: {
      FormulaPtr a = renameFreeIdxVar(f->f1, from, to);
      FormulaPtr b = renameFreeIdxVar(f->f2, from, to);
      if (a == f->f1 && b == f->f2) return f;
      auto r = std::make_shared<Formula>();
      *r = *f;
      r->f1 = a;
      r->f2 = b;
      return r;
    }
  }
}

// Renames every index binder named `name` (outermost first) to fresh names.
FormulaPtr renameIdxBinders(const FormulaPtr& f, const std::string& name,
                            std::set<std::string>& used) {
  if (!f) return f;
  if ((f->kind == FormulaKind::ExistsIdx || f->kind == FormulaKind::ForallIdx) && f->v1 == name) {
    std::string fresh = leastUnusedName(used);
    used.insert(fresh);
    FormulaPtr body = renameFreeIdxVar(f->f1, name, fresh);
    body = renameIdxBinders(body, name, used);
    return f->kind == FormulaKind::ExistsIdx ? existsIdx(fresh, body) : forallIdx(fresh, body);
  }
  FormulaPtr a = renameIdxBinders(f->f1, name, used);
  FormulaPtr b = renameIdxBinders(f->f2, name, used);
  if (a == f->f1 && b == f->f2) return f;
  auto r = std::make_shared<Formula>();
  *r = *f;
  r->f1 = a;
  r->f2 = b;
  return r;
}

FormulaPtr relativizeRec(const FormulaPtr& f, const std::string& alpha) {
  if (!f) return f;
  switch (f->kind) {
    case FormulaKind::ExistsIdx: {
      FormulaPtr body = relativizeRec(f->f1, alpha);
      // β≺α ∧ ψ in primitive form
      FormulaPtr guarded = mkNot(mkOr(mkNot(prec(f->v1, alpha)), mkNot(body)));
      return existsIdx(f->v1, guarded);
    }
    case FormulaKind::ForallIdx: {
      FormulaPtr body = relativizeRec(f->f1, alpha);
      // β≺α → ψ as (¬(β≺α)) ∨ ¬¬ψ, the image of the ∃-guard under ∀ = ¬∃¬
      FormulaPtr guarded = mkOr(mkNot(prec(f->v1, alpha)), mkNot(mkNot(body)));
      return forallIdx(f->v1, guarded);
    }
    default: {
      FormulaPtr a = relativizeRec(f->f1, alpha);
      FormulaPtr b = relativizeRec(f->f2, alpha);
      if (a == f->f1 && b == f->f2) return f;
      auto r = std::make_shared<Formula>();
      *r = *f;
      r->f1 = a;
      r->f2 = b;
      return r;
    }
  }
}

}  // namespace

FormulaPtr relativize(const FormulaPtr& f, const std::string& alpha) {
  if (!validIdentifier(alpha)) throw DomainError("relativize: invalid variable '" + alpha + "'");
  FormulaPtr g = f;
  if (hasIdxBinderNamed(f, alpha)) {
    std::set<std::string> used = allNames(f);
    used.insert(alpha);
    g = renameIdxBinders(f, alpha, used);
  }
  return relativizeRec(g, alpha);
}

// ---------- measurement ----------

namespace {

struct Counter {
  Nat budget;  // 0 = unlimited
  std::unordered_map<const void*, Nat> memo;

  void check(const Nat& n) {
    if (budget != 0 && n > budget)
      throw BudgetError("node budget exceeded (count > " + budget.str() + ")");
  }

  Nat term(const TermPtr& t) {
    if (!t) return 0;
    auto it = memo.find(t.get());
    if (it != memo.end()) return it->second;
    Nat n = 1 + term(t->a) + term(t->b);
    check(n);
    memo.emplace(t.get(), n);
    return n;
  }

  Nat formula(const FormulaPtr& f) {
    if (!f) return 0;
    auto it = memo.find(f.get());
    if (it != memo.end()) return it->second;
    Nat n = 1 + term(f->t1) + term(f->t2) + formula(f->f1) + formula(f->f2);
    check(n);
    memo.emplace(f.get(), n);
    return n;
  }
};

// Structural interning: equal subtrees get equal ids even when they are
// distinct objects, so the shared count is the true DAG size.
struct Interner {
  using TKey = std::tuple<int, std::string, std::string, std::size_t, std::size_t>;
  using FKey = std::tuple<int, std::size_t, std::size_t, std::string, std::string, std::size_t,
                          std::size_t>;
  std::map<TKey, std::size_t> tIds;
  std::map<FKey, std::size_t> fIds;
  std::unordered_map<const void*, std::size_t> memo;
  std::size_t next = 1;

  std::size_t term(const TermPtr& t) {
    if (!t) return 0;
    auto it = memo.find(t.get());
    if (it != memo.end()) return it->second;
    std::size_t a = term(t->a), b = term(t->b);
    TKey key{static_cast<int>(t->kind), t->name,
             t->kind == TermKind::Num ? t->value.str() : std::string(), a, b};
    auto [pos, fresh] = tIds.try_emplace(key, next);
    if (fresh) ++next;
    memo.emplace(t.get(), pos->second);
    return pos->second;
  }

  std::size_t formula(const FormulaPtr& f) {
    if (!f) return 0;
    auto it = memo.find(f.get());
    if (it != memo.end()) return it->second;
    std::size_t t1 = term(f->t1), t2 = term(f->t2);
    std::size_t f1 = formula(f->f1), f2 = formula(f->f2);
    FKey key{static_cast<int>(f->kind), t1, t2, f->v1, f->v2, f1, f2};
    auto [pos, fresh] = fIds.try_emplace(key, next);
    if (fresh) ++next;
    memo.emplace(f.get(), pos->second);
    return pos->second;
  }
};

}  // namespace

Nat nodeCountLiteral(const FormulaPtr& f, const Nat& budget) {
  Counter c;
  c.budget = budget;
  return c.formula(f);
}

std::size_t nodeCountShared(const FormulaPtr& f) {
  Interner in;
  in.formula(f);
  return in.next - 1;
}

}  // namespace ctw
