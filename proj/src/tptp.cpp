#include "tptp.hpp"

#include <map>
#include <set>
#include <sstream>

#include "syntax.hpp"

namespace ctw {

namespace {

// Tower policy: literal up to kTowerPlain, literal-with-warning up to
// kTowerWarn, interned constant beyond.
const Nat kTowerPlain = 10000;
const Nat kTowerWarn = 100000;

bool isCanonicalFalse(const FormulaPtr& f) {
  return f && f->kind == FormulaKind::Eq && f->t1 && f->t1->kind == TermKind::Num &&
         f->t1->value == 0 && f->t2 && f->t2->kind == TermKind::Num && f->t2->value == 1;
}

struct Writer {
  std::vector<std::string> warnings;
  std::map<Nat, std::string> interned;           // numeral value → constant
  std::set<Nat> warnedTall;                      // tall-tower values warned
  std::map<std::pair<int, std::string>, std::vector<std::string>> scopes;
  std::set<std::string> activeNames;
  // Names used anywhere in the current statement: a quantifier never reuses
  // a sibling's variable, so the guard audit can count one guard per name.
  std::set<std::string> everUsed;
  const std::string* sentence = nullptr;         // name, for diagnostics

  std::string pushVar(Sort sort, const std::string& name) {
    std::string base = (sort == Sort::Number ? "X" : "A") + name;
    std::string cand = base;
    int k = 2;
    while (activeNames.count(cand) || everUsed.count(cand))
      cand = base + "_" + std::to_string(k++);
    activeNames.insert(cand);
    everUsed.insert(cand);
    scopes[{static_cast<int>(sort), name}].push_back(cand);
    return cand;
  }

  void popVar(Sort sort, const std::string& name) {
    auto& st = scopes[{static_cast<int>(sort), name}];
    activeNames.erase(st.back());
    st.pop_back();
  }

  const std::string& lookup(Sort sort, const std::string& name) {
    auto it = scopes.find({static_cast<int>(sort), name});
    if (it == scopes.end() || it->second.empty())
      throw DomainError("toTptp: open sentence '" + *sentence + "' (free variable '" + name +
                        "')");
    return it->second.back();
  }

  void towerInto(const Nat& value, std::string& s) {
    unsigned n = value.convert_to<unsigned>();
    for (unsigned i = 0; i < n; ++i) s += "s(";
    s += "zero";
    s.append(n, ')');
  }

  const std::string& internName(const Nat& value) {
    auto it = interned.find(value);
    if (it != interned.end()) return it->second;
    std::string nm = "bignum" + std::to_string(interned.size());
    warnings.push_back("numeral of value " + value.str() +
                       " exceeds the literal tower ceiling; emitted as interned constant '" +
                       nm + "' with distinctness axioms (consider a smaller pool)");
    return interned.emplace(value, std::move(nm)).first->second;
  }

  void numInto(const Nat& value, std::string& s) {
    if (value <= kTowerPlain) {
      towerInto(value, s);
    } else if (value <= kTowerWarn) {
      if (warnedTall.insert(value).second)
        warnings.push_back("numeral tower of height " + value.str() + " in '" + *sentence +
                           "' is large; consider a smaller pool");
      towerInto(value, s);
    } else {
      s += internName(value);
    }
  }

  void termInto(const TermPtr& t, std::string& s) {
    switch (t->kind) {
      case TermKind::Var: s += lookup(Sort::Number, t->name); return;
      case TermKind::Num: numInto(t->value, s); return;
      case TermKind::Succ:
        s += "s(";
        termInto(t->a, s);
        s += ")";
        return;
      case TermKind::Add:
      case TermKind::Mul:
        s += t->kind == TermKind::Add ? "plus(" : "times(";
        termInto(t->a, s);
        s += ",";
        termInto(t->b, s);
        s += ")";
        return;
    }
  }

  void binaryAtom(const char* sym, const FormulaPtr& f, std::string& s) {
    s += sym;
    s += "(";
    termInto(f->t1, s);
    s += ",";
    termInto(f->t2, s);
    s += ")";
  }

  // Emits a self-contained unit: atoms bare, everything else parenthesized.
  void formulaInto(const FormulaPtr& f, std::string& s) {
    switch (f->kind) {
      case FormulaKind::Eq:
        s += "(";
        termInto(f->t1, s);
        s += " = ";
        termInto(f->t2, s);
        s += ")";
        return;
      case FormulaKind::Lt: binaryAtom("lt", f, s); return;
      case FormulaKind::Ack: binaryAtom("ack", f, s); return;
      case FormulaKind::Diag: binaryAtom("diag", f, s); return;
      case FormulaKind::ExpRel: binaryAtom("expr", f, s); return;
      case FormulaKind::SubT: binaryAtom("subt", f, s); return;
      case FormulaKind::Tru:
        s += "tru(";
        termInto(f->t1, s);
        s += ")";
        return;
      case FormulaKind::SentA:
        s += "senta(";
        termInto(f->t1, s);
        s += ")";
        return;
      case FormulaKind::ITru:
        s += "itru(" + lookup(Sort::Index, f->v1) + ",";
        termInto(f->t1, s);
        s += ")";
        return;
      case FormulaKind::Prec:
        s += "prec(" + lookup(Sort::Index, f->v1) + "," + lookup(Sort::Index, f->v2) + ")";
        return;
      case FormulaKind::IdxEq:
        s += "(" + lookup(Sort::Index, f->v1) + " = " + lookup(Sort::Index, f->v2) + ")";
        return;
      case FormulaKind::Not:
        s += "~";
        formulaInto(f->f1, s);
        return;
      case FormulaKind::Or:
      case FormulaKind::And:
      case FormulaKind::Imp:
      case FormulaKind::Iff: {
        const char* op = f->kind == FormulaKind::Or    ? " | "
                         : f->kind == FormulaKind::And ? " & "
                         : f->kind == FormulaKind::Imp ? " => "
                                                       : " <=> ";
        s += "(";
        formulaInto(f->f1, s);
        s += op;
        formulaInto(f->f2, s);
        s += ")";
        return;
      }
      case FormulaKind::ExistsNum:
      case FormulaKind::ForallNum:
      case FormulaKind::ExistsIdx:
      case FormulaKind::ForallIdx: {
        bool exists =
            f->kind == FormulaKind::ExistsNum || f->kind == FormulaKind::ExistsIdx;
        Sort sort = (f->kind == FormulaKind::ExistsNum || f->kind == FormulaKind::ForallNum)
                        ? Sort::Number
                        : Sort::Index;
        std::string v = pushVar(sort, f->v1);
        s += exists ? "(? [" : "(! [";
        s += v;
        s += "] : (";
        s += sort == Sort::Number ? "num(" : "idx(";
        s += v;
        s += exists ? ") & " : ") => ";
        formulaInto(f->f1, s);
        s += "))";
        popVar(sort, f->v1);
        return;
      }
      case FormulaKind::BoundedExists:
      case FormulaKind::BoundedForall: {
        bool exists = f->kind == FormulaKind::BoundedExists;
        std::string boundText;  // bound term rendered outside the binder
        termInto(f->t1, boundText);
        std::string v = pushVar(Sort::Number, f->v1);
        s += exists ? "(? [" : "(! [";
        s += v;
        s += "] : (num(";
        s += v;
        s += exists ? ") & (~lt(" : ") => (~lt(";
        s += boundText;
        s += ",";
        s += v;
        s += exists ? ") & " : ") => ";
        formulaInto(f->f1, s);
        s += ")))";
        popVar(Sort::Number, f->v1);
        return;
      }
    }
    throw DomainError("toTptp: unknown formula kind");
  }
};

}  // namespace

TptpResult toTptp(const AxiomBundle& bundle) {
  validateBundle(bundle);
  Writer w;

  std::set<std::string> usedNames = {"guard_zero", "guard_succ", "guard_plus", "guard_times"};
  std::ostringstream body;
  for (const NamedSentence& s : bundle.sentences) {
    if (!s.body || !isClosed(s.body))
      throw DomainError("toTptp: open sentence '" + s.name + "'");
    std::string name = s.name;
    int k = 2;
    while (!usedNames.insert(name).second) name = s.name + "_" + std::to_string(k++);
    const char* role = s.role == Role::Axiom        ? "axiom"
                       : s.role == Role::Conjecture ? "conjecture"
                                                    : "lemma";
    std::string text;
    if (s.role == Role::Conjecture && isCanonicalFalse(s.body)) {
      text = "$false";
    } else {
      w.sentence = &s.name;
      w.everUsed.clear();
      w.formulaInto(s.body, text);
    }
    body << "fof(" << name << ", " << role << ", " << text << ").\n";
  }

  std::ostringstream out;
  out << "% bundle: " << bundle.name << "\n";
  out << "% provenance: " << bundle.provenance << "\n";
  for (const std::string& warning : w.warnings) out << "% warning: " << warning << "\n";
  out << "% sort guards: num/1 (number sort), idx/1 (index sort); functions closed under num\n";
  out << "fof(guard_zero, axiom, num(zero)).\n";
  out << "fof(guard_succ, axiom, (! [X] : (num(X) => num(s(X))))).\n";
  out << "fof(guard_plus, axiom, (! [X] : (num(X) => (! [Y] : (num(Y) => "
         "num(plus(X,Y))))))).\n";
  out << "fof(guard_times, axiom, (! [X] : (num(X) => (! [Y] : (num(Y) => "
         "num(times(X,Y))))))).\n";
  // Interned big numerals are mutually distinct opaque constants.
  for (auto i = w.interned.begin(); i != w.interned.end(); ++i) {
    out << "fof(guard_" << i->second << ", axiom, num(" << i->second << ")).\n";
    for (auto j = std::next(i); j != w.interned.end(); ++j)
      out << "fof(distinct_" << i->second << "_" << j->second << ", axiom, (" << i->second
          << " != " << j->second << ")).\n";
  }
  out << body.str();

  TptpResult r;
  r.text = out.str();
  r.warnings = std::move(w.warnings);
  return r;
}

// ---------- FOF reader ----------

namespace {

enum class Tok {
  LPar, RPar, LBrack, RBrack, Comma, Dot, Colon, Tilde, Amp, Pipe, Bang, Quest,
  Arrow, Iff, Eq, Neq, Lower, Upper, DFalse, DTrue, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

struct Lexer {
  const std::string& src;
  std::size_t i = 0;
  std::vector<std::string>* comments;

  explicit Lexer(const std::string& s, std::vector<std::string>* c) : src(s), comments(c) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (i < src.size()) {
      char c = src[i];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++i;
        continue;
      }
      if (c == '%') {
        std::size_t j = src.find('\n', i);
        if (j == std::string::npos) j = src.size();
        comments->push_back(src.substr(i, j - i));
        i = j;
        continue;
      }
      std::size_t pos = i;
      switch (c) {
        case '(': out.push_back({Tok::LPar, "(", pos}); ++i; continue;
        case ')': out.push_back({Tok::RPar, ")", pos}); ++i; continue;
        case '[': out.push_back({Tok::LBrack, "[", pos}); ++i; continue;
        case ']': out.push_back({Tok::RBrack, "]", pos}); ++i; continue;
        case ',': out.push_back({Tok::Comma, ",", pos}); ++i; continue;
        case '.': out.push_back({Tok::Dot, ".", pos}); ++i; continue;
        case ':': out.push_back({Tok::Colon, ":", pos}); ++i; continue;
        case '~': out.push_back({Tok::Tilde, "~", pos}); ++i; continue;
        case '&': out.push_back({Tok::Amp, "&", pos}); ++i; continue;
        case '|': out.push_back({Tok::Pipe, "|", pos}); ++i; continue;
        case '?': out.push_back({Tok::Quest, "?", pos}); ++i; continue;
        default: break;
      }
      if (c == '!') {
        if (i + 1 < src.size() && src[i + 1] == '=') {
          out.push_back({Tok::Neq, "!=", pos});
          i += 2;
        } else {
          out.push_back({Tok::Bang, "!", pos});
          ++i;
        }
        continue;
      }
      if (c == '=') {
        if (i + 1 < src.size() && src[i + 1] == '>') {
          out.push_back({Tok::Arrow, "=>", pos});
          i += 2;
        } else {
          out.push_back({Tok::Eq, "=", pos});
          ++i;
        }
        continue;
      }
      if (c == '<') {
        if (src.compare(i, 3, "<=>") == 0) {
          out.push_back({Tok::Iff, "<=>", pos});
          i += 3;
          continue;
        }
        throw ParseError("unexpected '<'", pos);
      }
      if (c == '$') {
        if (src.compare(i, 6, "$false") == 0) {
          out.push_back({Tok::DFalse, "$false", pos});
          i += 6;
          continue;
        }
        if (src.compare(i, 5, "$true") == 0) {
          out.push_back({Tok::DTrue, "$true", pos});
          i += 5;
          continue;
        }
        throw ParseError("unknown $-word", pos);
      }
      auto wordChar = [](char ch) {
        return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
               (ch >= '0' && ch <= '9') || ch == '_';
      };
      if (c >= 'a' && c <= 'z') {
        std::size_t j = i;
        while (j < src.size() && wordChar(src[j])) ++j;
        out.push_back({Tok::Lower, src.substr(i, j - i), pos});
        i = j;
        continue;
      }
      if (c >= 'A' && c <= 'Z') {
        std::size_t j = i;
        while (j < src.size() && wordChar(src[j])) ++j;
        out.push_back({Tok::Upper, src.substr(i, j - i), pos});
        i = j;
        continue;
      }
      throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
    out.push_back({Tok::End, "", src.size()});
    return out;
  }
};

FofPtr mk(FofFormula f) { return std::make_shared<FofFormula>(std::move(f)); }

struct Parser {
  std::vector<Token> toks;
  std::size_t i = 0;

  const Token& cur() const { return toks[i]; }
  const Token& peek(std::size_t k) const {
    return toks[i + k < toks.size() ? i + k : toks.size() - 1];
  }
  bool accept(Tok k) {
    if (cur().kind == k) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) throw ParseError(std::string("expected ") + what, cur().pos);
  }
  std::string expectLower(const char* what) {
    if (cur().kind != Tok::Lower)
      throw ParseError(std::string("expected ") + what, cur().pos);
    return toks[i++].text;
  }

  FofTerm parseTerm() {
    const Token& t = cur();
    if (t.kind == Tok::Upper) {
      ++i;
      FofTerm v;
      v.isVar = true;
      v.name = t.text;
      return v;
    }
    if (t.kind != Tok::Lower) throw ParseError("expected a term", t.pos);
    // successor chains are folded iteratively so deep towers cannot
    // exhaust the parse stack
    unsigned wraps = 0;
    while (cur().kind == Tok::Lower && cur().text == "s" && peek(1).kind == Tok::LPar) {
      i += 2;
      ++wraps;
    }
    if (wraps > 0) {
      FofTerm inner = parseTerm();
      for (unsigned k = 0; k < wraps; ++k) expect(Tok::RPar, "')' closing s(...)");
      inner.sWraps += wraps;
      return inner;
    }
    ++i;
    FofTerm f;
    f.name = t.text;
    if (accept(Tok::LPar)) {
      do f.args.push_back(parseTerm());
      while (accept(Tok::Comma));
      expect(Tok::RPar, "')'");
    }
    return f;
  }

  static bool isBinop(Tok k) {
    return k == Tok::Amp || k == Tok::Pipe || k == Tok::Arrow || k == Tok::Iff;
  }

  FofPtr parseFormula() {
    FofPtr lhs = parseUnit();
    Tok k = cur().kind;
    if (k == Tok::Amp || k == Tok::Pipe) {
      while (cur().kind == k) {
        ++i;
        FofPtr rhs = parseUnit();
        FofFormula f;
        f.kind = k == Tok::Amp ? FofKind::And : FofKind::Or;
        f.f1 = lhs;
        f.f2 = rhs;
        lhs = mk(std::move(f));
      }
      if (isBinop(cur().kind))
        throw ParseError("mixed binary operators need parentheses", cur().pos);
      return lhs;
    }
    if (k == Tok::Arrow || k == Tok::Iff) {
      ++i;
      FofPtr rhs = parseUnit();
      if (isBinop(cur().kind))
        throw ParseError("chained non-associative operator", cur().pos);
      FofFormula f;
      f.kind = k == Tok::Arrow ? FofKind::Imp : FofKind::Iff;
      f.f1 = lhs;
      f.f2 = rhs;
      return mk(std::move(f));
    }
    return lhs;
  }

  FofPtr parseUnit() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::Tilde: {
        ++i;
        FofFormula f;
        f.kind = FofKind::Not;
        f.f1 = parseUnit();
        return mk(std::move(f));
      }
      case Tok::Bang:
      case Tok::Quest: {
        bool forall = t.kind == Tok::Bang;
        ++i;
        expect(Tok::LBrack, "'['");
        std::vector<std::string> vars;
        do {
          if (cur().kind != Tok::Upper) throw ParseError("expected a variable", cur().pos);
          vars.push_back(toks[i++].text);
        } while (accept(Tok::Comma));
        expect(Tok::RBrack, "']'");
        expect(Tok::Colon, "':'");
        FofPtr body = parseUnit();
        for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
          FofFormula f;
          f.kind = forall ? FofKind::Forall : FofKind::Exists;
          f.name = *it;
          f.f1 = body;
          body = mk(std::move(f));
        }
        return body;
      }
      case Tok::LPar: {
        ++i;
        FofPtr f = parseFormula();
        expect(Tok::RPar, "')'");
        return f;
      }
      case Tok::DFalse: {
        ++i;
        FofFormula f;
        f.kind = FofKind::False;
        return mk(std::move(f));
      }
      case Tok::DTrue: {
        ++i;
        FofFormula f;
        f.kind = FofKind::True;
        return mk(std::move(f));
      }
      default: break;
    }
    FofTerm a = parseTerm();
    if (cur().kind == Tok::Eq || cur().kind == Tok::Neq) {
      bool neq = cur().kind == Tok::Neq;
      ++i;
      FofTerm b = parseTerm();
      FofFormula f;
      f.kind = neq ? FofKind::NotEqual : FofKind::Equal;
      f.a = std::move(a);
      f.b = std::move(b);
      return mk(std::move(f));
    }
    if (a.isVar || a.sWraps > 0) throw ParseError("expected a predicate", t.pos);
    FofFormula f;
    f.kind = FofKind::Pred;
    f.name = std::move(a.name);
    f.args = std::move(a.args);
    return mk(std::move(f));
  }
};

}  // namespace

FofFile parseFof(const std::string& text) {
  FofFile file;
  Lexer lex(text, &file.comments);
  Parser p{lex.run()};
  while (p.cur().kind != Tok::End) {
    std::size_t pos = p.cur().pos;
    if (p.expectLower("'fof'") != "fof") throw ParseError("expected 'fof'", pos);
    p.expect(Tok::LPar, "'('");
    FofStatement st;
    st.name = p.expectLower("statement name");
    p.expect(Tok::Comma, "','");
    st.role = p.expectLower("role");
    p.expect(Tok::Comma, "','");
    st.formula = p.parseFormula();
    p.expect(Tok::RPar, "')'");
    p.expect(Tok::Dot, "'.'");
    file.statements.push_back(std::move(st));
  }
  return file;
}

// ---------- guard audit ----------

namespace {

bool isGuardAtom(const FofFormula* f, const std::string& v) {
  return f && f->kind == FofKind::Pred && (f->name == "num" || f->name == "idx") &&
         f->args.size() == 1 && f->args[0].isVar && f->args[0].sWraps == 0 &&
         f->args[0].name == v;
}

struct AuditCtx {
  const std::string* stmt = nullptr;
  std::set<std::string> bound, everBound;
  std::map<std::string, int> guardCount;
  std::size_t guarded = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError("guard audit: " + msg + " in statement '" + *stmt + "'");
  }

  void term(const FofTerm& t) {
    if (t.isVar) {
      if (!bound.count(t.name)) fail("free variable '" + t.name + "'");
      return;
    }
    for (const FofTerm& a : t.args) term(a);
  }

  void formula(const FofFormula* f) {
    switch (f->kind) {
      case FofKind::True:
      case FofKind::False: return;
      case FofKind::Pred:
        if ((f->name == "num" || f->name == "idx") && f->args.size() == 1 &&
            f->args[0].isVar && f->args[0].sWraps == 0)
          ++guardCount[f->args[0].name];
        for (const FofTerm& a : f->args) term(a);
        return;
      case FofKind::Equal:
      case FofKind::NotEqual:
        term(f->a);
        term(f->b);
        return;
      case FofKind::Not: formula(f->f1.get()); return;
      case FofKind::And:
      case FofKind::Or:
      case FofKind::Imp:
      case FofKind::Iff:
        formula(f->f1.get());
        formula(f->f2.get());
        return;
      case FofKind::Forall:
      case FofKind::Exists: {
        const std::string& v = f->name;
        if (everBound.count(v)) fail("variable '" + v + "' bound twice");
        FofKind need = f->kind == FofKind::Forall ? FofKind::Imp : FofKind::And;
        const FofFormula* body = f->f1.get();
        if (!(body && body->kind == need && isGuardAtom(body->f1.get(), v)))
          fail("quantifier over '" + v + "' lacks an immediate sort guard");
        bound.insert(v);
        everBound.insert(v);
        ++guarded;
        formula(body);
        bound.erase(v);
        return;
      }
    }
    fail("unknown formula node");
  }
};

}  // namespace

std::size_t auditGuards(const FofFile& file) {
  std::size_t total = 0;
  for (const FofStatement& st : file.statements) {
    AuditCtx ctx;
    ctx.stmt = &st.name;
    ctx.formula(st.formula.get());
    for (const std::string& v : ctx.everBound) {
      int n = ctx.guardCount[v];
      if (n != 1)
        throw DomainError("guard audit: variable '" + v + "' has " + std::to_string(n) +
                          " sort guards in statement '" + st.name + "'");
    }
    total += ctx.guarded;
  }
  return total;
}

}  // namespace ctw
