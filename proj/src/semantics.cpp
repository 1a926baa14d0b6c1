#include "semantics.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "axioms.hpp"
#include "diagonal.hpp"
#include "goedel.hpp"
#include "syntax.hpp"

namespace ctw {

std::string triName(TriBool v) {
  switch (v) {
    case TriBool::False: return "False";
    case TriBool::True: return "True";
    case TriBool::Unknown: return "Unknown";
  }
  return "Unknown";
}

TriBool triNot(TriBool a) {
  if (a == TriBool::Unknown) return TriBool::Unknown;
  return a == TriBool::True ? TriBool::False : TriBool::True;
}

TriBool triOr(TriBool a, TriBool b) {
  if (a == TriBool::True || b == TriBool::True) return TriBool::True;
  if (a == TriBool::False && b == TriBool::False) return TriBool::False;
  return TriBool::Unknown;
}

TriBool triAnd(TriBool a, TriBool b) {
  if (a == TriBool::False || b == TriBool::False) return TriBool::False;
  if (a == TriBool::True && b == TriBool::True) return TriBool::True;
  return TriBool::Unknown;
}

Nat evalTerm(const TermPtr& t, const Env& env) {
  if (!t) throw DomainError("evalTerm: null term");
  switch (t->kind) {
    case TermKind::Var: {
      auto it = env.find(t->name);
      if (it == env.end()) throw DomainError("evalTerm: unbound variable '" + t->name + "'");
      return it->second;
    }
    case TermKind::Num: return t->value;
    case TermKind::Succ: return evalTerm(t->a, env) + 1;
    case TermKind::Add: return evalTerm(t->a, env) + evalTerm(t->b, env);
    case TermKind::Mul: return evalTerm(t->a, env) * evalTerm(t->b, env);
  }
  throw DomainError("evalTerm: unknown term kind");
}

namespace {

// Exact-range ceiling for bounded/bounding quantifier loops.
constexpr unsigned kExactRangeCap = 1u << 16;
// Largest exponent for which a pinned power-of-two witness is materialized.
constexpr unsigned kMaxExpBits = 4096;
// Ceiling on the Δ0 bounded-loop width.
constexpr unsigned kDelta0RangeCap = 1u << 20;

bool expRelHolds(const Nat& x, const Nat& y) {
  // y = 2^x: y is a power of two whose single bit sits at position x
  if (y == 0) return false;
  if ((y & (y - 1)) != 0) return false;
  return Nat(boost::multiprecision::msb(y)) == x;
}

bool diagHolds(const Nat& a, const Nat& b) {
  try {
    return diagonalCode(a) == b;
  } catch (const Error&) {
    return false;
  }
}

// Scoped environment binding with restore-on-destroy.
struct Binding {
  Env& env;
  std::string name;
  bool had;
  Nat saved;

  Binding(Env& e, const std::string& v, const Nat& value) : env(e), name(v) {
    auto it = env.find(v);
    had = it != env.end();
    if (had) saved = it->second;
    env[v] = value;
  }
  void rebind(const Nat& value) { env[name] = value; }
  ~Binding() {
    if (had)
      env[name] = saved;
    else
      env.erase(name);
  }
};

// ---------- exact two-valued fragment ----------

bool delta0(const FormulaPtr& f, Env& env) {
  switch (f->kind) {
    case FormulaKind::Eq: return evalTerm(f->t1, env) == evalTerm(f->t2, env);
    case FormulaKind::Lt: return evalTerm(f->t1, env) < evalTerm(f->t2, env);
    case FormulaKind::Ack: return ackBit(evalTerm(f->t1, env), evalTerm(f->t2, env));
    case FormulaKind::Diag: return diagHolds(evalTerm(f->t1, env), evalTerm(f->t2, env));
    case FormulaKind::ExpRel: return expRelHolds(evalTerm(f->t1, env), evalTerm(f->t2, env));
    case FormulaKind::Not: return !delta0(f->f1, env);
    case FormulaKind::Or: return delta0(f->f1, env) || delta0(f->f2, env);
    case FormulaKind::And: return delta0(f->f1, env) && delta0(f->f2, env);
    case FormulaKind::Imp: return !delta0(f->f1, env) || delta0(f->f2, env);
    case FormulaKind::Iff: return delta0(f->f1, env) == delta0(f->f2, env);
    case FormulaKind::BoundedExists:
    case FormulaKind::BoundedForall: {
      Nat bound = evalTerm(f->t1, env);
      if (bound >= kDelta0RangeCap)
        throw BudgetError("evalDelta0: bounded range exceeds the loop ceiling");
      bool isExists = f->kind == FormulaKind::BoundedExists;
      Binding bind(env, f->v1, 0);
      for (Nat x = 0; x <= bound; ++x) {
        bind.rebind(x);
        if (delta0(f->f1, env) == isExists) return isExists;
      }
      return !isExists;
    }
    case FormulaKind::ExistsNum:
    case FormulaKind::ForallNum:
    case FormulaKind::ExistsIdx:
    case FormulaKind::ForallIdx:
      throw DomainError("evalDelta0: unbounded quantifier");
    default:
      throw SortError("evalDelta0: atom outside the bounded arithmetic fragment");
  }
}

// ---------- three-valued evaluation ----------

struct Lit {
  const Formula* f;
  bool neg;
};

// Decomposes f (or its negation) into conjuncts it entails: And splits
// positively; under negation Or, Imp, and double negation split.
void conjunctsOf(const Formula* f, bool neg, std::vector<Lit>& out) {
  if (!neg) {
    if (f->kind == FormulaKind::And) {
      conjunctsOf(f->f1.get(), false, out);
      conjunctsOf(f->f2.get(), false, out);
      return;
    }
    if (f->kind == FormulaKind::Not) {
      conjunctsOf(f->f1.get(), true, out);
      return;
    }
  } else {
    if (f->kind == FormulaKind::Or) {
      conjunctsOf(f->f1.get(), true, out);
      conjunctsOf(f->f2.get(), true, out);
      return;
    }
    if (f->kind == FormulaKind::Imp) {
      conjunctsOf(f->f1.get(), false, out);
      conjunctsOf(f->f2.get(), true, out);
      return;
    }
    if (f->kind == FormulaKind::Not) {
      conjunctsOf(f->f1.get(), false, out);
      return;
    }
  }
  out.push_back({f, neg});
}

bool isVarNamed(const TermPtr& t, const std::string& v) {
  return t && t->kind == TermKind::Var && t->name == v;
}

bool termUsableAsPin(const TermPtr& t, const Env& env, const std::string& avoid) {
  if (!t) return true;
  if (t->kind == TermKind::Var) return t->name != avoid && env.count(t->name) != 0;
  return termUsableAsPin(t->a, env, avoid) && termUsableAsPin(t->b, env, avoid);
}

struct Evaluator {
  TriBool eval(const FormulaPtr& f, Env& env, const Nat& fuel);
  TriBool evalExists(const std::string& v, const FormulaPtr& body, Env& env, const Nat& fuel,
                     const Nat* inclusiveBound);
};

TriBool Evaluator::evalExists(const std::string& v, const FormulaPtr& body, Env& env,
                              const Nat& fuel, const Nat* inclusiveBound) {
  std::vector<Lit> lits;
  conjunctsOf(body.get(), false, lits);

  // A positive functional conjunct pins the witness: outside the pinned
  // value the conjunct is false, so the whole body is false.
  for (const Lit& lit : lits) {
    if (lit.neg) continue;
    const Formula* g = lit.f;
    switch (g->kind) {
      case FormulaKind::Eq: {
        const TermPtr* other = nullptr;
        if (isVarNamed(g->t1, v))
          other = &g->t2;
        else if (isVarNamed(g->t2, v))
          other = &g->t1;
        if (other && termUsableAsPin(*other, env, v)) {
          Nat w = evalTerm(*other, env);
          if (inclusiveBound && w > *inclusiveBound) return TriBool::False;
          Binding bind(env, v, w);
          return eval(body, env, fuel);
        }
        break;
      }
      case FormulaKind::Diag: {
        if (isVarNamed(g->t2, v) && termUsableAsPin(g->t1, env, v)) {
          Nat a = evalTerm(g->t1, env);
          Nat w;
          try {
            w = diagonalCode(a);
          } catch (const Error&) {
            return TriBool::False;  // conjunct unsatisfiable at every value
          }
          if (inclusiveBound && w > *inclusiveBound) return TriBool::False;
          Binding bind(env, v, w);
          return eval(body, env, fuel);
        }
        break;
      }
      case FormulaKind::ExpRel: {
        if (isVarNamed(g->t2, v) && termUsableAsPin(g->t1, env, v)) {
          Nat e = evalTerm(g->t1, env);
          if (e <= kMaxExpBits) {
            Nat w = Nat(1) << e.convert_to<unsigned>();
            if (inclusiveBound && w > *inclusiveBound) return TriBool::False;
            Binding bind(env, v, w);
            return eval(body, env, fuel);
          }
        } else if (isVarNamed(g->t1, v) && termUsableAsPin(g->t2, env, v)) {
          Nat y = evalTerm(g->t2, env);
          if (y == 0 || (y & (y - 1)) != 0) return TriBool::False;
          Nat w = Nat(boost::multiprecision::msb(y));
          if (inclusiveBound && w > *inclusiveBound) return TriBool::False;
          Binding bind(env, v, w);
          return eval(body, env, fuel);
        }
        break;
      }
      default: break;
    }
  }

  // A bounding conjunct (v < t, or ¬(t < v) i.e. v ≤ t) makes the range
  // finite; small ranges evaluate exactly.
  bool haveBound = inclusiveBound != nullptr;
  Nat bound = haveBound ? *inclusiveBound + 1 : Nat(0);  // exclusive
  for (const Lit& lit : lits) {
    if (lit.f->kind != FormulaKind::Lt) continue;
    Nat cand;
    if (!lit.neg && isVarNamed(lit.f->t1, v) && termUsableAsPin(lit.f->t2, env, v))
      cand = evalTerm(lit.f->t2, env);
    else if (lit.neg && isVarNamed(lit.f->t2, v) && termUsableAsPin(lit.f->t1, env, v))
      cand = evalTerm(lit.f->t1, env) + 1;
    else
      continue;
    if (!haveBound || cand < bound) bound = cand;
    haveBound = true;
  }

  if (haveBound && bound <= kExactRangeCap) {
    TriBool acc = TriBool::False;
    Binding bind(env, v, 0);
    for (Nat x = 0; x < bound; ++x) {
      bind.rebind(x);
      TriBool r = eval(body, env, fuel);
      if (r == TriBool::True) return TriBool::True;
      if (r == TriBool::Unknown) acc = TriBool::Unknown;
    }
    return acc;
  }

  // Fuel-bounded witness search; finding none proves nothing.
  Nat range = fuel;
  if (haveBound && bound < range) range = bound;
  if (Nat(kExactRangeCap) < range) range = kExactRangeCap;
  {
    Binding bind(env, v, 0);
    for (Nat x = 0; x < range; ++x) {
      bind.rebind(x);
      if (eval(body, env, fuel) == TriBool::True) return TriBool::True;
    }
  }
  return TriBool::Unknown;
}

TriBool Evaluator::eval(const FormulaPtr& f, Env& env, const Nat& fuel) {
  switch (f->kind) {
    case FormulaKind::Eq:
      return evalTerm(f->t1, env) == evalTerm(f->t2, env) ? TriBool::True : TriBool::False;
    case FormulaKind::Lt:
      return evalTerm(f->t1, env) < evalTerm(f->t2, env) ? TriBool::True : TriBool::False;
    case FormulaKind::Ack:
      return ackBit(evalTerm(f->t1, env), evalTerm(f->t2, env)) ? TriBool::True
                                                                : TriBool::False;
    case FormulaKind::Diag:
      return diagHolds(evalTerm(f->t1, env), evalTerm(f->t2, env)) ? TriBool::True
                                                                   : TriBool::False;
    case FormulaKind::ExpRel:
      return expRelHolds(evalTerm(f->t1, env), evalTerm(f->t2, env)) ? TriBool::True
                                                                     : TriBool::False;
    case FormulaKind::SentA:
      return isSentenceA(evalTerm(f->t1, env)) ? TriBool::True : TriBool::False;
    case FormulaKind::Tru: {
      if (fuel == 0) return TriBool::Unknown;
      Nat g = evalTerm(f->t1, env);
      FormulaPtr d;
      try {
        d = decodeFormula(g);
      } catch (const NotACodeError&) {
        return TriBool::False;
      }
      if (hasIndexSyntax(d) || !isClosed(d)) return TriBool::False;
      Env fresh;
      return eval(d, fresh, fuel - 1);
    }
    case FormulaKind::SubT: {
      if (fuel == 0) return TriBool::Unknown;
      Nat g = evalTerm(f->t1, env);
      Nat x = evalTerm(f->t2, env);
      FormulaPtr d;
      try {
        d = decodeFormula(g);
      } catch (const NotACodeError&) {
        return TriBool::False;
      }
      if (hasIndexSyntax(d)) return TriBool::False;
      VarSet fv = freeVariables(d);
      if (fv.size() != 1 || fv.begin()->second != Sort::Number) return TriBool::False;
      Env fresh;
      fresh.emplace(fv.begin()->first, x);
      return eval(d, fresh, fuel - 1);
    }
    case FormulaKind::ITru:
    case FormulaKind::Prec:
    case FormulaKind::IdxEq:
    case FormulaKind::ExistsIdx:
    case FormulaKind::ForallIdx:
      throw SortError("evalFormula: index syntax present; translate first");
    case FormulaKind::Not: return triNot(eval(f->f1, env, fuel));
    case FormulaKind::Or: {
      TriBool a = eval(f->f1, env, fuel);
      if (a == TriBool::True) return TriBool::True;
      return triOr(a, eval(f->f2, env, fuel));
    }
    case FormulaKind::And: {
      TriBool a = eval(f->f1, env, fuel);
      if (a == TriBool::False) return TriBool::False;
      return triAnd(a, eval(f->f2, env, fuel));
    }
    case FormulaKind::Imp: {
      TriBool a = eval(f->f1, env, fuel);
      if (a == TriBool::False) return TriBool::True;
      return triOr(triNot(a), eval(f->f2, env, fuel));
    }
    case FormulaKind::Iff: {
      TriBool a = eval(f->f1, env, fuel);
      TriBool b = eval(f->f2, env, fuel);
      if (a == TriBool::Unknown || b == TriBool::Unknown) return TriBool::Unknown;
      return a == b ? TriBool::True : TriBool::False;
    }
    case FormulaKind::ExistsNum: return evalExists(f->v1, f->f1, env, fuel, nullptr);
    case FormulaKind::ForallNum:
      return triNot(evalExists(f->v1, mkNot(f->f1), env, fuel, nullptr));
    case FormulaKind::BoundedExists: {
      Nat bound = evalTerm(f->t1, env);
      return evalExists(f->v1, f->f1, env, fuel, &bound);
    }
    case FormulaKind::BoundedForall: {
      Nat bound = evalTerm(f->t1, env);
      return triNot(evalExists(f->v1, mkNot(f->f1), env, fuel, &bound));
    }
  }
  throw DomainError("evalFormula: unknown formula kind");
}

}  // namespace

bool evalDelta0(const FormulaPtr& f, const Env& env) {
  if (!f) throw DomainError("evalDelta0: null formula");
  Env scratch = env;
  return delta0(f, scratch);
}

TriBool evalFormula(const FormulaPtr& f, const Env& env, const Nat& fuel) {
  if (!f) throw DomainError("evalFormula: null formula");
  Env scratch = env;
  Evaluator ev;
  return ev.eval(f, scratch, fuel);
}

TriBool evalSentence(const FormulaPtr& f, const Nat& fuel) {
  if (!f) throw DomainError("evalSentence: null formula");
  if (hasIndexSyntax(f)) throw SortError("evalSentence: index syntax present; translate first");
  if (!isClosed(f)) throw DomainError("evalSentence: sentence has free variables");
  Env env;
  Evaluator ev;
  return ev.eval(f, env, fuel);
}

// ---------- seed corpus ----------

namespace {

const char* const kSeedCorpus[16] = {
    "(eq z z)",
    "(eq z (s z))",
    "(lt z (s z))",
    "(lt (s z) z)",
    "(eq (+ (s z) (s z)) (s (s z)))",
    "(eq (* (s (s z)) (s (s z))) (s (s (s (s (s z))))))",
    "(all-le x (s (s (s z))) (eq (+ (var x) z) (var x)))",
    "(all-le x (s (s (s (s z)))) (lt (var x) (s (s (s z)))))",
    "(ex-le x (s (s (s (s z)))) (eq (+ (var x) (var x)) (s (s (s (s z))))))",
    "(ex-le x (s (s z)) (eq (+ (var x) (var x)) (s (s (s (s (s z)))))))",
    "(exp (s (s (s z))) (s (s (s (s (s (s (s (s z)))))))))",
    "(exp (s (s z)) (s (s (s (s (s z))))))",
    "(ack z (s (s (s (s (s z))))))",
    "(ack (s z) (s (s (s (s (s z))))))",
    "(all-le x (s (s (s (s (s z))))) (not (eq (s (var x)) z)))",
    "(ex-le x (s (s (s z))) (eq (var x) (s (var x))))",
};

}  // namespace

std::vector<FormulaPtr> seedCorpus() {
  std::vector<FormulaPtr> out;
  out.reserve(16);
  for (const char* text : kSeedCorpus) out.push_back(parseFormula(text));
  return out;
}

std::vector<bool> seedCorpusTruths() {
  std::vector<bool> out;
  for (int i = 0; i < 16; ++i) out.push_back(i % 2 == 0);
  return out;
}

std::vector<FormulaPtr> loadCorpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("loadCorpus: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parseFormulas(buf.str());
}

// ---------- report plumbing ----------

namespace {

constexpr std::size_t kInstanceCap = 64;
constexpr std::size_t kOkSampleCap = 4;

struct Agg {
  CheckReport r;
  std::size_t okStored = 0;

  explicit Agg(const std::string& name, const Nat& fuel) {
    r.check = name;
    r.fuel = fuel;
  }

  // Returns true when the instance detail should be materialized.
  bool wants(bool mismatch, bool unknown) const {
    if (mismatch || unknown) return r.instances.size() < kInstanceCap;
    return okStored < kOkSampleCap;
  }

  void count(bool mismatch, bool unknown) {
    ++r.total;
    if (mismatch) {
      ++r.mismatches;
      r.pass = false;
    }
    if (unknown) ++r.unknowns;
  }

  void store(const std::string& input, const std::string& expected, const std::string& got,
             bool mismatch, bool unknown) {
    if (!mismatch && !unknown) ++okStored;
    r.instances.push_back(
        {input, expected, got, mismatch ? "mismatch" : unknown ? "unknown" : "ok"});
  }

  void add(const std::string& input, const std::string& expected, const std::string& got,
           bool mismatch, bool unknown) {
    bool w = wants(mismatch, unknown);
    count(mismatch, unknown);
    if (w) store(input, expected, got, mismatch, unknown);
  }

  void merge(const CheckReport& sub, const std::string& prefix) {
    r.total += sub.total;
    r.mismatches += sub.mismatches;
    r.unknowns += sub.unknowns;
    if (!sub.pass) r.pass = false;
    for (const auto& inst : sub.instances) {
      bool problem = inst.verdict != "ok";
      if (problem ? r.instances.size() < kInstanceCap : okStored < kOkSampleCap) {
        if (!problem) ++okStored;
        r.instances.push_back({prefix + inst.input, inst.expected, inst.got, inst.verdict});
      }
    }
  }
};

std::string maskName(unsigned long long mask, std::size_t s) {
  std::string out;
  for (std::size_t i = 0; i < s; ++i) out.push_back((mask >> i) & 1 ? '-' : '+');
  return out;
}

}  // namespace

// ---------- disjunctive / conjunctive correctness ----------

namespace {

CheckReport checkDcCc(const std::vector<FormulaPtr>& phis, const Nat& fuel, bool conjunctive) {
  const char* name = conjunctive ? "cc" : "dc";
  if (phis.empty()) throw DomainError(std::string(name) + ": empty pool");
  if (phis.size() > 24) throw DomainError(std::string(name) + ": sign-variant space too large");
  std::size_t s = phis.size();

  Agg agg(name, fuel);
  Coder coder;

  // signed pool members, their truth-atom evaluations, and oracle values
  std::vector<std::array<FormulaPtr, 2>> signedPhi(s);
  std::vector<std::array<TriBool, 2>> leaf(s), oracle(s);
  for (std::size_t i = 0; i < s; ++i) {
    signedPhi[i] = {phis[i], mkNot(phis[i])};
    for (int b = 0; b < 2; ++b) {
      leaf[i][b] = evalSentence(tru(numeral(coder.formula(signedPhi[i][b]))), fuel);
      oracle[i][b] = evalSentence(signedPhi[i][b], fuel);
    }
  }

  std::vector<FormulaPtr> pool(s);
  for (unsigned long long mask = 0; mask < (1ull << s); ++mask) {
    for (std::size_t i = 0; i < s; ++i) pool[i] = signedPhi[i][(mask >> i) & 1];

    FormulaPtr combined = conjunctive ? bigAnd(pool) : bigOr(pool);
    TriBool lhs = evalSentence(tru(numeral(coder.formula(combined))), fuel);

    TriBool rhs = leaf[0][mask & 1];
    TriBool expect = oracle[0][mask & 1];
    for (std::size_t i = 1; i < s; ++i) {
      TriBool l = leaf[i][(mask >> i) & 1], o = oracle[i][(mask >> i) & 1];
      rhs = conjunctive ? triAnd(rhs, l) : triOr(rhs, l);
      expect = conjunctive ? triAnd(expect, o) : triOr(expect, o);
    }

    bool unknown =
        lhs == TriBool::Unknown || rhs == TriBool::Unknown || expect == TriBool::Unknown;
    bool mismatch = !unknown && (lhs != rhs || lhs != expect);
    bool want = agg.wants(mismatch, unknown);
    agg.count(mismatch, unknown);
    if (want)
      agg.store("signs=" + maskName(mask, s), triName(expect),
                "lhs=" + triName(lhs) + " rhs=" + triName(rhs), mismatch, unknown);
  }

  // One full sentence-level pass per pool: the folded right side above must
  // agree with evaluating the instance sentence itself.
  FormulaPtr inst = conjunctive ? ccInstance(phis) : dcInstance(phis);
  TriBool whole = evalSentence(inst, fuel);
  bool unknown = whole == TriBool::Unknown;
  bool mismatch = whole == TriBool::False;
  agg.add("instance-sentence", "True", triName(whole), mismatch, unknown);

  return agg.r;
}

CheckReport subsetSuite(const std::string& name, const std::vector<FormulaPtr>& corpus,
                        std::size_t sMax, const Nat& fuel,
                        CheckReport (*perPool)(const std::vector<FormulaPtr>&, const Nat&)) {
  if (corpus.empty()) throw DomainError(name + ": empty corpus");
  if (corpus.size() > 24) throw DomainError(name + ": corpus too large for subset scan");
  Agg agg(name, fuel);
  std::vector<FormulaPtr> pool;
  for (unsigned long long mask = 1; mask < (1ull << corpus.size()); ++mask) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size < 1 || size > sMax) continue;
    pool.clear();
    for (std::size_t i = 0; i < corpus.size(); ++i)
      if ((mask >> i) & 1) pool.push_back(corpus[i]);
    std::stringstream prefix;
    prefix << "subset=0x" << std::hex << mask << " ";
    agg.merge(perPool(pool, fuel), prefix.str());
  }
  return agg.r;
}

}  // namespace

CheckReport checkDC(const std::vector<FormulaPtr>& phis, const Nat& fuel) {
  return checkDcCc(phis, fuel, false);
}

CheckReport checkCC(const std::vector<FormulaPtr>& phis, const Nat& fuel) {
  return checkDcCc(phis, fuel, true);
}

CheckReport suiteDC(const std::vector<FormulaPtr>& corpus, std::size_t sMax, const Nat& fuel) {
  return subsetSuite("dc-suite", corpus, sMax, fuel, checkDC);
}

CheckReport suiteCC(const std::vector<FormulaPtr>& corpus, std::size_t sMax, const Nat& fuel) {
  return subsetSuite("cc-suite", corpus, sMax, fuel, checkCC);
}

// ---------- indicator disjunction ----------

CheckReport checkClaimStar(const std::vector<FormulaPtr>& phis, const Nat& fuel) {
  FormulaPtr theta = thetaDisjunction(phis);
  Agg agg("star", fuel);
  Coder coder;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    TriBool lhs = evalSentence(tru(numeral(coder.formula(phis[i]))), fuel);
    FormulaPtr instantiated = substitute(theta, "x", numeral(i));
    TriBool rhs = evalSentence(tru(numeral(coder.formula(instantiated))), fuel);
    TriBool expect = evalSentence(phis[i], fuel);
    bool unknown =
        lhs == TriBool::Unknown || rhs == TriBool::Unknown || expect == TriBool::Unknown;
    bool mismatch = !unknown && (lhs != rhs || lhs != expect);
    bool want = agg.wants(mismatch, unknown);
    agg.count(mismatch, unknown);
    if (want)
      agg.store("i=" + std::to_string(i), triName(expect),
                "lhs=" + triName(lhs) + " rhs=" + triName(rhs), mismatch, unknown);
  }
  return agg.r;
}

// ---------- stage-translation checks ----------

CheckReport checkTriangle(const FormulaPtr& psi, const std::vector<FormulaPtr>& pool,
                          const Nat& n, std::size_t s, const Nat& fuel, const Nat& budget) {
  if (s >= pool.size()) throw DomainError("checkTriangle: pool index out of range");
  Agg agg("triangle", fuel);
  Interpretation iota = buildIota(psi, pool, n);
  FormulaPtr translated = translate(iota, biconditional(pool[s]));
  std::string input = "n=" + n.str() + " s=" + std::to_string(s);
  try {
    if (budget != 0) nodeCountLiteral(translated, budget);
  } catch (const BudgetError&) {
    agg.add(input + " budget-exceeded", "True", "Unknown", false, true);
    return agg.r;
  }
  TriBool got = evalSentence(translated, fuel);
  agg.add(input, "True", triName(got), got == TriBool::False, got == TriBool::Unknown);
  return agg.r;
}

CheckReport suiteTriangle(const std::vector<FormulaPtr>& corpus, std::size_t maxPoolSize,
                          const Nat& maxN, const Nat& fuel, const Nat& budget) {
  if (corpus.empty()) throw DomainError("triangle-suite: empty corpus");
  if (corpus.size() > 24) throw DomainError("triangle-suite: corpus too large");
  FormulaPtr psi = eq(zero(), num(1));  // carve-out never fires
  Agg agg("triangle-suite", fuel);
  std::vector<FormulaPtr> pool;
  for (unsigned long long mask = 1; mask < (1ull << corpus.size()); ++mask) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size < 1 || size > maxPoolSize) continue;
    pool.clear();
    for (std::size_t i = 0; i < corpus.size(); ++i)
      if ((mask >> i) & 1) pool.push_back(corpus[i]);
    for (Nat n = 0; n <= maxN; ++n) {
      for (std::size_t s = 0; s < pool.size(); ++s) {
        std::stringstream prefix;
        prefix << "subset=0x" << std::hex << mask << " ";
        agg.merge(checkTriangle(psi, pool, n, s, fuel, budget), prefix.str());
      }
    }
  }
  return agg.r;
}

// ---------- piecewise coding ----------

Nat predecessorsCode(const Nat& u) {
  if (u > 1000000) throw DomainError("predecessorsCode: bound too large");
  return (Nat(1) << u.convert_to<unsigned>()) - 1;
}

CheckReport checkPiecewise(const FormulaPtr& phi, const Nat& u, const Nat& fuel) {
  VarSet fv = freeVariables(phi);
  if (fv.size() != 1 || fv.begin()->second != Sort::Number)
    throw DomainError("checkPiecewise: formula must have exactly one free number variable");
  if (u > 4096) throw DomainError("checkPiecewise: bound too large");
  std::string v = fv.begin()->first;

  Agg agg("pc", fuel);
  unsigned width = u.convert_to<unsigned>();

  Nat c = 0;
  std::vector<bool> holds(width);
  for (unsigned i = 0; i < width; ++i) {
    Env env{{v, Nat(i)}};
    holds[i] = evalDelta0(phi, env);
    if (holds[i]) boost::multiprecision::bit_set(c, i);
  }

  Nat cap = predecessorsCode(u);
  agg.add("code", "<= " + cap.str(), c.str(), c > cap, false);

  for (unsigned i = 0; i < width; ++i) {
    bool viaAck = ackBit(i, c);
    bool viaFloor = boost::multiprecision::bit_test(Nat(c >> i), 0);  // floor(c/2^i) odd
    bool mismatch = viaAck != holds[i] || viaFloor != holds[i];
    bool want = agg.wants(mismatch, false);
    agg.count(mismatch, false);
    if (want)
      agg.store("bit i=" + std::to_string(i), holds[i] ? "True" : "False",
                std::string("ack=") + (viaAck ? "True" : "False") +
                    " floor=" + (viaFloor ? "True" : "False"),
                mismatch, false);
  }

  // The code formula itself must hold of (c, u) under the evaluator.
  FormulaPtr codeFormula =
      substitute(substitute(codeOf(phi), "c", numeral(c)), "u", numeral(u));
  TriBool sem = evalSentence(codeFormula, fuel);
  agg.add("code-formula", "True", triName(sem), sem == TriBool::False,
          sem == TriBool::Unknown);
  return agg.r;
}

// ---------- finite descending-order shadow ----------

CheckReport checkDtbFinite(const FormulaPtr& psi, const std::vector<FormulaPtr>& pool,
                           const Nat& nMax, const Nat& fuel) {
  Agg agg("dtb", fuel);
  FormulaPtr target = mkAnd(forallIdx("g", existsIdx("b", prec("b", "g"))),
                            existsIdx("g", idxEq("g", "g")));
  for (Nat n = 0; n <= nMax; ++n) {
    Interpretation iota = buildIota(psi, pool, n);
    TriBool got = evalSentence(translate(iota, target), fuel);
    agg.add("n=" + n.str(), "False", triName(got), got == TriBool::True,
            got == TriBool::Unknown);
  }
  return agg.r;
}

}  // namespace ctw
