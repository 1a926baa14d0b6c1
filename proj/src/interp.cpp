#include "interp.hpp"

#include <set>

#include "axioms.hpp"
#include "goedel.hpp"
#include "syntax.hpp"

namespace ctw {

namespace {

// ¬(0 = S0): the canonical true sentence standing in for empty conjunctions.
FormulaPtr emptyRangeTrue() { return mkNot(eq(zero(), num(1))); }

void validatePsi(const FormulaPtr& psi, std::string& domainVar) {
  if (!psi) throw DomainError("buildIota: null predicate");
  if (!isPurelyArithmetical(psi))
    throw SortError("buildIota: carve-out predicate outside the arithmetic fragment");
  VarSet fv = freeVariables(psi);
  if (fv.empty()) {
    domainVar = "x";
  } else if (fv.size() == 1 && fv.begin()->second == Sort::Number) {
    domainVar = fv.begin()->first;
  } else {
    throw DomainError("buildIota: predicate must have at most one free number variable");
  }
}

struct Translator {
  const Interpretation& iota;
  std::set<std::string> used;
  std::map<std::string, std::string> env;  // index name -> number name

  std::string freshFor(const std::string& idxName) {
    std::string cand = "y_" + idxName;
    if (used.count(cand)) cand = leastUnusedName(used);
    used.insert(cand);
    return cand;
  }

  std::string numberNameOf(const std::string& idxName) {
    auto it = env.find(idxName);
    if (it == env.end())
      throw DomainError("translate: free index variable '" + idxName + "' has no mapping");
    return it->second;
  }

  FormulaPtr domainAt(const std::string& numberName) {
    return substitute(iota.domainFormula, iota.domainVar, var(numberName));
  }

  FormulaPtr apply(const FormulaPtr& f) {
    switch (f->kind) {
      case FormulaKind::Prec:
        return lt(var(numberNameOf(f->v1)), var(numberNameOf(f->v2)));
      case FormulaKind::IdxEq:
        return eq(var(numberNameOf(f->v1)), var(numberNameOf(f->v2)));
      case FormulaKind::ITru: {
        FormulaPtr withY =
            substitute(iota.truthFormula, iota.truthVarY, var(numberNameOf(f->v1)));
        return substitute(withY, iota.truthVarX, f->t1);
      }
      case FormulaKind::ExistsIdx:
      case FormulaKind::ForallIdx: {
        std::string numberName = freshFor(f->v1);
        auto saved = env.find(f->v1);
        std::string savedName;
        bool hadBinding = saved != env.end();
        if (hadBinding) savedName = saved->second;
        env[f->v1] = numberName;
        FormulaPtr body = apply(f->f1);
        if (hadBinding)
          env[f->v1] = savedName;
        else
          env.erase(f->v1);
        if (f->kind == FormulaKind::ExistsIdx)
          return existsNum(numberName, mkAnd(domainAt(numberName), body));
        return forallNum(numberName, imp(domainAt(numberName), body));
      }
      default: {
        FormulaPtr a = f->f1 ? apply(f->f1) : nullptr;
        FormulaPtr b = f->f2 ? apply(f->f2) : nullptr;
        if (a == f->f1 && b == f->f2) return f;
        auto r = std::make_shared<Formula>(*f);
        r->f1 = a;
        r->f2 = b;
        return r;
      }
    }
  }
};

}  // namespace

FormulaPtr translate(const Interpretation& iota, const FormulaPtr& phi,
                     const std::map<std::string, std::string>& freeIdxMap) {
  if (!phi) throw DomainError("translate: null formula");
  Translator tr{iota, {}, freeIdxMap};
  tr.used = allNames(phi);
  for (const auto& s : allNames(iota.domainFormula)) tr.used.insert(s);
  for (const auto& s : allNames(iota.truthFormula)) tr.used.insert(s);
  tr.used.insert("x");
  tr.used.insert("y");
  for (const auto& [idx, numName] : freeIdxMap) tr.used.insert(numName);
  return tr.apply(phi);
}

Interpretation buildIota(const FormulaPtr& psi, const std::vector<FormulaPtr>& pool,
                         const Nat& n) {
  std::string domainVar;
  validatePsi(psi, domainVar);
  for (const auto& phi : pool) {
    if (!phi) throw DomainError("buildIota: null pool sentence");
    if (!isClosed(phi)) throw DomainError("buildIota: pool sentence has free variables");
    for (FormulaKind k : {FormulaKind::Tru, FormulaKind::SentA, FormulaKind::SubT})
      if (containsKind(phi, k))
        throw SortError("buildIota: unindexed truth vocabulary not allowed in the pool");
  }

  Interpretation stage;
  // translations[m][i] = stage-m translation of pool[i]
  std::vector<std::vector<FormulaPtr>> translations;
  for (Nat m = 0; m <= n; ++m) {
    stage = Interpretation{};
    stage.n = m;
    stage.psi = psi;
    stage.pool = pool;
    stage.domainVar = domainVar;
    stage.domainFormula = mkAnd(lt(var(domainVar), numeral(m)), mkNot(psi));
    stage.truthVarY = "y";
    stage.truthVarX = "x";

    if (pool.empty()) {
      stage.truthFormula = emptyRangeTrue();
    } else {
      std::vector<FormulaPtr> outer;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        FormulaPtr inner;
        if (m == 0) {
          inner = emptyRangeTrue();
        } else {
          std::vector<FormulaPtr> blocks;
          for (Nat k = 0; k < m; ++k) {
            FormulaPtr guard =
                mkAnd(eq(var("y"), numeral(k)),
                      mkNot(substitute(psi, domainVar, numeral(k))));
            blocks.push_back(imp(guard, translations[k.convert_to<std::size_t>()][i]));
          }
          inner = bigAnd(blocks);
        }
        outer.push_back(imp(eq(var("x"), numeral(encodeFormula(pool[i]))), inner));
      }
      stage.truthFormula = bigAnd(outer);
    }

    if (m < n) {
      std::vector<FormulaPtr> row;
      for (const auto& phi : pool) row.push_back(translate(stage, phi));
      translations.push_back(std::move(row));
    }
  }
  return stage;
}

SizeReport sizeProfile(const FormulaPtr& psi, const std::vector<FormulaPtr>& pool,
                       const Nat& nMax, const Nat& budget) {
  SizeReport report;
  report.psiText = renderFormula(psi);
  for (const auto& phi : pool) report.poolTexts.push_back(renderFormula(phi));
  for (Nat m = 0; m <= nMax; ++m) {
    Interpretation iota = buildIota(psi, pool, m);
    SizeRow row{m, 0, 0};
    for (const auto& phi : pool) {
      FormulaPtr translated = translate(iota, biconditional(phi));
      row.literal += nodeCountLiteral(translated, budget);
      row.shared += nodeCountShared(translated);
    }
    report.rows.push_back(row);
  }
  return report;
}

std::string sizeProfileCsv(const SizeReport& report) {
  std::string out = "n,literal,shared\n";
  for (const auto& row : report.rows) {
    out += row.n.str();
    out.push_back(',');
    out += row.literal.str();
    out.push_back(',');
    out += std::to_string(row.shared);
    out.push_back('\n');
  }
  return out;
}

}  // namespace ctw
