#pragma once

// The finite-stage interpretation family: stage-n domain and indexed-truth
// formulas, translation of index-sorted formulas into pure arithmetic, and
// translation-size measurement.

#include <map>
#include <string>
#include <vector>

#include "ast.hpp"

namespace ctw {

struct Interpretation {
  Nat n;                        // stage
  FormulaPtr psi;               // carve-out predicate (at most one free variable)
  std::vector<FormulaPtr> pool; // closed index-language sentences
  std::string domainVar;        // free variable of domainFormula
  FormulaPtr domainFormula;     // D(x) := x < n̲ ∧ ¬ψ(x)
  std::string truthVarY, truthVarX;
  FormulaPtr truthFormula;      // IT(y,x), free exactly in those two
};

// Builds stages 0..n recursively; stage m embeds the stage-<m translations
// of the pool sentences literally.
Interpretation buildIota(const FormulaPtr& psi, const std::vector<FormulaPtr>& pool,
                         const Nat& n);

// Replaces index-sorted syntax by arithmetic: Prec ↦ Lt, index equality ↦
// Eq, indexed truth ↦ the stage truth formula, index quantifiers relativized
// to the stage domain.  Arithmetic subtrees are returned unchanged (same
// object).  Free index variables must be listed in freeIdxMap (index name →
// number variable name); otherwise they are an error.
FormulaPtr translate(const Interpretation& iota, const FormulaPtr& phi,
                     const std::map<std::string, std::string>& freeIdxMap = {});

struct SizeRow {
  Nat n;
  Nat literal;         // tree node count, summed over the pool
  std::size_t shared;  // distinct-subtree count, summed over the pool
};

struct SizeReport {
  std::string psiText;
  std::vector<std::string> poolTexts;
  std::vector<SizeRow> rows;
};

// Node counts of the translated biconditionals for n = 0..nMax; literal
// counting aborts with BudgetError past `budget` nodes (0 = unlimited).
SizeReport sizeProfile(const FormulaPtr& psi, const std::vector<FormulaPtr>& pool,
                       const Nat& nMax, const Nat& budget);

// CSV rendering: header "n,literal,shared" then one row per stage.
std::string sizeProfileCsv(const SizeReport& report);

}  // namespace ctw
