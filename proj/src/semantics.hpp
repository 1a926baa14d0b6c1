#pragma once

// Fuel-bounded three-valued standard-model evaluation and the desk-scale
// check suites built on it.  The evaluator is sound: a True or False verdict
// is a genuine standard-model fact; Unknown marks exhausted search or
// unfolding depth.

#include <map>
#include <string>
#include <vector>

#include "ast.hpp"
#include "interp.hpp"

namespace ctw {

enum class TriBool { False = 0, True = 1, Unknown = 2 };

std::string triName(TriBool v);
TriBool triNot(TriBool a);
TriBool triOr(TriBool a, TriBool b);
TriBool triAnd(TriBool a, TriBool b);

using Env = std::map<std::string, Nat>;

// Standard-model value of a term under an environment; DomainError on an
// unbound variable.
Nat evalTerm(const TermPtr& t, const Env& env);

// Exact two-valued evaluation for bounded-quantifier formulas without truth
// or index vocabulary; throws on anything outside that fragment.
bool evalDelta0(const FormulaPtr& f, const Env& env);

// Three-valued evaluation.  Bounded quantifiers are exact; unbounded ∃ can
// say True (witness found) or False (only when a pinning or bounding
// conjunct proves the range finite), otherwise Unknown; ∀ dually.  Truth
// atoms decode and unfold with fuel − 1; fuel 0 yields Unknown; codes
// outside the closed index-free fragment are False.
TriBool evalFormula(const FormulaPtr& f, const Env& env, const Nat& fuel);

// evalFormula on a closed formula without index syntax.
TriBool evalSentence(const FormulaPtr& f, const Nat& fuel);

struct CheckInstance {
  std::string input;
  std::string expected;
  std::string got;
  std::string verdict;  // "ok" | "mismatch" | "unknown"
};

struct CheckReport {
  std::string check;
  bool pass = true;
  Nat fuel = 0;
  std::size_t total = 0;
  std::size_t mismatches = 0;
  std::size_t unknowns = 0;
  // All mismatches and unknowns (up to a fixed cap) plus a few leading
  // ok-samples; counters above are complete regardless of the cap.
  std::vector<CheckInstance> instances;
};

// The fixed 16-sentence corpus of closed bounded sentences, alternating
// true/false, and its expected truth values.
std::vector<FormulaPtr> seedCorpus();
std::vector<bool> seedCorpusTruths();

// Reads whitespace-separated formula S-expressions from a file.
std::vector<FormulaPtr> loadCorpus(const std::string& path);

// Disjunctive correctness for one pool: T(code(⋁)) against ⋁T(code(φ_i)),
// over all 2^s sign-flip variants of the pool.
CheckReport checkDC(const std::vector<FormulaPtr>& phis, const Nat& fuel);

// Conjunctive dual.
CheckReport checkCC(const std::vector<FormulaPtr>& phis, const Nat& fuel);

// checkDC / checkCC over every subset of the corpus with 1 ≤ size ≤ sMax.
CheckReport suiteDC(const std::vector<FormulaPtr>& corpus, std::size_t sMax, const Nat& fuel);
CheckReport suiteCC(const std::vector<FormulaPtr>& corpus, std::size_t sMax, const Nat& fuel);

// T(code(φ_i)) ↔ T(code(θ(i̲))) for the indicator disjunction θ of the pool.
CheckReport checkClaimStar(const std::vector<FormulaPtr>& phis, const Nat& fuel);

// Evaluates the stage-n translation of the indexed-truth biconditional for
// pool member s; expected True, Unknown only past the node budget.
CheckReport checkTriangle(const FormulaPtr& psi, const std::vector<FormulaPtr>& pool,
                          const Nat& n, std::size_t s, const Nat& fuel, const Nat& budget);

// checkTriangle over every corpus subset of size ≤ maxPoolSize, every
// stage n ≤ maxN, and every pool position s.
CheckReport suiteTriangle(const std::vector<FormulaPtr>& corpus, std::size_t maxPoolSize,
                          const Nat& maxN, const Nat& fuel, const Nat& budget);

// Piecewise coding: computes the bit-set code c of {i < u : φ(i)}, verifies
// it bit-for-bit against the floor/odd oracle, against the predecessor
// bound, and against the SubT-based code formula under the evaluator.
CheckReport checkPiecewise(const FormulaPtr& phi, const Nat& u, const Nat& fuel);

// 2^u − 1: the code of the full predecessor set.
Nat predecessorsCode(const Nat& u);

// Stage-n translations of "every index has a predecessor and some index
// exists" for n ≤ nMax; expected False at every stage.
CheckReport checkDtbFinite(const FormulaPtr& psi, const std::vector<FormulaPtr>& pool,
                           const Nat& nMax, const Nat& fuel);

}  // namespace ctw
