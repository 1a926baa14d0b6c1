#pragma once

// Generators for the axiom families and key object formulas the workbench
// studies: compositional truth instances over finite pools, disjunctive and
// conjunctive correctness instances, induction sentences, indexed-truth
// biconditionals, piecewise-coding formulas, the indicator disjunction, the
// base arithmetic (Q) and strict-order axioms, and the bundled
// descending-index theory whose inconsistency the export targets.

#include <string>
#include <utility>
#include <vector>

#include "ast.hpp"

namespace ctw {

enum class Role { Axiom, Conjecture, Obligation };

std::string roleName(Role r);
Role roleFromName(const std::string& s);

struct NamedSentence {
  std::string name;
  Role role = Role::Axiom;
  FormulaPtr body;
};

struct AxiomBundle {
  std::string name;
  std::string provenance;  // free-text origin note, carried into exports
  std::vector<NamedSentence> sentences;
};

// Throws DomainError if a name repeats.
void validateBundle(const AxiomBundle& b);

// Compositional truth axioms over finite pools:
//   tarski_0                one universally quantified sentence-hood guard
//   tarski_1_<i>            T(code(t1=t2)) ↔ v1̲ = v2̲ for evaluated values
//   tarski_2_<i>            T(code(¬φ)) ↔ ¬T(code(φ))
//   tarski_3_<i>_<j>        T(code(φ∨ψ)) ↔ T(code(φ)) ∨ T(code(ψ))
//   tarski_4_<i>_surrogate  T(code(∃v γ)) ↔ ⋁_{x<b} T(code(γ(x̲)))
// sentPool entries must be closed arithmetic-fragment sentences; formPool
// entries carry exactly one free variable and a witness bound ≥ 1.
AxiomBundle tarskiInstances(const std::vector<FormulaPtr>& sentPool,
                            const std::vector<std::pair<TermPtr, TermPtr>>& termPool,
                            const std::vector<std::pair<FormulaPtr, Nat>>& formPool);

// T(code(⋁φs)) ↔ ⋁ T(code(φ_i)), both sides left-grouped.
FormulaPtr dcInstance(const std::vector<FormulaPtr>& phis);

// T(code(⋀φs)) ↔ ⋀ T(code(φ_i)), conjunction in its ¬⋁¬ form.
FormulaPtr ccInstance(const std::vector<FormulaPtr>& phis);

// Ind_ψ := ψ(0) → (∀v(ψ(v) → ψ(v+1)) → ∀v ψ(v)) for unary ψ.
FormulaPtr indSentence(const FormulaPtr& psi);

// T(code(Ind_ψ)).
FormulaPtr icInstance(const FormulaPtr& psi);

// ∀α(T_α(code(φ)) ↔ φ^{≺α}) with α fresh for φ; φ must be a closed sentence
// of the indexed-truth language (no unindexed truth atoms).
FormulaPtr biconditional(const FormulaPtr& phi);

// ∀u∃y∀x((T(x) ∧ x<u) ↔ Ack(x,y)): the truth predicate is piecewise coded.
FormulaPtr pcU();

// Piecewise coding of the relation defined by φ's free variables, with the
// tuple code spelled out through the doubled Cantor-pairing equation.
FormulaPtr pcPhi(const FormulaPtr& phi);

// Code(c,φ,u) := ∀x(x<u → (SubT(code(φ), x) ↔ Ack(x,c))), free in c and u.
FormulaPtr codeOf(const FormulaPtr& phi);

// ∀u∃c Code(c,φ,u).
FormulaPtr pcOf(const FormulaPtr& phi);

// θ(x) := ⋁_{i<u}((x = i̲) ∧ φ_i), unary in x.
FormulaPtr thetaDisjunction(const std::vector<FormulaPtr>& phis);

// The fixed eight-axiom base arithmetic.
AxiomBundle qAxioms();

// Irreflexivity and transitivity of the index order.
AxiomBundle orderAxioms();

// Base arithmetic + order + descending chain + nonemptiness + biconditionals
// for the pool, with the inconsistency target as conjecture.
AxiomBundle dtbBundle(const std::vector<FormulaPtr>& phis);

// The canonical false sentence 0 = S0 used as an in-tree conjecture body.
FormulaPtr falseSentence();

}  // namespace ctw
