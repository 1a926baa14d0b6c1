#pragma once

// Executable diagonalization: the code-level diagonal function, fixed-point
// sentence construction, the indexed-truth universal predicate, and the
// derivability-condition bundles used by the inconsistency export.

#include <vector>

#include "ast.hpp"
#include "axioms.hpp"

namespace ctw {

// encode(φ(g̲)) for the unary formula φ coded by g.
Nat diagonalCode(const Nat& g);

struct FixedPointResult {
  FormulaPtr gamma;     // the fixed-point sentence δ′(code(δ′))
  FormulaPtr delta;     // δ′(v) := ∃y(Diag(v,y) ∧ δ(y))
  FormulaPtr unfolded;  // δ(code(γ))
};

// Standard fixed-point construction for a unary formula δ; the Diag atom's
// semantics ties Diag(a,b) to b = diagonalCode(a).
FixedPointResult fixedPoint(const FormulaPtr& delta);

// θ(x) := ∀a(T_a(x)), free in the number variable x.
FormulaPtr thetaIndexed();

// θ at the code of a closed sentence.
FormulaPtr thetaAt(const FormulaPtr& phi);

// Two derivable distribution/iteration sentences plus one meta obligation:
//   hbl2: θ(code(φ→ψ)) → (θ(code(φ)) → θ(code(ψ)))
//   hbl3: θ(code(φ)) → θ(code(θ(code(φ))))
//   hbl1: obligation record targeting θ(code(φ))
AxiomBundle hblObligations(const FormulaPtr& phi, const FormulaPtr& psi);

// dtbBundle(phis) extended with the lemma targets of the inconsistency
// argument: ¬θ(code(0=S0)), the fixed-point equivalence γ ↔ ¬θ(code(γ)),
// and the derivability conditions instantiated at γ.
AxiomBundle loebBundle(const std::vector<FormulaPtr>& phis);

}  // namespace ctw
