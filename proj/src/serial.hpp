#pragma once

// Text round-trips for the container types.  Bundles and interpretations use
// the S-expression container formats
//   (bundle NAME (provenance "...") (ax NAME ROLE FORMULA) ...)
//   (interpretation (n N) (psi FORMULA) (pool FORMULA ...)
//                   (domain VAR FORMULA) (truth YVAR XVAR FORMULA))
// and check reports use JSON with fixed key order
//   {check, pass, fuel, total, mismatches, unknowns,
//    instances: [{input, expected, got, verdict} ...]}.
// Each writer/reader pair is inverse on every value the library produces.

#include <string>

#include "axioms.hpp"
#include "interp.hpp"
#include "semantics.hpp"

namespace ctw {

std::string bundleToText(const AxiomBundle& b);
AxiomBundle bundleFromText(const std::string& text);

std::string interpretationToText(const Interpretation& iota);
Interpretation interpretationFromText(const std::string& text);

std::string reportToJson(const CheckReport& r);
CheckReport reportFromJson(const std::string& text);

}  // namespace ctw
