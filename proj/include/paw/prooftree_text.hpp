#pragma once

#include <string>
#include <string_view>

#include "paw/prooftree.hpp"

namespace paw {

// Parenthesized constructor syntax, e.g.
//   (exchange_ab "x1 = 0" "(0 + 0) = 0" 0 (ord "w^0*1") (weakening_ad ...))
// Formulas and terms are quoted in the language's text syntax; ordinals are
// (ord "...") tokens. Omega premises print either as a template
// (template x<i> <ptree>), instantiated by substituting x<i>, or as a finite
// expansion (sampled ("<term>" <ptree>) ...) at the given sample set, which is
// how native generators are emitted. Template and sampled trees round-trip
// exactly; native generators round-trip up to their sampled expansion.
std::string to_text(const ProofTree& p,
                    const std::vector<ClosedTerm>& omega_samples = default_omega_samples());

ProofTree parse_prooftree(std::string_view text);  // throws ParseError

}  // namespace paw
