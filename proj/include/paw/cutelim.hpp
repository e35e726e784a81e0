#pragma once

#include "paw/inversion.hpp"
#include "paw/prooftree.hpp"

namespace paw {

// Structure of a cut formula, driving the reduction strategy.
enum class CutCase { Atomic, Negated, Disjunctive, Quantified };

CutCase classify_cut_formula(const Formula& a);

// Every disjunct is a closed atomic equation that does not hold.
bool dangerous_disjunct(const Formula& a);

// Replaces a cut over a universally quantified formula by cuts over its
// instances: each quantification of the cut formula inside the right premise
// becomes a cut against the omega-inverted left premise. Pre: well_formed(p)
// and the root of p is a cut whose cut formula is universal. The endsequent
// is preserved; the result contains only cuts over instance formulas.
ProofTree godel_transform(const ProofTree& p);

// One-degree reduction: for well-formed p with degree d+1 and normal height
// alpha, a well-formed tree with the same endsequent, degree exactly d and
// height exactly 2^alpha. Degree-0 input is a precondition error.
ProofTree reduce_once(const ProofTree& p);

// Iterates reduce_once down to degree 0; the height is exp2 applied
// ptree_deg(p) times to ptree_ord(p).
ProofTree cut_elim(const ProofTree& p);

// Mechanizes the inconsistency argument: from claimed proofs of A and ~A,
// assembles a tree with endsequent 0 = S(0) by weakening, exchange and cut.
// The assembly is structural; it does not require the inputs to be
// well-formed (jointly they never can be), and its degree is positive by
// construction.
ProofTree derive_danger_from_contradiction(const ProofTree& proof_a, const ProofTree& proof_not_a);

// The canonical dangerous formula 0 = S(0).
Formula danger_formula();

}  // namespace paw
