#pragma once

#include "paw/build.hpp"
#include "paw/prooftree.hpp"

namespace paw {

// A named construction target with the decoration it is expected to carry.
struct DerivationRecipe {
  Formula target;
  std::string builder;
  Decoration expected;
};

// Runs the named builder from the registry on the target and verifies that
// it yields a well-formed tree with exactly the expected decoration.
bool recipe_holds(const DerivationRecipe& recipe, const BuilderRegistry& registry);

// Law of the excluded middle: for closed A, a cut-free well-formed derivation
// of ~A \/ A with degree 0 and height exactly 2*num_conn(A) + 1.
ProofTree build_LEM(const Formula& a);

// Extended law over equal terms: given correct s = t and free_list(A) = [n],
// derives ~(A[n/s]) \/ A[n/t] with degree 0, height 2*num_conn(A) + 1.
ProofTree build_LEM_term(const Formula& a, Nat n, const ClosedTerm& s, const ClosedTerm& t);

// Shared core of the two: requires closed s, t with equal values and
// free_list(a) within {n}.
ProofTree lem_pair(const Formula& a, Nat n, const ClosedTerm& s, const ClosedTerm& t);

// Exchange-only reassociation, decoration preserving.
ProofTree assoc_left(ProofTree p);   // (C \/ A) \/ B  ->  C \/ (A \/ B)
ProofTree assoc_right(ProofTree p);  // C \/ (A \/ B)  ->  (C \/ A) \/ B

// Exchange-only rearrangement to an arbitrary disjunctive shape over the same
// component multiset. Bounded search; intended for small endsequents.
ProofTree reshape(ProofTree p, const Formula& target);

// Weakening wrappers: new formula on the left, or on the right via exchange.
ProofTree weaken(const Formula& a, ProofTree p);        // A \/ old
ProofTree weaken_right(const Formula& a, ProofTree p);  // old \/ A

}  // namespace paw
