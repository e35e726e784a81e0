#pragma once

#include "paw/prooftree.hpp"

namespace paw::mk {

// Rule application helpers that read the premise endsequent, derive the
// formula parameters from its shape and store the premise's actual
// decorations. They throw PreconditionError when the premise has the wrong
// shape, so construction bugs surface at the node that introduced them.

ProofTree exchange_ab(ProofTree p);    // a \/ b  ->  b \/ a
ProofTree exchange_cab(ProofTree p);   // (c \/ a) \/ b  ->  (c \/ b) \/ a
ProofTree exchange_abd(ProofTree p);   // (a \/ b) \/ d  ->  (b \/ a) \/ d
ProofTree exchange_cabd(ProofTree p);  // ((c \/ a) \/ b) \/ d  ->  ((c \/ b) \/ a) \/ d
ProofTree contraction_a(ProofTree p);  // a \/ a  ->  a
ProofTree contraction_ad(ProofTree p);  // (a \/ a) \/ d  ->  a \/ d
ProofTree weakening_ad(Formula a, ProofTree p);  // d  ->  a \/ d; a closed
ProofTree negation_a(ProofTree p);               // a  ->  ~~a
ProofTree negation_ad(ProofTree p);              // a \/ d  ->  ~~a \/ d
ProofTree quantification_a(Formula a, Nat var, const ClosedTerm& witness, ProofTree p);
ProofTree quantification_ad(Formula a, Nat var, const ClosedTerm& witness, ProofTree p);
ProofTree demorgan_ab(ProofTree left, ProofTree right);   // ~a, ~b  ->  ~(a \/ b)
ProofTree demorgan_abd(ProofTree left, ProofTree right);  // ~a \/ d, ~b \/ d  ->  ~(a \/ b) \/ d
ProofTree cut_ca(ProofTree left, ProofTree right);        // c \/ a, ~a  ->  c
ProofTree cut_ad(ProofTree left, ProofTree right);        // a, ~a \/ d  ->  d
ProofTree cut_cad(ProofTree left, ProofTree right);       // c \/ a, ~a \/ d  ->  c \/ d

// Omega nodes; decorations cannot be read off a lazy family, so the shared
// premise decoration is passed in.
ProofTree w_rule_a(Formula a, Nat var, Nat deg, Ordinal ht, OmegaGen gen);
ProofTree w_rule_ad(Formula a, Formula d, Nat var, Nat deg, Ordinal ht, OmegaGen gen);

// Height padding: identity when already at target, ord_up when strictly
// below, error when above.
ProofTree pad_height_to(ProofTree p, const Ordinal& target);
// Degree padding via deg_up, with the same convention.
ProofTree pad_degree_to(ProofTree p, Nat target);

}  // namespace paw::mk
