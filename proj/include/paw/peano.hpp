#pragma once

#include "paw/derivations.hpp"
#include "paw/prooftree.hpp"

namespace paw {

class PeanoProof;
struct PpVariant;

// A decorated Hilbert-calculus derivation. Conclusions are computed from the
// constructor parameters; the decoration is the one its translation into the
// sequent calculus carries, computed once at construction (it does not depend
// on the closure term).
class PeanoProof {
 public:
  explicit PeanoProof(PpVariant v);

  const PpVariant& node() const;
  const Formula& conclusion() const;
  const Decoration& decoration() const;

 private:
  struct Rep;
  std::shared_ptr<const Rep> rep_;
};

// Instantiation family for the strengthened universal generalisation: a
// deterministic mapping from closed terms to proofs of the substituted
// formula.
class PeanoGen {
 public:
  using Fn = std::function<PeanoProof(const ClosedTerm&)>;

  static PeanoGen native(Fn fn);
  static PeanoGen sampled(std::vector<std::pair<ClosedTerm, PeanoProof>> entries);

  PeanoProof operator()(const ClosedTerm& t) const;

  bool is_sampled() const { return entries_ != nullptr; }
  const std::vector<std::pair<ClosedTerm, PeanoProof>>& entries() const;

 private:
  PeanoGen() = default;
  Fn fn_;
  std::shared_ptr<const std::vector<std::pair<ClosedTerm, PeanoProof>>> entries_;
};

struct PpFOL1 {
  Formula a, b;
};
struct PpFOL2 {
  Formula a, b, c;
};
struct PpFOL3 {
  Formula a, b;
};
struct PpFOL4 {
  Formula a;
  Nat var;
  Term t;  // closed
};
struct PpFOL5 {
  Formula a, b;
  Nat var;  // not free in a
};
struct PpEquTrans {};
struct PpEquSucc {};
struct PpNonZero {};
struct PpSuccEqu {};
struct PpPl0 {};
struct PpPlS {};
struct PpMl0 {};
struct PpMlS {};
struct PpInduct {
  Formula a;
  Nat var;
};
struct PpMP {
  PeanoProof impl;  // proves ~X \/ B
  PeanoProof arg;   // proves X
};
struct PpUG {
  PeanoProof sub;
  Nat var;
};
struct PpIUG {
  PeanoProof sub;
  Nat var;
  PeanoGen family;  // proofs of A[var/t] for each closed t
};
// An unjustified claim; translates to a bare leaf, which the well-formedness
// check then rejects unless the claim happens to be an axiom. Exists so that
// the consistency pipeline has something to diagnose.
struct PpStub {
  Formula claim;
};

struct PpVariant : std::variant<PpFOL1, PpFOL2, PpFOL3, PpFOL4, PpFOL5, PpEquTrans, PpEquSucc,
                                PpNonZero, PpSuccEqu, PpPl0, PpPlS, PpMl0, PpMlS, PpInduct, PpMP,
                                PpUG, PpIUG, PpStub> {
  using variant::variant;
};

namespace pa {
PeanoProof fol1(Formula a, Formula b);
PeanoProof fol2(Formula a, Formula b, Formula c);
PeanoProof fol3(Formula a, Formula b);
PeanoProof fol4(Formula a, Nat var, const ClosedTerm& t);
PeanoProof fol5(Formula a, Formula b, Nat var);
PeanoProof equ_trans();
PeanoProof equ_succ();
PeanoProof non_zero();
PeanoProof succ_equ();
PeanoProof pl0();
PeanoProof plS();
PeanoProof ml0();
PeanoProof mlS();
PeanoProof induct(Formula a, Nat var);
PeanoProof mp(PeanoProof impl, PeanoProof arg);
PeanoProof ug(PeanoProof sub, Nat var);
PeanoProof i_ug(PeanoProof sub, Nat var, PeanoGen family);
PeanoProof stub(Formula claim);
}  // namespace pa

// Translation into the sequent calculus: a tree with endsequent
// closure(conclusion(p), c) whose decoration equals p's stored one. Modus
// ponens maps to cut_ad, generalisation to the omega rule.
ProofTree translate(const PeanoProof& p, const ClosedTerm& c);

// ---------------------------------------------------------------------------
// Axiom derivations in the sequent calculus (closed instances).

ProofTree derive_FOL1(const Formula& a, const Formula& b);
ProofTree derive_FOL2(const Formula& a, const Formula& b, const Formula& c);
ProofTree derive_FOL3(const Formula& a, const Formula& b);
// free(a) within {var}; t closed.
ProofTree derive_FOL4(const Formula& a, Nat var, const ClosedTerm& t);
// a closed, free(b) within {var}.
ProofTree derive_FOL5(const Formula& a, const Formula& b, Nat var);

// Closed instances of the requantified arithmetic axioms; ids: eq_trans,
// eq_succ, non_zero, succ_equ, pl0, plS, ml0, mlS.
ProofTree derive_arith(const std::string& id, const std::vector<ClosedTerm>& terms);
// Number of instance terms the axiom takes.
Nat arith_arity(const std::string& id);
// The quantified original, derived through omega rules over all instances.
ProofTree derive_arith_quantified(const std::string& id);
Formula arith_axiom_formula(const std::string& id);

// ---------------------------------------------------------------------------
// Induction schema machinery.

Formula inductive_chain(const Formula& a, Nat n, Nat m);
Formula inductive_iterate(const Formula& a, Nat n, Nat m);

// Proof of the inductive iterate I(m) with degree 0 and height exactly
// alpha + 4m + 1, where alpha is the LEM height 2*num_conn(a) + 1.
ProofTree derive_iterate(const Formula& a, Nat n, Nat m);

// The induction axiom instance for a (free variables within {n}), concluded
// by an omega rule whose premises are the iterate proofs cut against LEM,
// padded to the uniform height omega.
ProofTree derive_induction(const Formula& a, Nat n);

// ---------------------------------------------------------------------------
// Consistency demonstration.

struct ConsistencyReport {
  Formula a;
  CheckResult first;   // translation of the proof of A
  CheckResult second;  // translation of the proof of ~A
  ProofTree danger;    // structural derivation of 0 = S(0) from the pair
  std::string verdict;
};

// Translates both proofs with the numeral 0, assembles the dangerous cut and
// reports which well-formedness check the pair fails. Pre: the stated
// conclusions are A and ~A.
ConsistencyReport demonstrate_consistency(const PeanoProof& proof_a,
                                          const PeanoProof& proof_not_a);

// ---------------------------------------------------------------------------
// Registry and text format.

// Builders: axiom leaves, LEM, FOL1 shape instances, arithmetic instances,
// and (optionally) the quantified arithmetic originals.
BuilderRegistry standard_registry(bool include_quantified_axioms = true);

std::string to_text(const PeanoProof& p,
                    const std::vector<ClosedTerm>& samples = default_omega_samples());
PeanoProof parse_peano_proof(std::string_view text);  // throws ParseError

}  // namespace paw
