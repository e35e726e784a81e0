#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "paw/language.hpp"
#include "paw/ordinal.hpp"

namespace paw {

class ProofTree;

// Premise family of an omega rule: a deterministic, pure mapping from closed
// terms to proof trees. Native generators are arbitrary functions; template
// generators instantiate a distinguished variable of a stored body; sampled
// generators are defined on a finite, explicitly listed domain (the form in
// which native generators are serialized).
class OmegaGen {
 public:
  using Fn = std::function<ProofTree(const ClosedTerm&)>;

  static OmegaGen native(Fn fn);
  static OmegaGen with_template(Nat param_index, ProofTree body);
  static OmegaGen sampled(std::vector<std::pair<ClosedTerm, ProofTree>> entries);

  ProofTree operator()(const ClosedTerm& t) const;

  enum class Kind { Native, Template, Sampled };
  Kind kind() const { return kind_; }

  Nat template_param() const;          // pre: Template
  const ProofTree& template_body() const;  // pre: Template
  const std::vector<std::pair<ClosedTerm, ProofTree>>& entries() const;  // pre: Sampled

  // Compose a premise-wise transformation lazily; the result is native.
  OmegaGen map(std::function<ProofTree(const ProofTree&)> f) const;

 private:
  OmegaGen() = default;
  Kind kind_ = Kind::Native;
  Fn fn_;
  Nat param_ = 0;
  std::shared_ptr<const ProofTree> body_;
  std::shared_ptr<const std::vector<std::pair<ClosedTerm, ProofTree>>> entries_;
};

struct PtNode;
struct PtDegUp;
struct PtOrdUp;
struct PtExchangeAB;
struct PtExchangeCAB;
struct PtExchangeABD;
struct PtExchangeCABD;
struct PtContractionA;
struct PtContractionAD;
struct PtWeakeningAD;
struct PtDemorganAB;
struct PtDemorganABD;
struct PtNegationA;
struct PtNegationAD;
struct PtQuantificationA;
struct PtQuantificationAD;
struct PtOmegaA;
struct PtOmegaAD;
struct PtCutCA;
struct PtCutAD;
struct PtCutCAD;

struct PtVariant;

// A decorated derivation: one constructor per deductive rule, carrying the
// claimed degree and height of each premise. Trees are immutable and freely
// shared; decorations are read from the stored parameters (never by forcing
// omega premises) and validated against the premises by check_tree.
class ProofTree {
 public:
  ProofTree() = delete;
  explicit ProofTree(PtVariant v);

  const PtVariant& node() const {
    if (!node_) throw std::logic_error("use of a moved-from ProofTree");
    return *node_;
  }

 private:
  std::shared_ptr<const PtVariant> node_;
};

// Stored decoration parameters: degree first, height second.
struct Decoration {
  Nat degree;
  Ordinal height;
};

struct PtNode {
  Formula formula;
};
struct PtDegUp {
  Nat degree;
  ProofTree child;
};
struct PtOrdUp {
  Ordinal height;
  ProofTree child;
};
// Premise A \/ B, conclusion B \/ A.
struct PtExchangeAB {
  Formula a, b;
  Nat deg;
  Ordinal ht;
  ProofTree child;
};
// Premise (C \/ A) \/ B, conclusion (C \/ B) \/ A.
struct PtExchangeCAB {
  Formula c, a, b;
  Nat deg;
  Ordinal ht;
  ProofTree child;
};
// Premise (A \/ B) \/ D, conclusion (B \/ A) \/ D.
struct PtExchangeABD {
  Formula a, b, d;
  Nat deg;
  Ordinal ht;
  ProofTree child;
};
// Premise ((C \/ A) \/ B) \/ D, conclusion ((C \/ B) \/ A) \/ D.
struct PtExchangeCABD {
  Formula c, a, b, d;
  Nat deg;
  Ordinal ht;
  ProofTree child;
};
// Premise A \/ A, conclusion A.
struct PtContractionA {
  Formula a;
  Nat deg;
  Ordinal ht;
  ProofTree child;
};
// Premise (A \/ A) \/ D, conclusion A \/ D.
struct PtContractionAD {
  Formula a, d;
  Nat deg;
  Ordinal ht;
  ProofTree child;
};
// Premise D, conclusion A \/ D; A must be closed.
struct PtWeakeningAD {
  Formula a, d;
  Nat deg;
  Ordinal ht;
  ProofTree child;
};
// Premises ~A and ~B, conclusion ~(A \/ B).
struct PtDemorganAB {
  Formula a, b;
  Nat deg1, deg2;
  Ordinal ht1, ht2;
  ProofTree left, right;
};
// Premises ~A \/ D and ~B \/ D, conclusion ~(A \/ B) \/ D.
struct PtDemorganABD {
  Formula a, b, d;
  Nat deg1, deg2;
  Ordinal ht1, ht2;
  ProofTree left, right;
};
// Premise A, conclusion ~~A.
struct PtNegationA {
  Formula a;
  Nat deg;
  Ordinal ht;
  ProofTree child;
};
// Premise A \/ D, conclusion ~~A \/ D.
struct PtNegationAD {
  Formula a, d;
  Nat deg;
  Ordinal ht;
  ProofTree child;
};
// Premise ~(A[var/witness]), conclusion ~(forall var, A). The witness is
// stored as a plain term so template bodies can mention the template
// parameter; well-formedness requires it closed.
struct PtQuantificationA {
  Formula a;
  Nat var;
  Term witness;
  Nat deg;
  Ordinal ht;
  ProofTree child;
};
// Premise ~(A[var/witness]) \/ D, conclusion ~(forall var, A) \/ D.
struct PtQuantificationAD {
  Formula a, d;
  Nat var;
  Term witness;
  Nat deg;
  Ordinal ht;
  ProofTree child;
};
// Premises A[var/t] for every closed t, conclusion forall var, A. All
// premises share the stored decoration.
struct PtOmegaA {
  Formula a;
  Nat var;
  Nat deg;
  Ordinal ht;
  OmegaGen gen;
};
// Premises A[var/t] \/ D, conclusion (forall var, A) \/ D.
struct PtOmegaAD {
  Formula a, d;
  Nat var;
  Nat deg;
  Ordinal ht;
  OmegaGen gen;
};
// Premises C \/ A and ~A, conclusion C.
struct PtCutCA {
  Formula c, a;
  Nat deg1, deg2;
  Ordinal ht1, ht2;
  ProofTree left, right;
};
// Premises A and ~A \/ D, conclusion D. Adds two to the height: it stands
// for a weakening followed by cut_cad.
struct PtCutAD {
  Formula a, d;
  Nat deg1, deg2;
  Ordinal ht1, ht2;
  ProofTree left, right;
};
// Premises C \/ A and ~A \/ D, conclusion C \/ D.
struct PtCutCAD {
  Formula c, a, d;
  Nat deg1, deg2;
  Ordinal ht1, ht2;
  ProofTree left, right;
};

struct PtVariant
    : std::variant<PtNode, PtDegUp, PtOrdUp, PtExchangeAB, PtExchangeCAB, PtExchangeABD,
                   PtExchangeCABD, PtContractionA, PtContractionAD, PtWeakeningAD, PtDemorganAB,
                   PtDemorganABD, PtNegationA, PtNegationAD, PtQuantificationA,
                   PtQuantificationAD, PtOmegaA, PtOmegaAD, PtCutCA, PtCutAD, PtCutCAD> {
  using variant::variant;
};

// Constructor helpers, named after the rules they apply.
namespace pt {
ProofTree node(Formula f);
ProofTree deg_up(Nat degree, ProofTree p);
ProofTree ord_up(Ordinal height, ProofTree p);
ProofTree exchange_ab(Formula a, Formula b, Nat deg, Ordinal ht, ProofTree p);
ProofTree exchange_cab(Formula c, Formula a, Formula b, Nat deg, Ordinal ht, ProofTree p);
ProofTree exchange_abd(Formula a, Formula b, Formula d, Nat deg, Ordinal ht, ProofTree p);
ProofTree exchange_cabd(Formula c, Formula a, Formula b, Formula d, Nat deg, Ordinal ht,
                        ProofTree p);
ProofTree contraction_a(Formula a, Nat deg, Ordinal ht, ProofTree p);
ProofTree contraction_ad(Formula a, Formula d, Nat deg, Ordinal ht, ProofTree p);
ProofTree weakening_ad(Formula a, Formula d, Nat deg, Ordinal ht, ProofTree p);
ProofTree demorgan_ab(Formula a, Formula b, Nat deg1, Nat deg2, Ordinal ht1, Ordinal ht2,
                      ProofTree left, ProofTree right);
ProofTree demorgan_abd(Formula a, Formula b, Formula d, Nat deg1, Nat deg2, Ordinal ht1,
                       Ordinal ht2, ProofTree left, ProofTree right);
ProofTree negation_a(Formula a, Nat deg, Ordinal ht, ProofTree p);
ProofTree negation_ad(Formula a, Formula d, Nat deg, Ordinal ht, ProofTree p);
ProofTree quantification_a(Formula a, Nat var, Term witness, Nat deg, Ordinal ht, ProofTree p);
ProofTree quantification_ad(Formula a, Formula d, Nat var, Term witness, Nat deg, Ordinal ht,
                            ProofTree p);
ProofTree w_rule_a(Formula a, Nat var, Nat deg, Ordinal ht, OmegaGen gen);
ProofTree w_rule_ad(Formula a, Formula d, Nat var, Nat deg, Ordinal ht, OmegaGen gen);
ProofTree cut_ca(Formula c, Formula a, Nat deg1, Nat deg2, Ordinal ht1, Ordinal ht2,
                 ProofTree left, ProofTree right);
ProofTree cut_ad(Formula a, Formula d, Nat deg1, Nat deg2, Ordinal ht1, Ordinal ht2,
                 ProofTree left, ProofTree right);
ProofTree cut_cad(Formula c, Formula a, Formula d, Nat deg1, Nat deg2, Ordinal ht1, Ordinal ht2,
                  ProofTree left, ProofTree right);
}  // namespace pt

// Endsequent and decoration extraction by pattern match on the root. These
// read only stored parameters and never force omega premises.
Formula ptree_formula(const ProofTree& p);
Nat ptree_deg(const ProofTree& p);
Ordinal ptree_ord(const ProofTree& p);
Decoration decoration(const ProofTree& p);

const char* rule_name(const ProofTree& p);

// First failing node (child indices from the root) and the condition it broke.
struct CheckFailure {
  std::vector<std::size_t> path;
  std::string rule;
  std::string condition;

  std::string to_string() const;
};

struct CheckResult {
  bool ok;
  std::optional<CheckFailure> failure;
};

// Omega sample sets: numerals 0..n-1 plus the compound closed term (0 + S(0)).
std::vector<ClosedTerm> make_omega_samples(Nat n);
const std::vector<ClosedTerm>& default_omega_samples();

// Full well-formedness: axiom leaves, premise shapes, decoration agreement,
// closedness side conditions; omega premises are checked at the samples.
CheckResult check_tree(const ProofTree& p, const std::vector<ClosedTerm>& samples);
bool well_formed(const ProofTree& p);

// Per-sample schema check of a single omega node (pre: w_rule_a or w_rule_ad):
// each sampled premise must be well-formed with the stored decoration and the
// substituted endsequent.
bool check_omega_node(const ProofTree& p, const std::vector<ClosedTerm>& samples);

// Walks the non-generator part of the tree plus sampled omega premises.
bool contains_cut(const ProofTree& p, const std::vector<ClosedTerm>& samples);
// Rule-name histogram over the same walk.
std::vector<std::pair<std::string, Nat>> rule_histogram(const ProofTree& p,
                                                        const std::vector<ClosedTerm>& samples);

// Substitutes a variable (by a closed term) through every formula and witness
// term of a tree; omega premises are rewritten lazily.
ProofTree substitute_tree(const ProofTree& p, Nat index, const Term& replacement);

// Registry of derivation builders backing `provable`: a search over known
// constructions, not a decision procedure.
class BuilderRegistry {
 public:
  using Builder = std::function<std::optional<ProofTree>(const Formula&)>;

  void add(std::string name, Builder builder);
  // A well-formed tree with endsequent A, degree <= d and height exactly
  // alpha, if some registered builder yields one.
  std::optional<ProofTree> provable(const Formula& a, Nat d, const Ordinal& alpha) const;
  // Runs one builder by name; nullopt when absent or inapplicable.
  std::optional<ProofTree> run(const std::string& name, const Formula& a) const;

 private:
  std::vector<std::pair<std::string, Builder>> builders_;
};

}  // namespace paw
