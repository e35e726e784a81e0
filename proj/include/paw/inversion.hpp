#pragma once

#include "paw/prooftree.hpp"

namespace paw {

// Boolean tree mirroring a formula's disjunctive structure; flag_1 marks the
// positions eligible for rewriting.
class SubstIndicator {
 public:
  static SubstIndicator flag0();
  static SubstIndicator flag1();
  static SubstIndicator pair(SubstIndicator left, SubstIndicator right);

  bool is_pair() const { return node_ != nullptr; }
  bool flag() const;  // pre: !is_pair
  const SubstIndicator& left() const;
  const SubstIndicator& right() const;

  bool all_zero() const;

 private:
  SubstIndicator(bool flag, std::shared_ptr<const std::pair<SubstIndicator, SubstIndicator>> node)
      : flag_(flag), node_(std::move(node)) {}
  bool flag_ = false;
  std::shared_ptr<const std::pair<SubstIndicator, SubstIndicator>> node_;
};

bool operator==(const SubstIndicator& a, const SubstIndicator& b);

// Pair structure must match the formula's lor structure exactly; flags sit at
// non-lor positions.
bool fits(const Formula& a, const SubstIndicator& s);

// All-zero (resp. all-one) indicator fitting the formula's shape. Indicators
// depend only on the lor skeleton, which substitution preserves.
SubstIndicator non_target(const Formula& a);
SubstIndicator target(const Formula& a);

std::string to_text(const SubstIndicator& s);
SubstIndicator parse_indicator(std::string_view text);  // 0 | 1 | (S,S)

// Replaces flag_1 components equal to `from` by `to`; pre: fits(a, s).
Formula formula_sub(const Formula& a, const Formula& from, const Formula& to,
                    const SubstIndicator& s);

// The three decoration-preserving inversions. Preconditions: well_formed(p)
// and fits(ptree_formula(p), s). Each rewrites the endsequent exactly as
// formula_sub of its pattern and preserves degree and height node for node.

// Pattern ~~e -> e.
ProofTree invert_dubneg(const ProofTree& p, const Formula& e, const SubstIndicator& s);
// Pattern ~(e1 \/ e2) -> ~e1 (resp. ~e2); e must be the disjunction e1 \/ e2.
ProofTree invert_demorgan_1(const ProofTree& p, const Formula& e, const SubstIndicator& s);
ProofTree invert_demorgan_2(const ProofTree& p, const Formula& e, const SubstIndicator& s);
// Pattern forall x<n>, a -> a[n/t]; e must be that universal formula. The
// quantification rule itself is never inverted; only w_rule premises are
// instantiated.
ProofTree invert_omega(const ProofTree& p, const Formula& e, const SubstIndicator& s,
                       const ClosedTerm& t);

// Rewrites weakening-introduced occurrences of a formula that can never be
// principal in a tall rule nor an axiom (an incorrect atom, or the negation
// of a correct one). Used by the atomic cut case.
ProofTree weakening_sub(const ProofTree& p, const Formula& from, const Formula& to,
                        const SubstIndicator& s);

}  // namespace paw
