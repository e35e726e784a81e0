#include "paw/cutelim.hpp"

#include "paw/build.hpp"
#include "paw/derivations.hpp"

namespace paw {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

CutCase classify_cut_formula(const Formula& a) {
  return std::visit(overloaded{
                        [](const FmAtom&) { return CutCase::Atomic; },
                        [](const FmNeg&) { return CutCase::Negated; },
                        [](const FmLor&) { return CutCase::Disjunctive; },
                        [](const FmUniv&) { return CutCase::Quantified; },
                    },
                    a.node());
}

bool dangerous_disjunct(const Formula& a) {
  if (const FmLor* l = as_lor(a)) {
    return dangerous_disjunct(l->left) && dangerous_disjunct(l->right);
  }
  const FmAtom* at = as_atom(a);
  return at != nullptr && correct_atom(at->atom) == Correctness::Incorrect;
}

Formula danger_formula() {
  return Formula::atom(Term::zero(), Term::succ(Term::zero()));
}

// ---------------------------------------------------------------------------
// Quantified cuts: rewriting quantifications of the cut formula into cuts

namespace {

// Replaces flagged occurrences of ~(forall n, e) by the side formula R,
// turning each quantification that introduced them into a cut with the
// partner premise W(t): R \/ e[n/t]. Heights grow by at most hw (the uniform
// partner height) on flagged paths; omega premises are padded to keep their
// decorations uniform.
class QuantCutEngine {
 public:
  QuantCutEngine(Formula pattern, Formula body, Nat var, Formula replacement,
                 std::function<ProofTree(const ClosedTerm&)> partner, Nat deg_w, Ordinal ht_w)
      : pattern_(std::move(pattern)),
        body_(std::move(body)),
        var_(var),
        replacement_(std::move(replacement)),
        partner_(std::move(partner)),
        deg_star_(std::max(deg_w, num_conn(body_) + 1)),
        ht_w_(std::move(ht_w)) {}

  ProofTree apply(const ProofTree& p, const SubstIndicator& s) const {
    if (s.all_zero()) return p;
    return std::visit([&](const auto& n) { return visit(p, n, s); }, p.node());
  }

 private:
  Formula pattern_;
  Formula body_;
  Nat var_;
  Formula replacement_;
  std::function<ProofTree(const ClosedTerm&)> partner_;
  Nat deg_star_;
  Ordinal ht_w_;

  Formula fs(const Formula& f, const SubstIndicator& s) const {
    return formula_sub(f, pattern_, replacement_, s);
  }

  static const SubstIndicator& want_pair(const SubstIndicator& s, const char* rule) {
    if (!s.is_pair()) {
      throw PreconditionError(std::string(rule) + ": indicator does not fit the endsequent");
    }
    return s;
  }

  bool principal_match(const Formula& a, Nat var, const SubstIndicator& flag) const {
    return !flag.is_pair() && flag.flag() && Formula::neg(Formula::univ(var, a)) == pattern_;
  }

  // The cut that replaces a matched quantification with witness w whose
  // (transformed) premise proves ~(e[n/w]) or ~(e[n/w]) \/ d.
  ProofTree cut_at_site(const Term& witness, ProofTree premise, bool has_side) const {
    ClosedTerm w{witness};
    ProofTree partner = partner_(w);
    if (has_side) return mk::cut_cad(std::move(partner), std::move(premise));
    return mk::cut_ca(std::move(partner), std::move(premise));
  }

  ProofTree visit(const ProofTree&, const PtNode& n, const SubstIndicator& s) const {
    if (!s.is_pair() && s.flag() && n.formula == pattern_) {
      throw std::logic_error("quantified-cut substitution reached an axiom leaf");
    }
    return pt::node(n.formula);
  }

  ProofTree visit(const ProofTree&, const PtDegUp& n, const SubstIndicator& s) const {
    ProofTree q = apply(n.child, s);
    if (ptree_deg(q) < n.degree) return pt::deg_up(n.degree, std::move(q));
    return q;
  }

  ProofTree visit(const ProofTree&, const PtOrdUp& n, const SubstIndicator& s) const {
    ProofTree q = apply(n.child, s);
    if (lt(ptree_ord(q), n.height)) return pt::ord_up(n.height, std::move(q));
    return q;
  }

  ProofTree visit(const ProofTree&, const PtExchangeAB& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "exchange_ab");
    return mk::exchange_ab(apply(n.child, SubstIndicator::pair(s.right(), s.left())));
  }

  ProofTree visit(const ProofTree&, const PtExchangeCAB& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "exchange_cab");
    const SubstIndicator& scb = want_pair(s.left(), "exchange_cab");
    return mk::exchange_cab(apply(
        n.child, SubstIndicator::pair(SubstIndicator::pair(scb.left(), s.right()), scb.right())));
  }

  ProofTree visit(const ProofTree&, const PtExchangeABD& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "exchange_abd");
    const SubstIndicator& sba = want_pair(s.left(), "exchange_abd");
    return mk::exchange_abd(apply(
        n.child, SubstIndicator::pair(SubstIndicator::pair(sba.right(), sba.left()), s.right())));
  }

  ProofTree visit(const ProofTree&, const PtExchangeCABD& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "exchange_cabd");
    const SubstIndicator& scba = want_pair(s.left(), "exchange_cabd");
    const SubstIndicator& scb = want_pair(scba.left(), "exchange_cabd");
    return mk::exchange_cabd(apply(
        n.child,
        SubstIndicator::pair(
            SubstIndicator::pair(SubstIndicator::pair(scb.left(), scba.right()), scb.right()),
            s.right())));
  }

  ProofTree visit(const ProofTree&, const PtContractionA& n, const SubstIndicator& s) const {
    return mk::contraction_a(apply(n.child, SubstIndicator::pair(s, s)));
  }

  ProofTree visit(const ProofTree&, const PtContractionAD& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "contraction_ad");
    return mk::contraction_ad(apply(
        n.child, SubstIndicator::pair(SubstIndicator::pair(s.left(), s.left()), s.right())));
  }

  ProofTree visit(const ProofTree&, const PtWeakeningAD& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "weakening_ad");
    return mk::weakening_ad(fs(n.a, s.left()), apply(n.child, s.right()));
  }

  ProofTree visit(const ProofTree& p, const PtDemorganAB&, const SubstIndicator&) const {
    // Bare conclusion ~(a \/ b) can never be the pattern ~(forall ...).
    return p;
  }

  ProofTree visit(const ProofTree&, const PtDemorganABD& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "demorgan_abd");
    const SubstIndicator& sd = s.right();
    return mk::demorgan_abd(
        apply(n.left, SubstIndicator::pair(non_target(Formula::neg(n.a)), sd)),
        apply(n.right, SubstIndicator::pair(non_target(Formula::neg(n.b)), sd)));
  }

  ProofTree visit(const ProofTree& p, const PtNegationA&, const SubstIndicator&) const {
    return p;
  }

  ProofTree visit(const ProofTree&, const PtNegationAD& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "negation_ad");
    return mk::negation_ad(
        apply(n.child, SubstIndicator::pair(non_target(n.a), s.right())));
  }

  ProofTree visit(const ProofTree& p, const PtQuantificationA& n,
                  const SubstIndicator& s) const {
    if (principal_match(n.a, n.var, s)) {
      // Premise ~(e[n/w]) is unflagged; cut it against the partner.
      return cut_at_site(n.witness, n.child, /*has_side=*/false);
    }
    return p;
  }

  ProofTree visit(const ProofTree&, const PtQuantificationAD& n,
                  const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "quantification_ad");
    const SubstIndicator& sd = s.right();
    Formula premise_left = Formula::neg(substitute(n.a, n.var, n.witness));
    SubstIndicator premise_ind = SubstIndicator::pair(non_target(premise_left), sd);
    if (principal_match(n.a, n.var, s.left())) {
      ProofTree premise = apply(n.child, premise_ind);
      return cut_at_site(n.witness, std::move(premise), /*has_side=*/true);
    }
    return mk::quantification_ad(n.a, n.var, ClosedTerm(n.witness),
                                 apply(n.child, premise_ind));
  }

  ProofTree visit(const ProofTree& p, const PtOmegaA&, const SubstIndicator&) const {
    // Conclusion forall ... never equals the negated pattern.
    return p;
  }

  ProofTree visit(const ProofTree&, const PtOmegaAD& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "w_rule_ad");
    const SubstIndicator& sd = s.right();
    SubstIndicator premise_ind = SubstIndicator::pair(non_target(n.a), sd);
    QuantCutEngine self = *this;
    Nat deg_pad = std::max(n.deg, deg_star_);
    Ordinal ht_pad = add(ht_w_, n.ht);
    OmegaGen gen = n.gen.map([self, premise_ind, deg_pad, ht_pad](const ProofTree& q) {
      return mk::pad_height_to(mk::pad_degree_to(self.apply(q, premise_ind), deg_pad), ht_pad);
    });
    return pt::w_rule_ad(n.a, fs(n.d, sd), n.var, deg_pad, ht_pad, std::move(gen));
  }

  ProofTree visit(const ProofTree&, const PtCutCA& n, const SubstIndicator& s) const {
    return mk::cut_ca(apply(n.left, SubstIndicator::pair(s, non_target(n.a))),
                      apply(n.right, non_target(Formula::neg(n.a))));
  }

  ProofTree visit(const ProofTree&, const PtCutAD& n, const SubstIndicator& s) const {
    return mk::cut_ad(apply(n.left, non_target(n.a)),
                      apply(n.right, SubstIndicator::pair(non_target(Formula::neg(n.a)), s)));
  }

  ProofTree visit(const ProofTree&, const PtCutCAD& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "cut_cad");
    return mk::cut_cad(
        apply(n.left, SubstIndicator::pair(s.left(), non_target(n.a))),
        apply(n.right, SubstIndicator::pair(non_target(Formula::neg(n.a)), s.right())));
  }
};

struct CutParts {
  Formula cut_formula;
  std::optional<Formula> c;
  std::optional<Formula> d;
  ProofTree left, right;
  Nat deg1, deg2;
  Ordinal ht1, ht2;
};

std::optional<CutParts> cut_parts(const ProofTree& p) {
  if (const auto* n = std::get_if<PtCutCA>(&p.node())) {
    return CutParts{n->a, n->c, std::nullopt, n->left, n->right, n->deg1, n->deg2, n->ht1, n->ht2};
  }
  if (const auto* n = std::get_if<PtCutAD>(&p.node())) {
    return CutParts{n->a, std::nullopt, n->d, n->left, n->right, n->deg1, n->deg2, n->ht1, n->ht2};
  }
  if (const auto* n = std::get_if<PtCutCAD>(&p.node())) {
    return CutParts{n->a, n->c, n->d, n->left, n->right, n->deg1, n->deg2, n->ht1, n->ht2};
  }
  return std::nullopt;
}

// Common quantified-cut rewrite: premises already chosen (possibly reduced).
ProofTree quantified_cut(const CutParts& cut) {
  const FmUniv* u = as_univ(cut.cut_formula);
  if (!u) throw PreconditionError("quantified_cut: cut formula is not universal");
  Formula pattern = Formula::neg(cut.cut_formula);
  Nat deg_w = ptree_deg(cut.left);
  ProofTree left = cut.left;
  Formula body = u->body;
  Nat var = u->index;

  std::function<ProofTree(const ClosedTerm&)> partner;
  Ordinal ht_w;
  Formula replacement = cut.c ? *cut.c : *cut.d;
  if (cut.c) {
    SubstIndicator left_ind = SubstIndicator::pair(non_target(*cut.c), SubstIndicator::flag1());
    Formula univf = cut.cut_formula;
    partner = [left, univf, left_ind](const ClosedTerm& t) {
      return invert_omega(left, univf, left_ind, t);
    };
    ht_w = ptree_ord(cut.left);
  } else {
    // cut_ad: weaken the inverted premise by d so a cut_cad shape exists.
    Formula univf = cut.cut_formula;
    Formula side = *cut.d;
    partner = [left, univf, side](const ClosedTerm& t) {
      return mk::weakening_ad(side, invert_omega(left, univf, SubstIndicator::flag1(), t));
    };
    ht_w = succ(ptree_ord(cut.left));
  }

  QuantCutEngine engine(std::move(pattern), body, var, std::move(replacement), std::move(partner),
                        deg_w, std::move(ht_w));
  SubstIndicator s = cut.d ? SubstIndicator::pair(SubstIndicator::flag1(), non_target(*cut.d))
                           : SubstIndicator::flag1();
  ProofTree result = engine.apply(cut.right, s);
  if (!cut.c) {
    // Endsequent d \/ d; one contraction recovers d.
    result = mk::contraction_a(std::move(result));
  }
  return result;
}

}  // namespace

ProofTree godel_transform(const ProofTree& p) {
  std::optional<CutParts> cut = cut_parts(p);
  if (!cut) throw PreconditionError("godel_transform: root is not a cut");
  if (classify_cut_formula(cut->cut_formula) != CutCase::Quantified) {
    throw PreconditionError("godel_transform: cut formula " + to_text(cut->cut_formula) +
                            " is not universally quantified");
  }
  return quantified_cut(*cut);
}

// ---------------------------------------------------------------------------
// One-degree reduction

namespace {

using Reducer = std::function<ProofTree(const ProofTree&)>;

class ReduceRun {
 public:
  ReduceRun(Nat d, Ordinal alpha, OrdRecurseFn<Reducer> recurse)
      : d_(d), alpha_(std::move(alpha)), recurse_(std::move(recurse)) {}

  // Premise with strictly smaller height: goes through the transfinite guard.
  ProofTree smaller(const ProofTree& q) const { return recurse_(ptree_ord(q))(q); }

  ProofTree reduce(const ProofTree& p) const {
    if (ptree_deg(p) <= d_) {
      return mk::pad_height_to(p, exp2(ptree_ord(p)));
    }
    Ordinal bound = exp2(alpha_);
    ProofTree out = std::visit(
        overloaded{
            [&](const PtNode&) -> ProofTree {
              throw std::logic_error("axiom leaf with positive degree");
            },
            [&](const PtDegUp& n) -> ProofTree {
              // The wrapped tree is already at the target degree.
              return mk::pad_height_to(n.child, exp2(ptree_ord(n.child)));
            },
            [&](const PtOrdUp& n) -> ProofTree { return smaller(n.child); },
            [&](const PtExchangeAB& n) { return mk::exchange_ab(reduce(n.child)); },
            [&](const PtExchangeCAB& n) { return mk::exchange_cab(reduce(n.child)); },
            [&](const PtExchangeABD& n) { return mk::exchange_abd(reduce(n.child)); },
            [&](const PtExchangeCABD& n) { return mk::exchange_cabd(reduce(n.child)); },
            [&](const PtContractionA& n) { return mk::contraction_a(reduce(n.child)); },
            [&](const PtContractionAD& n) { return mk::contraction_ad(reduce(n.child)); },
            [&](const PtWeakeningAD& n) { return mk::weakening_ad(n.a, smaller(n.child)); },
            [&](const PtDemorganAB& n) {
              return mk::demorgan_ab(smaller(n.left), smaller(n.right));
            },
            [&](const PtDemorganABD& n) {
              return mk::demorgan_abd(smaller(n.left), smaller(n.right));
            },
            [&](const PtNegationA& n) { return mk::negation_a(smaller(n.child)); },
            [&](const PtNegationAD& n) { return mk::negation_ad(smaller(n.child)); },
            [&](const PtQuantificationA& n) {
              return mk::quantification_a(n.a, n.var, ClosedTerm(n.witness), smaller(n.child));
            },
            [&](const PtQuantificationAD& n) {
              return mk::quantification_ad(n.a, n.var, ClosedTerm(n.witness), smaller(n.child));
            },
            [&](const PtOmegaA& n) { return reduce_omega<PtOmegaA>(n); },
            [&](const PtOmegaAD& n) { return reduce_omega<PtOmegaAD>(n); },
            [&](const PtCutCA& n) -> ProofTree { return reduce_cut(cut_parts_of(n)); },
            [&](const PtCutAD& n) -> ProofTree { return reduce_cut(cut_parts_of(n)); },
            [&](const PtCutCAD& n) -> ProofTree { return reduce_cut(cut_parts_of(n)); },
        },
        p.node());
    return mk::pad_height_to(std::move(out), bound);
  }

 private:
  Nat d_;
  Ordinal alpha_;
  OrdRecurseFn<Reducer> recurse_;

  static CutParts cut_parts_of(const PtCutCA& n) {
    return CutParts{n.a, n.c, std::nullopt, n.left, n.right, n.deg1, n.deg2, n.ht1, n.ht2};
  }
  static CutParts cut_parts_of(const PtCutAD& n) {
    return CutParts{n.a, std::nullopt, n.d, n.left, n.right, n.deg1, n.deg2, n.ht1, n.ht2};
  }
  static CutParts cut_parts_of(const PtCutCAD& n) {
    return CutParts{n.a, n.c, n.d, n.left, n.right, n.deg1, n.deg2, n.ht1, n.ht2};
  }

  template <class Omega>
  ProofTree reduce_omega(const Omega& n) const {
    // Reaching this case means the node degree is exactly d + 1, and omega
    // premises share the conclusion degree, so every premise needs the pass.
    OrdRecurseFn<Reducer> recurse = recurse_;
    Ordinal ht = n.ht;
    Nat target = d_;
    OmegaGen gen = n.gen.map([recurse, ht, target](const ProofTree& q) {
      return mk::pad_degree_to(recurse(ht)(q), target);
    });
    if constexpr (std::is_same_v<Omega, PtOmegaA>) {
      return pt::w_rule_a(n.a, n.var, d_, exp2(n.ht), std::move(gen));
    } else {
      return pt::w_rule_ad(n.a, n.d, n.var, d_, exp2(n.ht), std::move(gen));
    }
  }

  ProofTree premise_pass(const ProofTree& q, Nat stored_deg) const {
    // Reduce only premises that still exceed the target degree.
    if (stored_deg == d_ + 1) return smaller(q);
    return q;
  }

  ProofTree reduce_cut(CutParts cut) const {
    ProofTree q1 = premise_pass(cut.left, cut.deg1);
    ProofTree q2 = premise_pass(cut.right, cut.deg2);
    Nat nc = num_conn(Formula::neg(cut.cut_formula));
    if (nc <= d_) {
      if (cut.c && cut.d) return mk::cut_cad(std::move(q1), std::move(q2));
      if (cut.c) return mk::cut_ca(std::move(q1), std::move(q2));
      return mk::cut_ad(std::move(q1), std::move(q2));
    }
    CutParts reduced{cut.cut_formula, cut.c,   cut.d,        std::move(q1),
                     std::move(q2),   cut.deg1, cut.deg2,    cut.ht1,
                     cut.ht2};
    reduced.deg1 = ptree_deg(reduced.left);
    reduced.deg2 = ptree_deg(reduced.right);
    reduced.ht1 = ptree_ord(reduced.left);
    reduced.ht2 = ptree_ord(reduced.right);
    switch (classify_cut_formula(cut.cut_formula)) {
      case CutCase::Atomic:
        return atomic_cut(reduced);
      case CutCase::Negated:
        return negated_cut(reduced);
      case CutCase::Disjunctive:
        return disjunctive_cut(reduced);
      case CutCase::Quantified:
        return quantified_cut(reduced);
    }
    throw std::logic_error("unreachable cut case");
  }

  // Exactly one of A, ~A is an axiom; the other side's occurrence was
  // introduced by weakening and is rewritten to the needed side formula.
  ProofTree atomic_cut(const CutParts& cut) const {
    const Formula& a = cut.cut_formula;
    Correctness c = correct_atom(as_atom(a)->atom);
    if (c == Correctness::Undetermined) {
      throw std::logic_error("open cut formula in a well-formed tree");
    }
    if (c == Correctness::Incorrect) {
      // ~A is the axiom; A entered the left premise by weakening.
      if (cut.c && cut.d) {
        SubstIndicator s = SubstIndicator::pair(non_target(*cut.c), SubstIndicator::flag1());
        return weakening_sub(cut.left, a, *cut.d, s);
      }
      if (cut.c) {
        SubstIndicator s = SubstIndicator::pair(non_target(*cut.c), SubstIndicator::flag1());
        return mk::contraction_a(weakening_sub(cut.left, a, *cut.c, s));
      }
      return weakening_sub(cut.left, a, *cut.d, SubstIndicator::flag1());
    }
    // A is the axiom; ~A entered the right premise by weakening.
    Formula na = Formula::neg(a);
    if (cut.c && cut.d) {
      SubstIndicator s = SubstIndicator::pair(SubstIndicator::flag1(), non_target(*cut.d));
      return weakening_sub(cut.right, na, *cut.c, s);
    }
    if (cut.c) {
      return weakening_sub(cut.right, na, *cut.c, SubstIndicator::flag1());
    }
    SubstIndicator s = SubstIndicator::pair(SubstIndicator::flag1(), non_target(*cut.d));
    return mk::contraction_a(weakening_sub(cut.right, na, *cut.d, s));
  }

  ProofTree negated_cut(const CutParts& cut) const {
    Formula e = as_neg(cut.cut_formula)->body;
    if (cut.c && cut.d) {
      SubstIndicator s = SubstIndicator::pair(SubstIndicator::flag1(), non_target(*cut.d));
      ProofTree t2 = mk::exchange_ab(invert_dubneg(cut.right, e, s));  // d \/ e
      ProofTree x1 = mk::exchange_ab(cut.left);                       // ~e \/ c
      return mk::exchange_ab(mk::cut_cad(std::move(t2), std::move(x1)));
    }
    if (cut.c) {
      ProofTree t2 = invert_dubneg(cut.right, e, SubstIndicator::flag1());  // e
      ProofTree x1 = mk::exchange_ab(cut.left);                             // ~e \/ c
      return mk::cut_ad(std::move(t2), std::move(x1));
    }
    SubstIndicator s = SubstIndicator::pair(SubstIndicator::flag1(), non_target(*cut.d));
    ProofTree t2 = mk::exchange_ab(invert_dubneg(cut.right, e, s));  // d \/ e
    return mk::cut_ca(std::move(t2), cut.left);
  }

  ProofTree disjunctive_cut(const CutParts& cut) const {
    const Formula& a = cut.cut_formula;
    if (cut.c && cut.d) {
      SubstIndicator s = SubstIndicator::pair(SubstIndicator::flag1(), non_target(*cut.d));
      ProofTree t2a = invert_demorgan_1(cut.right, a, s);  // ~e1 \/ d
      ProofTree t2b = invert_demorgan_2(cut.right, a, s);  // ~e2 \/ d
      ProofTree x1 = assoc_right(cut.left);                // (c \/ e1) \/ e2
      ProofTree cut1 = mk::cut_cad(std::move(x1), std::move(t2b));   // (c \/ e1) \/ d
      ProofTree x2 = mk::exchange_cab(std::move(cut1));              // (c \/ d) \/ e1
      ProofTree cut2 = mk::cut_cad(std::move(x2), std::move(t2a));   // (c \/ d) \/ d
      ProofTree merged = mk::exchange_ab(assoc_left(std::move(cut2)));  // (d \/ d) \/ c
      return mk::exchange_ab(mk::contraction_ad(std::move(merged)));    // c \/ d
    }
    if (cut.c) {
      ProofTree t2a = invert_demorgan_1(cut.right, a, SubstIndicator::flag1());  // ~e1
      ProofTree t2b = invert_demorgan_2(cut.right, a, SubstIndicator::flag1());  // ~e2
      ProofTree x1 = assoc_right(cut.left);                                      // (c \/ e1) \/ e2
      ProofTree cut1 = mk::cut_ca(std::move(x1), std::move(t2b));  // c \/ e1
      return mk::cut_ca(std::move(cut1), std::move(t2a));          // c
    }
    SubstIndicator s = SubstIndicator::pair(SubstIndicator::flag1(), non_target(*cut.d));
    ProofTree t2a = invert_demorgan_1(cut.right, a, s);  // ~e1 \/ d
    ProofTree t2b = invert_demorgan_2(cut.right, a, s);  // ~e2 \/ d
    ProofTree x1 = mk::exchange_ab(cut.left);            // e2 \/ e1
    ProofTree cut1 = mk::cut_cad(std::move(x1), std::move(t2a));  // e2 \/ d
    ProofTree x2 = mk::exchange_ab(std::move(cut1));              // d \/ e2
    ProofTree cut2 = mk::cut_cad(std::move(x2), std::move(t2b));  // d \/ d
    return mk::contraction_a(std::move(cut2));                    // d
  }
};

}  // namespace

ProofTree reduce_once(const ProofTree& p) {
  Nat deg = ptree_deg(p);
  if (deg == 0) {
    throw PreconditionError("reduce_once: degree is already 0");
  }
  Ordinal alpha = ptree_ord(p);
  if (!is_nf(alpha)) {
    throw PreconditionError("reduce_once: height " + to_text(alpha) + " is not in normal form");
  }
  Nat d = deg - 1;
  std::function<Reducer(const OrdRecurseFn<Reducer>&, const Ordinal&)> step =
      [d](const OrdRecurseFn<Reducer>& self, const Ordinal& measure) -> Reducer {
    return [d, self, measure](const ProofTree& q) {
      if (ptree_ord(q) != measure) {
        throw std::logic_error("height measure does not match the tree being reduced");
      }
      ReduceRun run(d, measure, self);
      return run.reduce(q);
    };
  };
  ProofTree out = transfinite_recurse<Reducer>(alpha, step)(p);
  return mk::pad_degree_to(std::move(out), d);
}

ProofTree cut_elim(const ProofTree& p) {
  ProofTree out = p;
  while (ptree_deg(out) > 0) {
    out = reduce_once(out);
  }
  return out;
}

ProofTree derive_danger_from_contradiction(const ProofTree& proof_a,
                                           const ProofTree& proof_not_a) {
  Formula a = ptree_formula(proof_a);
  if (ptree_formula(proof_not_a) != Formula::neg(a)) {
    throw PreconditionError("derive_danger_from_contradiction: endsequents are not A and ~A");
  }
  ProofTree weakened = mk::exchange_ab(mk::weakening_ad(danger_formula(), proof_not_a));
  return mk::cut_ad(proof_a, std::move(weakened));
}

}  // namespace paw
