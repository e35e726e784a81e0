#include "paw/build.hpp"

namespace paw::mk {

namespace {

[[noreturn]] void shape_error(const char* rule, const ProofTree& p) {
  throw PreconditionError(std::string(rule) + ": premise " + to_text(ptree_formula(p)) +
                          " has the wrong shape");
}

const FmLor& lor_of(const char* rule, const ProofTree& p, const Formula& f) {
  const FmLor* l = as_lor(f);
  if (!l) shape_error(rule, p);
  return *l;
}

const FmNeg& neg_of(const char* rule, const ProofTree& p, const Formula& f) {
  const FmNeg* n = as_neg(f);
  if (!n) shape_error(rule, p);
  return *n;
}

}  // namespace

ProofTree exchange_ab(ProofTree p) {
  Formula f = ptree_formula(p);
  const FmLor& l = lor_of("exchange_ab", p, f);
  Decoration d = decoration(p);
  return pt::exchange_ab(l.left, l.right, d.degree, d.height, std::move(p));
}

ProofTree exchange_cab(ProofTree p) {
  Formula f = ptree_formula(p);
  const FmLor& outer = lor_of("exchange_cab", p, f);
  const FmLor& inner = lor_of("exchange_cab", p, outer.left);
  Decoration d = decoration(p);
  return pt::exchange_cab(inner.left, inner.right, outer.right, d.degree, d.height, std::move(p));
}

ProofTree exchange_abd(ProofTree p) {
  Formula f = ptree_formula(p);
  const FmLor& outer = lor_of("exchange_abd", p, f);
  const FmLor& inner = lor_of("exchange_abd", p, outer.left);
  Decoration d = decoration(p);
  return pt::exchange_abd(inner.left, inner.right, outer.right, d.degree, d.height, std::move(p));
}

ProofTree exchange_cabd(ProofTree p) {
  Formula f = ptree_formula(p);
  const FmLor& outer = lor_of("exchange_cabd", p, f);
  const FmLor& mid = lor_of("exchange_cabd", p, outer.left);
  const FmLor& inner = lor_of("exchange_cabd", p, mid.left);
  Decoration d = decoration(p);
  return pt::exchange_cabd(inner.left, inner.right, mid.right, outer.right, d.degree, d.height,
                           std::move(p));
}

ProofTree contraction_a(ProofTree p) {
  Formula f = ptree_formula(p);
  const FmLor& l = lor_of("contraction_a", p, f);
  if (l.left != l.right) shape_error("contraction_a", p);
  Decoration d = decoration(p);
  return pt::contraction_a(l.left, d.degree, d.height, std::move(p));
}

ProofTree contraction_ad(ProofTree p) {
  Formula f = ptree_formula(p);
  const FmLor& outer = lor_of("contraction_ad", p, f);
  const FmLor& inner = lor_of("contraction_ad", p, outer.left);
  if (inner.left != inner.right) shape_error("contraction_ad", p);
  Decoration d = decoration(p);
  return pt::contraction_ad(inner.left, outer.right, d.degree, d.height, std::move(p));
}

ProofTree weakening_ad(Formula a, ProofTree p) {
  if (!closed(a)) {
    throw PreconditionError("weakening_ad: weakened formula " + to_text(a) + " not closed");
  }
  Formula f = ptree_formula(p);
  Decoration d = decoration(p);
  return pt::weakening_ad(std::move(a), std::move(f), d.degree, d.height, std::move(p));
}

ProofTree negation_a(ProofTree p) {
  Formula f = ptree_formula(p);
  Decoration d = decoration(p);
  return pt::negation_a(std::move(f), d.degree, d.height, std::move(p));
}

ProofTree negation_ad(ProofTree p) {
  Formula f = ptree_formula(p);
  const FmLor& l = lor_of("negation_ad", p, f);
  Decoration d = decoration(p);
  return pt::negation_ad(l.left, l.right, d.degree, d.height, std::move(p));
}

ProofTree quantification_a(Formula a, Nat var, const ClosedTerm& witness, ProofTree p) {
  Formula f = ptree_formula(p);
  const FmNeg& n = neg_of("quantification_a", p, f);
  if (n.body != substitute(a, var, witness.term())) shape_error("quantification_a", p);
  Decoration d = decoration(p);
  return pt::quantification_a(std::move(a), var, witness.term(), d.degree, d.height,
                              std::move(p));
}

ProofTree quantification_ad(Formula a, Nat var, const ClosedTerm& witness, ProofTree p) {
  Formula f = ptree_formula(p);
  const FmLor& l = lor_of("quantification_ad", p, f);
  const FmNeg& n = neg_of("quantification_ad", p, l.left);
  if (n.body != substitute(a, var, witness.term())) shape_error("quantification_ad", p);
  Decoration d = decoration(p);
  return pt::quantification_ad(std::move(a), l.right, var, witness.term(), d.degree, d.height,
                               std::move(p));
}

ProofTree demorgan_ab(ProofTree left, ProofTree right) {
  Formula fl = ptree_formula(left);
  Formula fr = ptree_formula(right);
  const FmNeg& nl = neg_of("demorgan_ab", left, fl);
  const FmNeg& nr = neg_of("demorgan_ab", right, fr);
  Decoration dl = decoration(left), dr = decoration(right);
  return pt::demorgan_ab(nl.body, nr.body, dl.degree, dr.degree, dl.height, dr.height,
                         std::move(left), std::move(right));
}

ProofTree demorgan_abd(ProofTree left, ProofTree right) {
  Formula fl = ptree_formula(left);
  Formula fr = ptree_formula(right);
  const FmLor& ll = lor_of("demorgan_abd", left, fl);
  const FmLor& lr = lor_of("demorgan_abd", right, fr);
  if (ll.right != lr.right) shape_error("demorgan_abd", right);
  const FmNeg& nl = neg_of("demorgan_abd", left, ll.left);
  const FmNeg& nr = neg_of("demorgan_abd", right, lr.left);
  Decoration dl = decoration(left), dr = decoration(right);
  return pt::demorgan_abd(nl.body, nr.body, ll.right, dl.degree, dr.degree, dl.height, dr.height,
                          std::move(left), std::move(right));
}

ProofTree cut_ca(ProofTree left, ProofTree right) {
  Formula fl = ptree_formula(left);
  Formula fr = ptree_formula(right);
  const FmLor& l = lor_of("cut_ca", left, fl);
  const FmNeg& n = neg_of("cut_ca", right, fr);
  if (l.right != n.body) shape_error("cut_ca", right);
  Decoration dl = decoration(left), dr = decoration(right);
  return pt::cut_ca(l.left, l.right, dl.degree, dr.degree, dl.height, dr.height, std::move(left),
                    std::move(right));
}

ProofTree cut_ad(ProofTree left, ProofTree right) {
  Formula fl = ptree_formula(left);
  Formula fr = ptree_formula(right);
  const FmLor& l = lor_of("cut_ad", right, fr);
  const FmNeg& n = neg_of("cut_ad", right, l.left);
  if (n.body != fl) shape_error("cut_ad", left);
  Decoration dl = decoration(left), dr = decoration(right);
  return pt::cut_ad(fl, l.right, dl.degree, dr.degree, dl.height, dr.height, std::move(left),
                    std::move(right));
}

ProofTree cut_cad(ProofTree left, ProofTree right) {
  Formula fl = ptree_formula(left);
  Formula fr = ptree_formula(right);
  const FmLor& l = lor_of("cut_cad", left, fl);
  const FmLor& r = lor_of("cut_cad", right, fr);
  const FmNeg& n = neg_of("cut_cad", right, r.left);
  if (l.right != n.body) shape_error("cut_cad", right);
  Decoration dl = decoration(left), dr = decoration(right);
  return pt::cut_cad(l.left, l.right, r.right, dl.degree, dr.degree, dl.height, dr.height,
                     std::move(left), std::move(right));
}

ProofTree w_rule_a(Formula a, Nat var, Nat deg, Ordinal ht, OmegaGen gen) {
  return pt::w_rule_a(std::move(a), var, deg, std::move(ht), std::move(gen));
}

ProofTree w_rule_ad(Formula a, Formula d, Nat var, Nat deg, Ordinal ht, OmegaGen gen) {
  return pt::w_rule_ad(std::move(a), std::move(d), var, deg, std::move(ht), std::move(gen));
}

ProofTree pad_height_to(ProofTree p, const Ordinal& target) {
  Ordinal cur = ptree_ord(p);
  if (cur == target) return p;
  if (!lt(cur, target)) {
    throw PreconditionError("pad_height_to: height " + to_text(cur) + " already exceeds " +
                            to_text(target));
  }
  return pt::ord_up(target, std::move(p));
}

ProofTree pad_degree_to(ProofTree p, Nat target) {
  Nat cur = ptree_deg(p);
  if (cur == target) return p;
  if (cur > target) {
    throw PreconditionError("pad_degree_to: degree " + std::to_string(cur) + " already exceeds " +
                            std::to_string(target));
  }
  return pt::deg_up(target, std::move(p));
}

}  // namespace paw::mk
