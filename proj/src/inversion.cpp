#include "paw/inversion.hpp"

#include "paw/build.hpp"

namespace paw {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

// ---------------------------------------------------------------------------
// SubstIndicator

SubstIndicator SubstIndicator::flag0() { return SubstIndicator(false, nullptr); }
SubstIndicator SubstIndicator::flag1() { return SubstIndicator(true, nullptr); }
SubstIndicator SubstIndicator::pair(SubstIndicator left, SubstIndicator right) {
  auto node = std::make_shared<const std::pair<SubstIndicator, SubstIndicator>>(std::move(left),
                                                                                std::move(right));
  return SubstIndicator(false, std::move(node));
}

bool SubstIndicator::flag() const {
  if (is_pair()) throw PreconditionError("SubstIndicator::flag on a pair");
  return flag_;
}

const SubstIndicator& SubstIndicator::left() const {
  if (!is_pair()) throw PreconditionError("SubstIndicator::left on a flag");
  return node_->first;
}

const SubstIndicator& SubstIndicator::right() const {
  if (!is_pair()) throw PreconditionError("SubstIndicator::right on a flag");
  return node_->second;
}

bool SubstIndicator::all_zero() const {
  if (!is_pair()) return !flag_;
  return node_->first.all_zero() && node_->second.all_zero();
}

bool operator==(const SubstIndicator& a, const SubstIndicator& b) {
  if (a.is_pair() != b.is_pair()) return false;
  if (!a.is_pair()) return a.flag() == b.flag();
  return a.left() == b.left() && a.right() == b.right();
}

bool fits(const Formula& a, const SubstIndicator& s) {
  if (const FmLor* l = as_lor(a)) {
    return s.is_pair() && fits(l->left, s.left()) && fits(l->right, s.right());
  }
  return !s.is_pair();
}

SubstIndicator non_target(const Formula& a) {
  if (const FmLor* l = as_lor(a)) {
    return SubstIndicator::pair(non_target(l->left), non_target(l->right));
  }
  return SubstIndicator::flag0();
}

SubstIndicator target(const Formula& a) {
  if (const FmLor* l = as_lor(a)) {
    return SubstIndicator::pair(target(l->left), target(l->right));
  }
  return SubstIndicator::flag1();
}

std::string to_text(const SubstIndicator& s) {
  if (!s.is_pair()) return s.flag() ? "1" : "0";
  return "(" + to_text(s.left()) + "," + to_text(s.right()) + ")";
}

namespace {

SubstIndicator parse_ind(std::string_view text, std::size_t& pos) {
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(msg, pos, 1, pos + 1);
  };
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos >= text.size()) fail("expected an indicator");
  char c = text[pos];
  if (c == '0') {
    ++pos;
    return SubstIndicator::flag0();
  }
  if (c == '1') {
    ++pos;
    return SubstIndicator::flag1();
  }
  if (c == '(') {
    ++pos;
    SubstIndicator left = parse_ind(text, pos);
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size() || text[pos] != ',') fail("expected ','");
    ++pos;
    SubstIndicator right = parse_ind(text, pos);
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
    ++pos;
    return SubstIndicator::pair(std::move(left), std::move(right));
  }
  fail("expected '0', '1' or '('");
  throw std::logic_error("unreachable");
}

}  // namespace

SubstIndicator parse_indicator(std::string_view text) {
  std::size_t pos = 0;
  SubstIndicator s = parse_ind(text, pos);
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos != text.size()) throw ParseError("trailing input after indicator", pos, 1, pos + 1);
  return s;
}

Formula formula_sub(const Formula& a, const Formula& from, const Formula& to,
                    const SubstIndicator& s) {
  if (const FmLor* l = as_lor(a)) {
    if (!s.is_pair()) throw PreconditionError("formula_sub: indicator does not fit " + to_text(a));
    return Formula::lor(formula_sub(l->left, from, to, s.left()),
                        formula_sub(l->right, from, to, s.right()));
  }
  if (s.is_pair()) throw PreconditionError("formula_sub: indicator does not fit " + to_text(a));
  if (s.flag() && a == from) return to;
  return a;
}

// ---------------------------------------------------------------------------
// The shared proof-tree substitution engine

namespace {

enum class SubKind { DubNeg, Demorgan1, Demorgan2, Omega, WeakeningOnly };

struct Sub {
  SubKind kind;
  Formula pattern;      // the flagged component to rewrite
  Formula replacement;  // what it becomes
  // Omega only: the instantiating term.
  std::optional<ClosedTerm> term;

  Formula sub(const Formula& f, const SubstIndicator& s) const {
    return formula_sub(f, pattern, replacement, s);
  }
};

class Engine {
 public:
  explicit Engine(Sub sub) : sub_(std::move(sub)) {}

  ProofTree apply(const ProofTree& p, const SubstIndicator& s) const {
    if (s.all_zero()) return p;
    return std::visit([&](const auto& n) { return visit(p, n, s); }, p.node());
  }

 private:
  Sub sub_;

  Formula fs(const Formula& f, const SubstIndicator& s) const { return sub_.sub(f, s); }

  static const SubstIndicator& want_pair(const SubstIndicator& s, const char* rule) {
    if (!s.is_pair()) {
      throw PreconditionError(std::string(rule) + ": indicator does not fit the endsequent");
    }
    return s;
  }

  ProofTree visit(const ProofTree&, const PtNode& n, const SubstIndicator& s) const {
    if (!s.is_pair() && s.flag() && n.formula == sub_.pattern) {
      throw std::logic_error("substitution reached an axiom leaf equal to the pattern");
    }
    return pt::node(n.formula);
  }

  ProofTree visit(const ProofTree&, const PtDegUp& n, const SubstIndicator& s) const {
    return pt::deg_up(n.degree, apply(n.child, s));
  }

  ProofTree visit(const ProofTree&, const PtOrdUp& n, const SubstIndicator& s) const {
    return pt::ord_up(n.height, apply(n.child, s));
  }

  ProofTree visit(const ProofTree&, const PtExchangeAB& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "exchange_ab");
    const SubstIndicator& sb = s.left();
    const SubstIndicator& sa = s.right();
    return pt::exchange_ab(fs(n.a, sa), fs(n.b, sb), n.deg, n.ht,
                           apply(n.child, SubstIndicator::pair(sa, sb)));
  }

  ProofTree visit(const ProofTree&, const PtExchangeCAB& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "exchange_cab");
    const SubstIndicator& scb = want_pair(s.left(), "exchange_cab");
    const SubstIndicator& sc = scb.left();
    const SubstIndicator& sb = scb.right();
    const SubstIndicator& sa = s.right();
    return pt::exchange_cab(
        fs(n.c, sc), fs(n.a, sa), fs(n.b, sb), n.deg, n.ht,
        apply(n.child, SubstIndicator::pair(SubstIndicator::pair(sc, sa), sb)));
  }

  ProofTree visit(const ProofTree&, const PtExchangeABD& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "exchange_abd");
    const SubstIndicator& sba = want_pair(s.left(), "exchange_abd");
    const SubstIndicator& sb = sba.left();
    const SubstIndicator& sa = sba.right();
    const SubstIndicator& sd = s.right();
    return pt::exchange_abd(
        fs(n.a, sa), fs(n.b, sb), fs(n.d, sd), n.deg, n.ht,
        apply(n.child, SubstIndicator::pair(SubstIndicator::pair(sa, sb), sd)));
  }

  ProofTree visit(const ProofTree&, const PtExchangeCABD& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "exchange_cabd");
    const SubstIndicator& scba = want_pair(s.left(), "exchange_cabd");
    const SubstIndicator& scb = want_pair(scba.left(), "exchange_cabd");
    const SubstIndicator& sc = scb.left();
    const SubstIndicator& sb = scb.right();
    const SubstIndicator& sa = scba.right();
    const SubstIndicator& sd = s.right();
    return pt::exchange_cabd(
        fs(n.c, sc), fs(n.a, sa), fs(n.b, sb), fs(n.d, sd), n.deg, n.ht,
        apply(n.child, SubstIndicator::pair(
                           SubstIndicator::pair(SubstIndicator::pair(sc, sa), sb), sd)));
  }

  ProofTree visit(const ProofTree&, const PtContractionA& n, const SubstIndicator& s) const {
    return pt::contraction_a(fs(n.a, s), n.deg, n.ht,
                             apply(n.child, SubstIndicator::pair(s, s)));
  }

  ProofTree visit(const ProofTree&, const PtContractionAD& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "contraction_ad");
    const SubstIndicator& sa = s.left();
    const SubstIndicator& sd = s.right();
    return pt::contraction_ad(
        fs(n.a, sa), fs(n.d, sd), n.deg, n.ht,
        apply(n.child, SubstIndicator::pair(SubstIndicator::pair(sa, sa), sd)));
  }

  ProofTree visit(const ProofTree&, const PtWeakeningAD& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "weakening_ad");
    return pt::weakening_ad(fs(n.a, s.left()), fs(n.d, s.right()), n.deg, n.ht,
                            apply(n.child, s.right()));
  }

  ProofTree visit(const ProofTree& p, const PtDemorganAB& n, const SubstIndicator& s) const {
    if (!s.is_pair() && s.flag() && sub_.kind == SubKind::Demorgan1 &&
        Formula::neg(Formula::lor(n.a, n.b)) == sub_.pattern) {
      return mk::pad_degree_to(
          mk::pad_height_to(n.left, succ(ord_max(n.ht1, n.ht2))), std::max(n.deg1, n.deg2));
    }
    if (!s.is_pair() && s.flag() && sub_.kind == SubKind::Demorgan2 &&
        Formula::neg(Formula::lor(n.a, n.b)) == sub_.pattern) {
      return mk::pad_degree_to(
          mk::pad_height_to(n.right, succ(ord_max(n.ht1, n.ht2))), std::max(n.deg1, n.deg2));
    }
    return p;
  }

  ProofTree visit(const ProofTree&, const PtDemorganABD& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "demorgan_abd");
    const SubstIndicator& sab = s.left();
    const SubstIndicator& sd = s.right();
    bool flagged = !sab.is_pair() && sab.flag();
    bool matches = Formula::neg(Formula::lor(n.a, n.b)) == sub_.pattern;
    if (flagged && matches &&
        (sub_.kind == SubKind::Demorgan1 || sub_.kind == SubKind::Demorgan2)) {
      bool first = sub_.kind == SubKind::Demorgan1;
      const ProofTree& premise = first ? n.left : n.right;
      const Formula& kept = first ? n.a : n.b;
      ProofTree q = apply(premise, SubstIndicator::pair(non_target(Formula::neg(kept)), sd));
      return mk::pad_degree_to(mk::pad_height_to(std::move(q), succ(ord_max(n.ht1, n.ht2))),
                               std::max(n.deg1, n.deg2));
    }
    SubstIndicator left_ind = SubstIndicator::pair(non_target(Formula::neg(n.a)), sd);
    SubstIndicator right_ind = SubstIndicator::pair(non_target(Formula::neg(n.b)), sd);
    return pt::demorgan_abd(n.a, n.b, fs(n.d, sd), n.deg1, n.deg2, n.ht1, n.ht2,
                            apply(n.left, left_ind), apply(n.right, right_ind));
  }

  ProofTree visit(const ProofTree& p, const PtNegationA& n, const SubstIndicator& s) const {
    if (!s.is_pair() && s.flag() && sub_.kind == SubKind::DubNeg &&
        Formula::neg(Formula::neg(n.a)) == sub_.pattern) {
      return pt::ord_up(succ(n.ht), n.child);
    }
    return p;
  }

  ProofTree visit(const ProofTree&, const PtNegationAD& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "negation_ad");
    const SubstIndicator& sa = s.left();
    const SubstIndicator& sd = s.right();
    bool flagged = !sa.is_pair() && sa.flag();
    if (flagged && sub_.kind == SubKind::DubNeg &&
        Formula::neg(Formula::neg(n.a)) == sub_.pattern) {
      ProofTree q = apply(n.child, SubstIndicator::pair(non_target(n.a), sd));
      return pt::ord_up(succ(n.ht), std::move(q));
    }
    return pt::negation_ad(n.a, fs(n.d, sd), n.deg, n.ht,
                           apply(n.child, SubstIndicator::pair(non_target(n.a), sd)));
  }

  ProofTree visit(const ProofTree& p, const PtQuantificationA&, const SubstIndicator&) const {
    // The conclusion ~(forall ...) never equals a pattern of these schemas.
    return p;
  }

  ProofTree visit(const ProofTree&, const PtQuantificationAD& n,
                  const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "quantification_ad");
    const SubstIndicator& sd = s.right();
    Formula premise_left = Formula::neg(substitute(n.a, n.var, n.witness));
    return pt::quantification_ad(
        n.a, fs(n.d, sd), n.var, n.witness, n.deg, n.ht,
        apply(n.child, SubstIndicator::pair(non_target(premise_left), sd)));
  }

  ProofTree visit(const ProofTree& p, const PtOmegaA& n, const SubstIndicator& s) const {
    if (!s.is_pair() && s.flag() && sub_.kind == SubKind::Omega &&
        Formula::univ(n.var, n.a) == sub_.pattern) {
      ProofTree premise = n.gen(*sub_.term);
      return pt::ord_up(succ(n.ht), std::move(premise));
    }
    return p;
  }

  ProofTree visit(const ProofTree&, const PtOmegaAD& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "w_rule_ad");
    const SubstIndicator& sa = s.left();
    const SubstIndicator& sd = s.right();
    bool flagged = !sa.is_pair() && sa.flag();
    SubstIndicator premise_ind = SubstIndicator::pair(non_target(n.a), sd);
    if (flagged && sub_.kind == SubKind::Omega && Formula::univ(n.var, n.a) == sub_.pattern) {
      ProofTree premise = apply(n.gen(*sub_.term), premise_ind);
      return pt::ord_up(succ(n.ht), std::move(premise));
    }
    Engine self = *this;
    OmegaGen gen = n.gen.map(
        [self, premise_ind](const ProofTree& q) { return self.apply(q, premise_ind); });
    return pt::w_rule_ad(n.a, fs(n.d, sd), n.var, n.deg, n.ht, std::move(gen));
  }

  ProofTree visit(const ProofTree&, const PtCutCA& n, const SubstIndicator& s) const {
    return pt::cut_ca(fs(n.c, s), n.a, n.deg1, n.deg2, n.ht1, n.ht2,
                      apply(n.left, SubstIndicator::pair(s, non_target(n.a))),
                      apply(n.right, non_target(Formula::neg(n.a))));
  }

  ProofTree visit(const ProofTree&, const PtCutAD& n, const SubstIndicator& s) const {
    return pt::cut_ad(n.a, fs(n.d, s), n.deg1, n.deg2, n.ht1, n.ht2,
                      apply(n.left, non_target(n.a)),
                      apply(n.right, SubstIndicator::pair(non_target(Formula::neg(n.a)), s)));
  }

  ProofTree visit(const ProofTree&, const PtCutCAD& n, const SubstIndicator& s0) const {
    const SubstIndicator& s = want_pair(s0, "cut_cad");
    const SubstIndicator& sc = s.left();
    const SubstIndicator& sd = s.right();
    return pt::cut_cad(
        fs(n.c, sc), n.a, fs(n.d, sd), n.deg1, n.deg2, n.ht1, n.ht2,
        apply(n.left, SubstIndicator::pair(sc, non_target(n.a))),
        apply(n.right, SubstIndicator::pair(non_target(Formula::neg(n.a)), sd)));
  }
};

ProofTree run_engine(Sub sub, const ProofTree& p, const SubstIndicator& s) {
  if (!fits(ptree_formula(p), s)) {
    throw PreconditionError("indicator " + to_text(s) + " does not fit endsequent " +
                            to_text(ptree_formula(p)));
  }
  Engine engine(std::move(sub));
  return engine.apply(p, s);
}

}  // namespace

ProofTree invert_dubneg(const ProofTree& p, const Formula& e, const SubstIndicator& s) {
  return run_engine(Sub{SubKind::DubNeg, Formula::neg(Formula::neg(e)), e, std::nullopt}, p, s);
}

ProofTree invert_demorgan_1(const ProofTree& p, const Formula& e, const SubstIndicator& s) {
  const FmLor* l = as_lor(e);
  if (!l) throw PreconditionError("invert_demorgan_1: " + to_text(e) + " is not a disjunction");
  return run_engine(
      Sub{SubKind::Demorgan1, Formula::neg(e), Formula::neg(l->left), std::nullopt}, p, s);
}

ProofTree invert_demorgan_2(const ProofTree& p, const Formula& e, const SubstIndicator& s) {
  const FmLor* l = as_lor(e);
  if (!l) throw PreconditionError("invert_demorgan_2: " + to_text(e) + " is not a disjunction");
  return run_engine(
      Sub{SubKind::Demorgan2, Formula::neg(e), Formula::neg(l->right), std::nullopt}, p, s);
}

ProofTree invert_omega(const ProofTree& p, const Formula& e, const SubstIndicator& s,
                       const ClosedTerm& t) {
  const FmUniv* u = as_univ(e);
  if (!u) throw PreconditionError("invert_omega: " + to_text(e) + " is not universal");
  Formula instance = substitute(u->body, u->index, t.term());
  return run_engine(Sub{SubKind::Omega, e, std::move(instance), t}, p, s);
}

ProofTree weakening_sub(const ProofTree& p, const Formula& from, const Formula& to,
                        const SubstIndicator& s) {
  if (is_axiom(from)) {
    throw PreconditionError("weakening_sub: " + to_text(from) +
                            " is an axiom and may occur at leaves");
  }
  if (!closed(to)) {
    throw PreconditionError("weakening_sub: replacement " + to_text(to) + " not closed");
  }
  return run_engine(Sub{SubKind::WeakeningOnly, from, to, std::nullopt}, p, s);
}

}  // namespace paw
