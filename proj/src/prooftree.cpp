#include "paw/prooftree.hpp"

#include <algorithm>
#include <map>

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
// OmegaGen

OmegaGen OmegaGen::native(Fn fn) {
  OmegaGen g;
  g.kind_ = Kind::Native;
  g.fn_ = std::move(fn);
  return g;
}

OmegaGen OmegaGen::with_template(Nat param_index, ProofTree body) {
  OmegaGen g;
  g.kind_ = Kind::Template;
  g.param_ = param_index;
  g.body_ = std::make_shared<const ProofTree>(std::move(body));
  return g;
}

OmegaGen OmegaGen::sampled(std::vector<std::pair<ClosedTerm, ProofTree>> entries) {
  OmegaGen g;
  g.kind_ = Kind::Sampled;
  g.entries_ =
      std::make_shared<const std::vector<std::pair<ClosedTerm, ProofTree>>>(std::move(entries));
  return g;
}

ProofTree OmegaGen::operator()(const ClosedTerm& t) const {
  switch (kind_) {
    case Kind::Native:
      return fn_(t);
    case Kind::Template:
      return substitute_tree(*body_, param_, t.term());
    case Kind::Sampled:
      for (const auto& [key, tree] : *entries_) {
        if (key == t) return tree;
      }
      throw PreconditionError("omega premise for term " + to_text(t.term()) +
                              " is outside the serialized sample set");
  }
  throw PreconditionError("omega generator in unknown state");
}

Nat OmegaGen::template_param() const {
  if (kind_ != Kind::Template) throw PreconditionError("not a template generator");
  return param_;
}

const ProofTree& OmegaGen::template_body() const {
  if (kind_ != Kind::Template) throw PreconditionError("not a template generator");
  return *body_;
}

const std::vector<std::pair<ClosedTerm, ProofTree>>& OmegaGen::entries() const {
  if (kind_ != Kind::Sampled) throw PreconditionError("not a sampled generator");
  return *entries_;
}

OmegaGen OmegaGen::map(std::function<ProofTree(const ProofTree&)> f) const {
  if (kind_ == Kind::Sampled) {
    // Keep the finite domain explicit so transformed parsed trees stay
    // serializable.
    std::vector<std::pair<ClosedTerm, ProofTree>> mapped;
    mapped.reserve(entries_->size());
    for (const auto& [key, tree] : *entries_) {
      mapped.emplace_back(key, f(tree));
    }
    return sampled(std::move(mapped));
  }
  OmegaGen self = *this;
  return native([self, f = std::move(f)](const ClosedTerm& t) { return f(self(t)); });
}

// ---------------------------------------------------------------------------
// Construction

ProofTree::ProofTree(PtVariant v) : node_(std::make_shared<const PtVariant>(std::move(v))) {}

namespace pt {

ProofTree node(Formula f) { return ProofTree(PtNode{std::move(f)}); }
ProofTree deg_up(Nat degree, ProofTree p) { return ProofTree(PtDegUp{degree, std::move(p)}); }
ProofTree ord_up(Ordinal height, ProofTree p) {
  return ProofTree(PtOrdUp{std::move(height), std::move(p)});
}
ProofTree exchange_ab(Formula a, Formula b, Nat deg, Ordinal ht, ProofTree p) {
  return ProofTree(PtExchangeAB{std::move(a), std::move(b), deg, std::move(ht), std::move(p)});
}
ProofTree exchange_cab(Formula c, Formula a, Formula b, Nat deg, Ordinal ht, ProofTree p) {
  return ProofTree(
      PtExchangeCAB{std::move(c), std::move(a), std::move(b), deg, std::move(ht), std::move(p)});
}
ProofTree exchange_abd(Formula a, Formula b, Formula d, Nat deg, Ordinal ht, ProofTree p) {
  return ProofTree(
      PtExchangeABD{std::move(a), std::move(b), std::move(d), deg, std::move(ht), std::move(p)});
}
ProofTree exchange_cabd(Formula c, Formula a, Formula b, Formula d, Nat deg, Ordinal ht,
                        ProofTree p) {
  return ProofTree(PtExchangeCABD{std::move(c), std::move(a), std::move(b), std::move(d), deg,
                                  std::move(ht), std::move(p)});
}
ProofTree contraction_a(Formula a, Nat deg, Ordinal ht, ProofTree p) {
  return ProofTree(PtContractionA{std::move(a), deg, std::move(ht), std::move(p)});
}
ProofTree contraction_ad(Formula a, Formula d, Nat deg, Ordinal ht, ProofTree p) {
  return ProofTree(
      PtContractionAD{std::move(a), std::move(d), deg, std::move(ht), std::move(p)});
}
ProofTree weakening_ad(Formula a, Formula d, Nat deg, Ordinal ht, ProofTree p) {
  return ProofTree(PtWeakeningAD{std::move(a), std::move(d), deg, std::move(ht), std::move(p)});
}
ProofTree demorgan_ab(Formula a, Formula b, Nat deg1, Nat deg2, Ordinal ht1, Ordinal ht2,
                      ProofTree left, ProofTree right) {
  return ProofTree(PtDemorganAB{std::move(a), std::move(b), deg1, deg2, std::move(ht1),
                                std::move(ht2), std::move(left), std::move(right)});
}
ProofTree demorgan_abd(Formula a, Formula b, Formula d, Nat deg1, Nat deg2, Ordinal ht1,
                       Ordinal ht2, ProofTree left, ProofTree right) {
  return ProofTree(PtDemorganABD{std::move(a), std::move(b), std::move(d), deg1, deg2,
                                 std::move(ht1), std::move(ht2), std::move(left),
                                 std::move(right)});
}
ProofTree negation_a(Formula a, Nat deg, Ordinal ht, ProofTree p) {
  return ProofTree(PtNegationA{std::move(a), deg, std::move(ht), std::move(p)});
}
ProofTree negation_ad(Formula a, Formula d, Nat deg, Ordinal ht, ProofTree p) {
  return ProofTree(PtNegationAD{std::move(a), std::move(d), deg, std::move(ht), std::move(p)});
}
ProofTree quantification_a(Formula a, Nat var, Term witness, Nat deg, Ordinal ht, ProofTree p) {
  return ProofTree(
      PtQuantificationA{std::move(a), var, std::move(witness), deg, std::move(ht), std::move(p)});
}
ProofTree quantification_ad(Formula a, Formula d, Nat var, Term witness, Nat deg, Ordinal ht,
                            ProofTree p) {
  return ProofTree(PtQuantificationAD{std::move(a), std::move(d), var, std::move(witness), deg,
                                      std::move(ht), std::move(p)});
}
ProofTree w_rule_a(Formula a, Nat var, Nat deg, Ordinal ht, OmegaGen gen) {
  return ProofTree(PtOmegaA{std::move(a), var, deg, std::move(ht), std::move(gen)});
}
ProofTree w_rule_ad(Formula a, Formula d, Nat var, Nat deg, Ordinal ht, OmegaGen gen) {
  return ProofTree(PtOmegaAD{std::move(a), std::move(d), var, deg, std::move(ht), std::move(gen)});
}
ProofTree cut_ca(Formula c, Formula a, Nat deg1, Nat deg2, Ordinal ht1, Ordinal ht2,
                 ProofTree left, ProofTree right) {
  return ProofTree(PtCutCA{std::move(c), std::move(a), deg1, deg2, std::move(ht1), std::move(ht2),
                           std::move(left), std::move(right)});
}
ProofTree cut_ad(Formula a, Formula d, Nat deg1, Nat deg2, Ordinal ht1, Ordinal ht2,
                 ProofTree left, ProofTree right) {
  return ProofTree(PtCutAD{std::move(a), std::move(d), deg1, deg2, std::move(ht1), std::move(ht2),
                           std::move(left), std::move(right)});
}
ProofTree cut_cad(Formula c, Formula a, Formula d, Nat deg1, Nat deg2, Ordinal ht1, Ordinal ht2,
                  ProofTree left, ProofTree right) {
  return ProofTree(PtCutCAD{std::move(c), std::move(a), std::move(d), deg1, deg2, std::move(ht1),
                            std::move(ht2), std::move(left), std::move(right)});
}

}  // namespace pt

// ---------------------------------------------------------------------------
// Extractors

Formula ptree_formula(const ProofTree& p) {
  return std::visit(
      overloaded{
          [](const PtNode& n) { return n.formula; },
          [](const PtDegUp& n) { return ptree_formula(n.child); },
          [](const PtOrdUp& n) { return ptree_formula(n.child); },
          [](const PtExchangeAB& n) { return Formula::lor(n.b, n.a); },
          [](const PtExchangeCAB& n) { return Formula::lor(Formula::lor(n.c, n.b), n.a); },
          [](const PtExchangeABD& n) { return Formula::lor(Formula::lor(n.b, n.a), n.d); },
          [](const PtExchangeCABD& n) {
            return Formula::lor(Formula::lor(Formula::lor(n.c, n.b), n.a), n.d);
          },
          [](const PtContractionA& n) { return n.a; },
          [](const PtContractionAD& n) { return Formula::lor(n.a, n.d); },
          [](const PtWeakeningAD& n) { return Formula::lor(n.a, n.d); },
          [](const PtDemorganAB& n) { return Formula::neg(Formula::lor(n.a, n.b)); },
          [](const PtDemorganABD& n) {
            return Formula::lor(Formula::neg(Formula::lor(n.a, n.b)), n.d);
          },
          [](const PtNegationA& n) { return Formula::neg(Formula::neg(n.a)); },
          [](const PtNegationAD& n) { return Formula::lor(Formula::neg(Formula::neg(n.a)), n.d); },
          [](const PtQuantificationA& n) { return Formula::neg(Formula::univ(n.var, n.a)); },
          [](const PtQuantificationAD& n) {
            return Formula::lor(Formula::neg(Formula::univ(n.var, n.a)), n.d);
          },
          [](const PtOmegaA& n) { return Formula::univ(n.var, n.a); },
          [](const PtOmegaAD& n) { return Formula::lor(Formula::univ(n.var, n.a), n.d); },
          [](const PtCutCA& n) { return n.c; },
          [](const PtCutAD& n) { return n.d; },
          [](const PtCutCAD& n) { return Formula::lor(n.c, n.d); },
      },
      p.node());
}

namespace {

Nat cut_degree(Nat deg1, Nat deg2, const Formula& cut_formula) {
  return std::max(std::max(deg1, deg2), num_conn(Formula::neg(cut_formula)));
}

}  // namespace

Nat ptree_deg(const ProofTree& p) {
  return std::visit(
      overloaded{
          [](const PtNode&) -> Nat { return 0; },
          [](const PtDegUp& n) -> Nat { return n.degree; },
          [](const PtOrdUp& n) -> Nat { return ptree_deg(n.child); },
          [](const PtExchangeAB& n) -> Nat { return n.deg; },
          [](const PtExchangeCAB& n) -> Nat { return n.deg; },
          [](const PtExchangeABD& n) -> Nat { return n.deg; },
          [](const PtExchangeCABD& n) -> Nat { return n.deg; },
          [](const PtContractionA& n) -> Nat { return n.deg; },
          [](const PtContractionAD& n) -> Nat { return n.deg; },
          [](const PtWeakeningAD& n) -> Nat { return n.deg; },
          [](const PtDemorganAB& n) -> Nat { return std::max(n.deg1, n.deg2); },
          [](const PtDemorganABD& n) -> Nat { return std::max(n.deg1, n.deg2); },
          [](const PtNegationA& n) -> Nat { return n.deg; },
          [](const PtNegationAD& n) -> Nat { return n.deg; },
          [](const PtQuantificationA& n) -> Nat { return n.deg; },
          [](const PtQuantificationAD& n) -> Nat { return n.deg; },
          [](const PtOmegaA& n) -> Nat { return n.deg; },
          [](const PtOmegaAD& n) -> Nat { return n.deg; },
          [](const PtCutCA& n) -> Nat { return cut_degree(n.deg1, n.deg2, n.a); },
          [](const PtCutAD& n) -> Nat { return cut_degree(n.deg1, n.deg2, n.a); },
          [](const PtCutCAD& n) -> Nat { return cut_degree(n.deg1, n.deg2, n.a); },
      },
      p.node());
}

Ordinal ptree_ord(const ProofTree& p) {
  return std::visit(
      overloaded{
          [](const PtNode&) { return Ordinal::zero(); },
          [](const PtDegUp& n) { return ptree_ord(n.child); },
          [](const PtOrdUp& n) { return n.height; },
          [](const PtExchangeAB& n) { return n.ht; },
          [](const PtExchangeCAB& n) { return n.ht; },
          [](const PtExchangeABD& n) { return n.ht; },
          [](const PtExchangeCABD& n) { return n.ht; },
          [](const PtContractionA& n) { return n.ht; },
          [](const PtContractionAD& n) { return n.ht; },
          [](const PtWeakeningAD& n) { return succ(n.ht); },
          [](const PtDemorganAB& n) { return succ(ord_max(n.ht1, n.ht2)); },
          [](const PtDemorganABD& n) { return succ(ord_max(n.ht1, n.ht2)); },
          [](const PtNegationA& n) { return succ(n.ht); },
          [](const PtNegationAD& n) { return succ(n.ht); },
          [](const PtQuantificationA& n) { return succ(n.ht); },
          [](const PtQuantificationAD& n) { return succ(n.ht); },
          [](const PtOmegaA& n) { return succ(n.ht); },
          [](const PtOmegaAD& n) { return succ(n.ht); },
          [](const PtCutCA& n) { return succ(ord_max(n.ht1, n.ht2)); },
          [](const PtCutAD& n) { return succ(succ(ord_max(n.ht1, n.ht2))); },
          [](const PtCutCAD& n) { return succ(ord_max(n.ht1, n.ht2)); },
      },
      p.node());
}

Decoration decoration(const ProofTree& p) { return Decoration{ptree_deg(p), ptree_ord(p)}; }

const char* rule_name(const ProofTree& p) {
  return std::visit(
      overloaded{
          [](const PtNode&) { return "node"; },
          [](const PtDegUp&) { return "deg_up"; },
          [](const PtOrdUp&) { return "ord_up"; },
          [](const PtExchangeAB&) { return "exchange_ab"; },
          [](const PtExchangeCAB&) { return "exchange_cab"; },
          [](const PtExchangeABD&) { return "exchange_abd"; },
          [](const PtExchangeCABD&) { return "exchange_cabd"; },
          [](const PtContractionA&) { return "contraction_a"; },
          [](const PtContractionAD&) { return "contraction_ad"; },
          [](const PtWeakeningAD&) { return "weakening_ad"; },
          [](const PtDemorganAB&) { return "demorgan_ab"; },
          [](const PtDemorganABD&) { return "demorgan_abd"; },
          [](const PtNegationA&) { return "negation_a"; },
          [](const PtNegationAD&) { return "negation_ad"; },
          [](const PtQuantificationA&) { return "quantification_a"; },
          [](const PtQuantificationAD&) { return "quantification_ad"; },
          [](const PtOmegaA&) { return "w_rule_a"; },
          [](const PtOmegaAD&) { return "w_rule_ad"; },
          [](const PtCutCA&) { return "cut_ca"; },
          [](const PtCutAD&) { return "cut_ad"; },
          [](const PtCutCAD&) { return "cut_cad"; },
      },
      p.node());
}

// ---------------------------------------------------------------------------
// Well-formedness

std::string CheckFailure::to_string() const {
  std::string out = rule + ": " + condition + " (path";
  for (std::size_t i : path) out += " " + std::to_string(i);
  out += ")";
  return out;
}

std::vector<ClosedTerm> make_omega_samples(Nat n) {
  std::vector<ClosedTerm> samples;
  for (Nat i = 0; i < n; ++i) samples.push_back(numeral_c(i));
  samples.push_back(ClosedTerm(Term::plus(Term::zero(), Term::succ(Term::zero()))));
  return samples;
}

const std::vector<ClosedTerm>& default_omega_samples() {
  static const std::vector<ClosedTerm> samples = make_omega_samples(5);
  return samples;
}

namespace {

class Checker {
 public:
  explicit Checker(const std::vector<ClosedTerm>& samples) : samples_(samples) {}

  CheckResult run(const ProofTree& p) {
    if (visit(p)) return CheckResult{true, std::nullopt};
    return CheckResult{false, failure_};
  }

 private:
  const std::vector<ClosedTerm>& samples_;
  std::vector<std::size_t> path_;
  std::optional<CheckFailure> failure_;

  bool fail(const ProofTree& p, std::string condition) {
    failure_ = CheckFailure{path_, rule_name(p), std::move(condition)};
    return false;
  }

  bool check_child(const ProofTree& p, std::size_t index, const ProofTree& child,
                   const Formula& want, Nat deg, const Ordinal& ht) {
    Formula got = ptree_formula(child);
    if (got != want) {
      return fail(p, "premise " + std::to_string(index) + " proves " + to_text(got) +
                         ", the rule needs " + to_text(want));
    }
    if (ptree_deg(child) != deg) {
      return fail(p, "stored degree " + std::to_string(deg) + " of premise " +
                         std::to_string(index) + " differs from its degree " +
                         std::to_string(ptree_deg(child)));
    }
    if (ptree_ord(child) != ht) {
      return fail(p, "stored height " + to_text(ht) + " of premise " + std::to_string(index) +
                         " differs from its height " + to_text(ptree_ord(child)));
    }
    path_.push_back(index);
    bool ok = visit(child);
    path_.pop_back();
    return ok;
  }

  bool check_omega(const ProofTree& p, const Formula& body, Nat var,
                   const std::optional<Formula>& side, Nat deg, const Ordinal& ht,
                   const OmegaGen& gen) {
    for (std::size_t i = 0; i < samples_.size(); ++i) {
      const ClosedTerm& t = samples_[i];
      ProofTree premise = [&]() -> ProofTree {
        try {
          return gen(t);
        } catch (const std::exception& e) {
          throw OmegaUnavailable{e.what()};
        }
      }();
      Formula want = substitute(body, var, t.term());
      if (side) want = Formula::lor(std::move(want), *side);
      if (!check_child(p, i, premise, want, deg, ht)) return false;
    }
    return true;
  }

  struct OmegaUnavailable {
    std::string what;
  };

  bool visit(const ProofTree& p) {
    try {
      return visit_impl(p);
    } catch (const OmegaUnavailable& e) {
      return fail(p, "omega premise unavailable: " + e.what);
    }
  }

  bool visit_impl(const ProofTree& p) {
    return std::visit(
        overloaded{
            [&](const PtNode& n) {
              if (!is_axiom(n.formula)) {
                return fail(p, "formula " + to_text(n.formula) + " is not an axiom");
              }
              return true;
            },
            [&](const PtDegUp& n) {
              if (n.degree <= ptree_deg(n.child)) {
                return fail(p, "deg_up to " + std::to_string(n.degree) +
                                   " does not raise the degree " +
                                   std::to_string(ptree_deg(n.child)));
              }
              path_.push_back(0);
              bool ok = visit(n.child);
              path_.pop_back();
              return ok;
            },
            [&](const PtOrdUp& n) {
              if (!is_nf(n.height)) {
                return fail(p, "ord_up target " + to_text(n.height) + " is not in normal form");
              }
              if (!lt(ptree_ord(n.child), n.height)) {
                return fail(p, "ord_up to " + to_text(n.height) + " does not raise the height " +
                                   to_text(ptree_ord(n.child)));
              }
              path_.push_back(0);
              bool ok = visit(n.child);
              path_.pop_back();
              return ok;
            },
            [&](const PtExchangeAB& n) {
              return check_child(p, 0, n.child, Formula::lor(n.a, n.b), n.deg, n.ht);
            },
            [&](const PtExchangeCAB& n) {
              return check_child(p, 0, n.child, Formula::lor(Formula::lor(n.c, n.a), n.b), n.deg,
                                 n.ht);
            },
            [&](const PtExchangeABD& n) {
              return check_child(p, 0, n.child, Formula::lor(Formula::lor(n.a, n.b), n.d), n.deg,
                                 n.ht);
            },
            [&](const PtExchangeCABD& n) {
              return check_child(p, 0, n.child,
                                 Formula::lor(Formula::lor(Formula::lor(n.c, n.a), n.b), n.d),
                                 n.deg, n.ht);
            },
            [&](const PtContractionA& n) {
              return check_child(p, 0, n.child, Formula::lor(n.a, n.a), n.deg, n.ht);
            },
            [&](const PtContractionAD& n) {
              return check_child(p, 0, n.child, Formula::lor(Formula::lor(n.a, n.a), n.d), n.deg,
                                 n.ht);
            },
            [&](const PtWeakeningAD& n) {
              if (!closed(n.a)) {
                return fail(p, "weakened formula " + to_text(n.a) + " not closed");
              }
              return check_child(p, 0, n.child, n.d, n.deg, n.ht);
            },
            [&](const PtDemorganAB& n) {
              return check_child(p, 0, n.left, Formula::neg(n.a), n.deg1, n.ht1) &&
                     check_child(p, 1, n.right, Formula::neg(n.b), n.deg2, n.ht2);
            },
            [&](const PtDemorganABD& n) {
              return check_child(p, 0, n.left, Formula::lor(Formula::neg(n.a), n.d), n.deg1,
                                 n.ht1) &&
                     check_child(p, 1, n.right, Formula::lor(Formula::neg(n.b), n.d), n.deg2,
                                 n.ht2);
            },
            [&](const PtNegationA& n) { return check_child(p, 0, n.child, n.a, n.deg, n.ht); },
            [&](const PtNegationAD& n) {
              return check_child(p, 0, n.child, Formula::lor(n.a, n.d), n.deg, n.ht);
            },
            [&](const PtQuantificationA& n) {
              if (!closed_term(n.witness)) {
                return fail(p, "witness term " + to_text(n.witness) + " not closed");
              }
              return check_child(p, 0, n.child,
                                 Formula::neg(substitute(n.a, n.var, n.witness)), n.deg, n.ht);
            },
            [&](const PtQuantificationAD& n) {
              if (!closed_term(n.witness)) {
                return fail(p, "witness term " + to_text(n.witness) + " not closed");
              }
              return check_child(
                  p, 0, n.child,
                  Formula::lor(Formula::neg(substitute(n.a, n.var, n.witness)), n.d), n.deg,
                  n.ht);
            },
            [&](const PtOmegaA& n) {
              return check_omega(p, n.a, n.var, std::nullopt, n.deg, n.ht, n.gen);
            },
            [&](const PtOmegaAD& n) {
              return check_omega(p, n.a, n.var, n.d, n.deg, n.ht, n.gen);
            },
            [&](const PtCutCA& n) {
              return check_child(p, 0, n.left, Formula::lor(n.c, n.a), n.deg1, n.ht1) &&
                     check_child(p, 1, n.right, Formula::neg(n.a), n.deg2, n.ht2);
            },
            [&](const PtCutAD& n) {
              return check_child(p, 0, n.left, n.a, n.deg1, n.ht1) &&
                     check_child(p, 1, n.right, Formula::lor(Formula::neg(n.a), n.d), n.deg2,
                                 n.ht2);
            },
            [&](const PtCutCAD& n) {
              return check_child(p, 0, n.left, Formula::lor(n.c, n.a), n.deg1, n.ht1) &&
                     check_child(p, 1, n.right, Formula::lor(Formula::neg(n.a), n.d), n.deg2,
                                 n.ht2);
            },
        },
        p.node());
  }
};

}  // namespace

CheckResult check_tree(const ProofTree& p, const std::vector<ClosedTerm>& samples) {
  Checker checker(samples);
  return checker.run(p);
}

bool well_formed(const ProofTree& p) { return check_tree(p, default_omega_samples()).ok; }

bool check_omega_node(const ProofTree& p, const std::vector<ClosedTerm>& samples) {
  auto check_one = [&](const Formula& body, Nat var, const std::optional<Formula>& side, Nat deg,
                       const Ordinal& ht, const OmegaGen& gen) {
    for (const ClosedTerm& t : samples) {
      ProofTree premise = gen(t);
      Formula want = substitute(body, var, t.term());
      if (side) want = Formula::lor(std::move(want), *side);
      if (ptree_formula(premise) != want) return false;
      if (ptree_deg(premise) != deg) return false;
      if (ptree_ord(premise) != ht) return false;
      if (!check_tree(premise, samples).ok) return false;
    }
    return true;
  };
  if (const auto* n = std::get_if<PtOmegaA>(&p.node())) {
    return check_one(n->a, n->var, std::nullopt, n->deg, n->ht, n->gen);
  }
  if (const auto* n = std::get_if<PtOmegaAD>(&p.node())) {
    return check_one(n->a, n->var, n->d, n->deg, n->ht, n->gen);
  }
  throw PreconditionError("check_omega_node: not an omega node");
}

// ---------------------------------------------------------------------------
// Walks

namespace {

void walk(const ProofTree& p, const std::vector<ClosedTerm>& samples,
          const std::function<void(const ProofTree&)>& f) {
  f(p);
  std::visit(overloaded{
                 [&](const PtNode&) {},
                 [&](const PtDegUp& n) { walk(n.child, samples, f); },
                 [&](const PtOrdUp& n) { walk(n.child, samples, f); },
                 [&](const PtExchangeAB& n) { walk(n.child, samples, f); },
                 [&](const PtExchangeCAB& n) { walk(n.child, samples, f); },
                 [&](const PtExchangeABD& n) { walk(n.child, samples, f); },
                 [&](const PtExchangeCABD& n) { walk(n.child, samples, f); },
                 [&](const PtContractionA& n) { walk(n.child, samples, f); },
                 [&](const PtContractionAD& n) { walk(n.child, samples, f); },
                 [&](const PtWeakeningAD& n) { walk(n.child, samples, f); },
                 [&](const PtDemorganAB& n) {
                   walk(n.left, samples, f);
                   walk(n.right, samples, f);
                 },
                 [&](const PtDemorganABD& n) {
                   walk(n.left, samples, f);
                   walk(n.right, samples, f);
                 },
                 [&](const PtNegationA& n) { walk(n.child, samples, f); },
                 [&](const PtNegationAD& n) { walk(n.child, samples, f); },
                 [&](const PtQuantificationA& n) { walk(n.child, samples, f); },
                 [&](const PtQuantificationAD& n) { walk(n.child, samples, f); },
                 [&](const PtOmegaA& n) {
                   for (const ClosedTerm& t : samples) walk(n.gen(t), samples, f);
                 },
                 [&](const PtOmegaAD& n) {
                   for (const ClosedTerm& t : samples) walk(n.gen(t), samples, f);
                 },
                 [&](const PtCutCA& n) {
                   walk(n.left, samples, f);
                   walk(n.right, samples, f);
                 },
                 [&](const PtCutAD& n) {
                   walk(n.left, samples, f);
                   walk(n.right, samples, f);
                 },
                 [&](const PtCutCAD& n) {
                   walk(n.left, samples, f);
                   walk(n.right, samples, f);
                 },
             },
             p.node());
}

}  // namespace

bool contains_cut(const ProofTree& p, const std::vector<ClosedTerm>& samples) {
  bool found = false;
  walk(p, samples, [&](const ProofTree& q) {
    if (std::holds_alternative<PtCutCA>(q.node()) || std::holds_alternative<PtCutAD>(q.node()) ||
        std::holds_alternative<PtCutCAD>(q.node())) {
      found = true;
    }
  });
  return found;
}

std::vector<std::pair<std::string, Nat>> rule_histogram(const ProofTree& p,
                                                        const std::vector<ClosedTerm>& samples) {
  std::map<std::string, Nat> counts;
  walk(p, samples, [&](const ProofTree& q) { counts[rule_name(q)] += 1; });
  return {counts.begin(), counts.end()};
}

// ---------------------------------------------------------------------------
// Tree-wide substitution (template instantiation)

ProofTree substitute_tree(const ProofTree& p, Nat index, const Term& replacement) {
  auto s = [&](const Formula& f) { return substitute(f, index, replacement); };
  auto st = [&](const Term& t) { return substitute_term(t, index, replacement); };
  auto rec = [&](const ProofTree& q) { return substitute_tree(q, index, replacement); };
  auto sg = [&](const OmegaGen& g) -> OmegaGen {
    if (g.kind() == OmegaGen::Kind::Template && g.template_param() == index) {
      return g;  // the template binds its own parameter
    }
    if (g.kind() == OmegaGen::Kind::Template) {
      return OmegaGen::with_template(g.template_param(), rec(g.template_body()));
    }
    return g.map(rec);
  };
  return std::visit(
      overloaded{
          [&](const PtNode& n) { return pt::node(s(n.formula)); },
          [&](const PtDegUp& n) { return pt::deg_up(n.degree, rec(n.child)); },
          [&](const PtOrdUp& n) { return pt::ord_up(n.height, rec(n.child)); },
          [&](const PtExchangeAB& n) {
            return pt::exchange_ab(s(n.a), s(n.b), n.deg, n.ht, rec(n.child));
          },
          [&](const PtExchangeCAB& n) {
            return pt::exchange_cab(s(n.c), s(n.a), s(n.b), n.deg, n.ht, rec(n.child));
          },
          [&](const PtExchangeABD& n) {
            return pt::exchange_abd(s(n.a), s(n.b), s(n.d), n.deg, n.ht, rec(n.child));
          },
          [&](const PtExchangeCABD& n) {
            return pt::exchange_cabd(s(n.c), s(n.a), s(n.b), s(n.d), n.deg, n.ht, rec(n.child));
          },
          [&](const PtContractionA& n) {
            return pt::contraction_a(s(n.a), n.deg, n.ht, rec(n.child));
          },
          [&](const PtContractionAD& n) {
            return pt::contraction_ad(s(n.a), s(n.d), n.deg, n.ht, rec(n.child));
          },
          [&](const PtWeakeningAD& n) {
            return pt::weakening_ad(s(n.a), s(n.d), n.deg, n.ht, rec(n.child));
          },
          [&](const PtDemorganAB& n) {
            return pt::demorgan_ab(s(n.a), s(n.b), n.deg1, n.deg2, n.ht1, n.ht2, rec(n.left),
                                   rec(n.right));
          },
          [&](const PtDemorganABD& n) {
            return pt::demorgan_abd(s(n.a), s(n.b), s(n.d), n.deg1, n.deg2, n.ht1, n.ht2,
                                    rec(n.left), rec(n.right));
          },
          [&](const PtNegationA& n) { return pt::negation_a(s(n.a), n.deg, n.ht, rec(n.child)); },
          [&](const PtNegationAD& n) {
            return pt::negation_ad(s(n.a), s(n.d), n.deg, n.ht, rec(n.child));
          },
          [&](const PtQuantificationA& n) {
            Formula body = n.var == index ? n.a : s(n.a);
            return pt::quantification_a(std::move(body), n.var, st(n.witness), n.deg, n.ht,
                                        rec(n.child));
          },
          [&](const PtQuantificationAD& n) {
            Formula body = n.var == index ? n.a : s(n.a);
            return pt::quantification_ad(std::move(body), s(n.d), n.var, st(n.witness), n.deg,
                                         n.ht, rec(n.child));
          },
          [&](const PtOmegaA& n) {
            Formula body = n.var == index ? n.a : s(n.a);
            return pt::w_rule_a(std::move(body), n.var, n.deg, n.ht, sg(n.gen));
          },
          [&](const PtOmegaAD& n) {
            Formula body = n.var == index ? n.a : s(n.a);
            return pt::w_rule_ad(std::move(body), s(n.d), n.var, n.deg, n.ht, sg(n.gen));
          },
          [&](const PtCutCA& n) {
            return pt::cut_ca(s(n.c), s(n.a), n.deg1, n.deg2, n.ht1, n.ht2, rec(n.left),
                              rec(n.right));
          },
          [&](const PtCutAD& n) {
            return pt::cut_ad(s(n.a), s(n.d), n.deg1, n.deg2, n.ht1, n.ht2, rec(n.left),
                              rec(n.right));
          },
          [&](const PtCutCAD& n) {
            return pt::cut_cad(s(n.c), s(n.a), s(n.d), n.deg1, n.deg2, n.ht1, n.ht2, rec(n.left),
                               rec(n.right));
          },
      },
      p.node());
}

// ---------------------------------------------------------------------------
// Builder registry

void BuilderRegistry::add(std::string name, Builder builder) {
  builders_.emplace_back(std::move(name), std::move(builder));
}

std::optional<ProofTree> BuilderRegistry::run(const std::string& name, const Formula& a) const {
  for (const auto& [builder_name, builder] : builders_) {
    if (builder_name != name) continue;
    try {
      return builder(a);
    } catch (const PreconditionError&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<ProofTree> BuilderRegistry::provable(const Formula& a, Nat d,
                                                   const Ordinal& alpha) const {
  for (const auto& [name, builder] : builders_) {
    std::optional<ProofTree> tree;
    try {
      tree = builder(a);
    } catch (const PreconditionError&) {
      continue;
    }
    if (!tree) continue;
    if (ptree_formula(*tree) != a) continue;
    if (ptree_deg(*tree) > d) continue;
    if (ptree_ord(*tree) != alpha) continue;
    if (!well_formed(*tree)) continue;
    return tree;
  }
  return std::nullopt;
}

}  // namespace paw
