#include "paw/peano.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "paw/build.hpp"
#include "paw/cutelim.hpp"

namespace paw {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

Formula imp(Formula x, Formula y) { return Formula::lor(Formula::neg(std::move(x)), std::move(y)); }

Formula eq(Term l, Term r) { return Formula::atom(std::move(l), std::move(r)); }

Ordinal omega_ord() { return Ordinal::cons(nat_ord(1ull), 0, Ordinal::zero()); }

// Assignment of closed terms to free variables: a default term with
// per-variable overrides, extended when translation passes under a
// generalisation.
struct ClosureMap {
  ClosedTerm def;
  std::map<Nat, ClosedTerm> overrides;

  const ClosedTerm& lookup(Nat v) const {
    auto it = overrides.find(v);
    return it == overrides.end() ? def : it->second;
  }

  ClosureMap with(Nat v, const ClosedTerm& t) const {
    ClosureMap out = *this;
    out.overrides.insert_or_assign(v, t);
    return out;
  }
};

Formula closure_with(const Formula& f, const ClosureMap& sigma) {
  Formula out = f;
  for (Nat v : free_list(f)) {
    out = substitute(out, v, sigma.lookup(v).term());
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// PeanoGen

PeanoGen PeanoGen::native(Fn fn) {
  PeanoGen g;
  g.fn_ = std::move(fn);
  return g;
}

PeanoGen PeanoGen::sampled(std::vector<std::pair<ClosedTerm, PeanoProof>> entries) {
  PeanoGen g;
  g.entries_ =
      std::make_shared<const std::vector<std::pair<ClosedTerm, PeanoProof>>>(std::move(entries));
  return g;
}

PeanoProof PeanoGen::operator()(const ClosedTerm& t) const {
  if (!entries_) return fn_(t);
  for (const auto& [key, proof] : *entries_) {
    if (key == t) return proof;
  }
  throw PreconditionError("instantiation family has no entry for " + to_text(t.term()));
}

const std::vector<std::pair<ClosedTerm, PeanoProof>>& PeanoGen::entries() const {
  if (!entries_) throw PreconditionError("instantiation family is not sampled");
  return *entries_;
}

// ---------------------------------------------------------------------------
// Conclusions

namespace {

Formula conclusion_of(const PpVariant& v) {
  Term x0 = Term::var(0), x1 = Term::var(1), x2 = Term::var(2);
  return std::visit(
      overloaded{
          [&](const PpFOL1& n) { return imp(n.a, imp(n.b, n.a)); },
          [&](const PpFOL2& n) {
            return imp(imp(n.a, imp(n.b, n.c)), imp(imp(n.a, n.b), imp(n.a, n.c)));
          },
          [&](const PpFOL3& n) {
            return imp(imp(Formula::neg(n.a), Formula::neg(n.b)),
                       imp(imp(Formula::neg(n.a), n.b), n.a));
          },
          [&](const PpFOL4& n) {
            return Formula::lor(Formula::neg(Formula::univ(n.var, n.a)),
                                substitute(n.a, n.var, n.t));
          },
          [&](const PpFOL5& n) {
            return imp(Formula::univ(n.var, imp(n.a, n.b)),
                       imp(n.a, Formula::univ(n.var, n.b)));
          },
          [&](const PpEquTrans&) {
            return Formula::univ(
                0, Formula::univ(
                       1, Formula::univ(2, imp(eq(x0, x1), imp(eq(x1, x2), eq(x0, x2))))));
          },
          [&](const PpEquSucc&) {
            return Formula::univ(
                0, Formula::univ(1, imp(eq(x0, x1), eq(Term::succ(x0), Term::succ(x1)))));
          },
          [&](const PpNonZero&) {
            return Formula::univ(0, Formula::neg(eq(Term::zero(), Term::succ(x0))));
          },
          [&](const PpSuccEqu&) {
            return Formula::univ(
                0, Formula::univ(1, imp(eq(Term::succ(x0), Term::succ(x1)), eq(x0, x1))));
          },
          [&](const PpPl0&) {
            return Formula::univ(0, eq(Term::plus(x0, Term::zero()), x0));
          },
          [&](const PpPlS&) {
            return Formula::univ(
                0, Formula::univ(
                       1, eq(Term::plus(x0, Term::succ(x1)), Term::succ(Term::plus(x0, x1)))));
          },
          [&](const PpMl0&) {
            return Formula::univ(0, eq(Term::times(x0, Term::zero()), Term::zero()));
          },
          [&](const PpMlS&) {
            return Formula::univ(
                0, Formula::univ(
                       1, eq(Term::times(x0, Term::succ(x1)),
                             Term::plus(Term::times(x0, x1), x0))));
          },
          [&](const PpInduct& n) {
            Formula a0 = substitute(n.a, n.var, Term::zero());
            Formula step = Formula::univ(
                n.var, imp(n.a, substitute(n.a, n.var, Term::succ(Term::var(n.var)))));
            return imp(a0, imp(step, Formula::univ(n.var, n.a)));
          },
          [&](const PpMP& n) {
            const FmLor* l = as_lor(n.impl.conclusion());
            return l->right;
          },
          [&](const PpUG& n) { return Formula::univ(n.var, n.sub.conclusion()); },
          [&](const PpIUG& n) { return Formula::univ(n.var, n.sub.conclusion()); },
          [&](const PpStub& n) { return n.claim; },
      },
      v);
}

ProofTree translate_variant(const PpVariant& v, const ClosureMap& sigma);

ProofTree translate_impl(const PeanoProof& p, const ClosureMap& sigma) {
  return translate_variant(p.node(), sigma);
}

}  // namespace

// ---------------------------------------------------------------------------
// PeanoProof construction

struct PeanoProof::Rep {
  PpVariant v;
  Formula conclusion;
  Decoration dec;
};

PeanoProof::PeanoProof(PpVariant v) {
  // Structural validation before anything is derived from the node.
  std::visit(overloaded{
                 [](const PpFOL4& n) {
                   if (!closed_term(n.t)) {
                     throw PreconditionError("FOL4: instance term " + to_text(n.t) +
                                             " is not closed");
                   }
                 },
                 [](const PpFOL5& n) {
                   std::vector<Nat> frees = free_list(n.a);
                   if (std::find(frees.begin(), frees.end(), n.var) != frees.end()) {
                     throw PreconditionError("FOL5: x" + std::to_string(n.var) +
                                             " occurs free in " + to_text(n.a));
                   }
                 },
                 [](const PpMP& n) {
                   const FmLor* l = as_lor(n.impl.conclusion());
                   const FmNeg* neg = l ? as_neg(l->left) : nullptr;
                   if (!neg || neg->body != n.arg.conclusion()) {
                     throw PreconditionError(
                         "MP: major premise " + to_text(n.impl.conclusion()) +
                         " is not an implication from " + to_text(n.arg.conclusion()));
                   }
                 },
                 [](const PpIUG& n) {
                   for (const ClosedTerm& t : default_omega_samples()) {
                     PeanoProof inst = n.family(t);
                     Formula want = substitute(n.sub.conclusion(), n.var, t.term());
                     if (inst.conclusion() != want) {
                       throw PreconditionError("I_UG: family proves " +
                                               to_text(inst.conclusion()) + " at " +
                                               to_text(t.term()) + ", expected " + to_text(want));
                     }
                     if (inst.decoration().degree != n.sub.decoration().degree ||
                         inst.decoration().height != n.sub.decoration().height) {
                       throw PreconditionError(
                           "I_UG: family decoration differs from the premise at " +
                           to_text(t.term()));
                     }
                   }
                 },
                 [](const auto&) {},
             },
             v);
  Formula conclusion = conclusion_of(v);
  Decoration dec = ::paw::decoration(translate_variant(v, ClosureMap{numeral_c(0), {}}));
  rep_ = std::make_shared<const Rep>(Rep{std::move(v), std::move(conclusion), std::move(dec)});
}

const PpVariant& PeanoProof::node() const { return rep_->v; }
const Formula& PeanoProof::conclusion() const { return rep_->conclusion; }
const Decoration& PeanoProof::decoration() const { return rep_->dec; }

namespace pa {
PeanoProof fol1(Formula a, Formula b) { return PeanoProof(PpFOL1{std::move(a), std::move(b)}); }
PeanoProof fol2(Formula a, Formula b, Formula c) {
  return PeanoProof(PpFOL2{std::move(a), std::move(b), std::move(c)});
}
PeanoProof fol3(Formula a, Formula b) { return PeanoProof(PpFOL3{std::move(a), std::move(b)}); }
PeanoProof fol4(Formula a, Nat var, const ClosedTerm& t) {
  return PeanoProof(PpFOL4{std::move(a), var, t.term()});
}
PeanoProof fol5(Formula a, Formula b, Nat var) {
  return PeanoProof(PpFOL5{std::move(a), std::move(b), var});
}
PeanoProof equ_trans() { return PeanoProof(PpEquTrans{}); }
PeanoProof equ_succ() { return PeanoProof(PpEquSucc{}); }
PeanoProof non_zero() { return PeanoProof(PpNonZero{}); }
PeanoProof succ_equ() { return PeanoProof(PpSuccEqu{}); }
PeanoProof pl0() { return PeanoProof(PpPl0{}); }
PeanoProof plS() { return PeanoProof(PpPlS{}); }
PeanoProof ml0() { return PeanoProof(PpMl0{}); }
PeanoProof mlS() { return PeanoProof(PpMlS{}); }
PeanoProof induct(Formula a, Nat var) { return PeanoProof(PpInduct{std::move(a), var}); }
PeanoProof mp(PeanoProof impl, PeanoProof arg) {
  return PeanoProof(PpMP{std::move(impl), std::move(arg)});
}
PeanoProof ug(PeanoProof sub, Nat var) { return PeanoProof(PpUG{std::move(sub), var}); }
PeanoProof i_ug(PeanoProof sub, Nat var, PeanoGen family) {
  return PeanoProof(PpIUG{std::move(sub), var, std::move(family)});
}
PeanoProof stub(Formula claim) { return PeanoProof(PpStub{std::move(claim)}); }
}  // namespace pa

// ---------------------------------------------------------------------------
// FOL axiom derivations

ProofTree derive_FOL1(const Formula& a, const Formula& b) {
  if (!closed(a) || !closed(b)) throw PreconditionError("derive_FOL1: instance formulas open");
  ProofTree p = mk::weakening_ad(Formula::neg(b), build_LEM(a));  // ~b \/ (~a \/ a)
  p = mk::exchange_ab(std::move(p));                 // (~a \/ a) \/ ~b
  p = mk::exchange_cab(std::move(p));                // (~a \/ ~b) \/ a
  return assoc_left(std::move(p));                   // ~a \/ (~b \/ a)
}

ProofTree derive_FOL2(const Formula& a, const Formula& b, const Formula& c) {
  if (!closed(a) || !closed(b) || !closed(c)) {
    throw PreconditionError("derive_FOL2: instance formulas open");
  }
  Formula na = Formula::neg(a);
  Formula ab = imp(a, b);                      // ~a \/ b
  Formula abc = imp(a, imp(b, c));             // ~a \/ (~b \/ c)
  ProofTree left = build_LEM(ab);              // ~(~a \/ b) \/ (~a \/ b)
  left = reshape(std::move(left),
                 Formula::lor(Formula::lor(na, Formula::neg(ab)), b));
  ProofTree right = build_LEM(abc);
  right = reshape(std::move(right),
                  Formula::lor(Formula::neg(b),
                               Formula::lor(Formula::lor(c, Formula::neg(abc)), na)));
  ProofTree cut = mk::cut_cad(std::move(left), std::move(right));
  cut = reshape(std::move(cut),
                Formula::lor(Formula::lor(na, na),
                             Formula::lor(Formula::neg(ab),
                                          Formula::lor(c, Formula::neg(abc)))));
  cut = mk::contraction_ad(std::move(cut));
  return reshape(std::move(cut),
                 Formula::lor(Formula::neg(abc),
                              Formula::lor(Formula::neg(ab), Formula::lor(na, c))));
}

ProofTree derive_FOL3(const Formula& a, const Formula& b) {
  if (!closed(a) || !closed(b)) throw PreconditionError("derive_FOL3: instance formulas open");
  Formula na = Formula::neg(a), nb = Formula::neg(b);
  Formula nna = Formula::neg(na), nnb = Formula::neg(nb);
  Formula n3a = Formula::neg(nna);
  Formula inner = Formula::lor(nna, b);  // the encoded ~a -> b
  ProofTree top = mk::negation_ad(build_LEM(a));  // ~~~a \/ a
  top = mk::weakening_ad(Formula::neg(inner), std::move(top));
  top = reshape(std::move(top), Formula::lor(n3a, Formula::lor(Formula::neg(inner), a)));

  ProofTree mid = mk::weakening_ad(nnb, build_LEM(a));  // ~~b \/ (~a \/ a)
  mid = reshape(std::move(mid), Formula::lor(na, Formula::lor(a, nnb)));
  mid = mk::negation_ad(std::move(mid));  // ~~~a \/ (a \/ ~~b)

  ProofTree bot = mk::exchange_ab(build_LEM(nb));        // ~b \/ ~~b
  bot = mk::weakening_ad(a, std::move(bot));             // a \/ (~b \/ ~~b)
  bot = reshape(std::move(bot), Formula::lor(nb, Formula::lor(a, nnb)));

  ProofTree dm1 = mk::demorgan_abd(std::move(mid), std::move(bot));  // ~(~~a \/ b) \/ (a \/ ~~b)
  dm1 = reshape(std::move(dm1), Formula::lor(nnb, Formula::lor(Formula::neg(inner), a)));
  return mk::demorgan_abd(std::move(top), std::move(dm1));
}

ProofTree derive_FOL4(const Formula& a, Nat var, const ClosedTerm& t) {
  Formula inst = substitute(a, var, t.term());
  if (!closed(inst)) {
    throw PreconditionError("derive_FOL4: " + to_text(a) + " has free variables besides x" +
                            std::to_string(var));
  }
  return mk::quantification_ad(a, var, t, build_LEM(inst));
}

ProofTree derive_FOL5(const Formula& a, const Formula& b, Nat var) {
  if (!closed(a)) throw PreconditionError("derive_FOL5: " + to_text(a) + " must be closed");
  Formula f = imp(a, b);  // ~a \/ b, the quantified body
  Formula all_f = Formula::univ(var, f);
  if (!closed(all_f)) {
    throw PreconditionError("derive_FOL5: " + to_text(b) + " has free variables besides x" +
                            std::to_string(var));
  }
  Formula na = Formula::neg(a);
  Formula side = Formula::lor(Formula::neg(all_f), na);
  Ordinal premise_ht = succ(succ(nat_ord(2 * num_conn(f))));

  OmegaGen gen = OmegaGen::native([b, f, var, side](const ClosedTerm& u) {
    Formula bu = substitute(b, var, u.term());
    ProofTree p = build_LEM(substitute(f, var, u.term()));
    p = mk::quantification_ad(f, var, u, std::move(p));  // ~(forall f) \/ (~a \/ b[u])
    return reshape(std::move(p), Formula::lor(bu, side));
  });
  ProofTree w = mk::w_rule_ad(b, side, var, 0, premise_ht, std::move(gen));
  return reshape(std::move(w),
                 Formula::lor(Formula::neg(all_f), Formula::lor(na, Formula::univ(var, b))));
}

// ---------------------------------------------------------------------------
// Arithmetic axioms

namespace {

ProofTree eq_trans_inst(const ClosedTerm& t0, const ClosedTerm& t1, const ClosedTerm& t2) {
  Formula head = eq(t0.term(), t1.term());
  Formula tail = imp(eq(t1.term(), t2.term()), eq(t0.term(), t2.term()));
  if (t0.value() == t1.value()) {
    Formula pattern = eq(Term::var(0), t2.term());
    ProofTree base = lem_pair(pattern, 0, t1, t0);  // ~(t1 = t2) \/ (t0 = t2)
    return mk::weakening_ad(Formula::neg(head), std::move(base));
  }
  ProofTree base = pt::node(Formula::neg(head));
  ProofTree p = mk::exchange_ab(mk::weakening_ad(tail, std::move(base)));
  return mk::pad_height_to(std::move(p), nat_ord(2ull));
}

ProofTree weaken_or_flip(const Formula& target_left, Correctness truth, Formula if_true,
                         Formula if_false) {
  // Shared scheme of the successor axioms: one side is an initial sequent,
  // the other is weakened in; which is which depends on the equality.
  if (truth == Correctness::Correct) {
    return mk::weakening_ad(target_left, pt::node(std::move(if_true)));
  }
  ProofTree base = pt::node(std::move(if_false));
  return mk::exchange_ab(mk::weakening_ad(std::move(if_true), std::move(base)));
}

ProofTree eq_succ_inst(const ClosedTerm& t0, const ClosedTerm& t1) {
  Formula head = eq(t0.term(), t1.term());
  Formula succ_eq = eq(Term::succ(t0.term()), Term::succ(t1.term()));
  return weaken_or_flip(Formula::neg(head), correct_atom(Atom{t0.term(), t1.term()}), succ_eq,
                        Formula::neg(head));
}

ProofTree succ_equ_inst(const ClosedTerm& t0, const ClosedTerm& t1) {
  Formula head = eq(Term::succ(t0.term()), Term::succ(t1.term()));
  Formula plain = eq(t0.term(), t1.term());
  return weaken_or_flip(Formula::neg(head), correct_atom(Atom{t0.term(), t1.term()}), plain,
                        Formula::neg(head));
}

struct ArithAxiom {
  Nat arity;
  // Innermost body over variables 0..arity-1.
  Formula body;
  std::function<ProofTree(const std::vector<ClosedTerm>&)> instance;
};

const std::map<std::string, ArithAxiom>& arith_axioms() {
  static const std::map<std::string, ArithAxiom> table = [] {
    Term x0 = Term::var(0), x1 = Term::var(1), x2 = Term::var(2);
    std::map<std::string, ArithAxiom> t;
    t.emplace("eq_trans",
              ArithAxiom{3, imp(eq(x0, x1), imp(eq(x1, x2), eq(x0, x2))),
                         [](const std::vector<ClosedTerm>& ts) {
                           return eq_trans_inst(ts[0], ts[1], ts[2]);
                         }});
    t.emplace("eq_succ", ArithAxiom{2, imp(eq(x0, x1), eq(Term::succ(x0), Term::succ(x1))),
                                    [](const std::vector<ClosedTerm>& ts) {
                                      return eq_succ_inst(ts[0], ts[1]);
                                    }});
    t.emplace("non_zero", ArithAxiom{1, Formula::neg(eq(Term::zero(), Term::succ(x0))),
                                     [](const std::vector<ClosedTerm>& ts) {
                                       return pt::node(Formula::neg(
                                           eq(Term::zero(), Term::succ(ts[0].term()))));
                                     }});
    t.emplace("succ_equ", ArithAxiom{2, imp(eq(Term::succ(x0), Term::succ(x1)), eq(x0, x1)),
                                     [](const std::vector<ClosedTerm>& ts) {
                                       return succ_equ_inst(ts[0], ts[1]);
                                     }});
    t.emplace("pl0", ArithAxiom{1, eq(Term::plus(x0, Term::zero()), x0),
                                [](const std::vector<ClosedTerm>& ts) {
                                  return pt::node(
                                      eq(Term::plus(ts[0].term(), Term::zero()), ts[0].term()));
                                }});
    t.emplace("plS",
              ArithAxiom{2, eq(Term::plus(x0, Term::succ(x1)), Term::succ(Term::plus(x0, x1))),
                         [](const std::vector<ClosedTerm>& ts) {
                           return pt::node(eq(Term::plus(ts[0].term(), Term::succ(ts[1].term())),
                                              Term::succ(Term::plus(ts[0].term(), ts[1].term()))));
                         }});
    t.emplace("ml0", ArithAxiom{1, eq(Term::times(x0, Term::zero()), Term::zero()),
                                [](const std::vector<ClosedTerm>& ts) {
                                  return pt::node(eq(Term::times(ts[0].term(), Term::zero()),
                                                     Term::zero()));
                                }});
    t.emplace("mlS",
              ArithAxiom{2,
                         eq(Term::times(x0, Term::succ(x1)), Term::plus(Term::times(x0, x1), x0)),
                         [](const std::vector<ClosedTerm>& ts) {
                           return pt::node(
                               eq(Term::times(ts[0].term(), Term::succ(ts[1].term())),
                                  Term::plus(Term::times(ts[0].term(), ts[1].term()),
                                             ts[0].term())));
                         }});
    return t;
  }();
  return table;
}

const ArithAxiom& arith_axiom(const std::string& id) {
  auto it = arith_axioms().find(id);
  if (it == arith_axioms().end()) {
    throw PreconditionError("unknown arithmetic axiom '" + id + "'");
  }
  return it->second;
}

Ordinal arith_instance_height(const std::string& id) {
  if (id == "eq_trans") return nat_ord(2ull);
  if (id == "eq_succ" || id == "succ_equ") return nat_ord(1ull);
  return Ordinal::zero();
}

// The omega-rule stack recovering the quantified original from its closed
// instances; level i binds variable i.
ProofTree arith_stack(const std::string& id, std::vector<ClosedTerm> terms) {
  const ArithAxiom& ax = arith_axiom(id);
  Nat level = terms.size();
  if (level == ax.arity) return ax.instance(terms);

  Formula body = ax.body;
  for (Nat i = 0; i < level; ++i) body = substitute(body, i, terms[i].term());
  for (Nat i = ax.arity; i-- > level + 1;) body = Formula::univ(i, body);

  Ordinal premise_ht = arith_instance_height(id);
  for (Nat i = ax.arity; i-- > level + 1;) premise_ht = succ(premise_ht);

  OmegaGen gen = OmegaGen::native([id, terms](const ClosedTerm& t) {
    std::vector<ClosedTerm> extended = terms;
    extended.push_back(t);
    return arith_stack(id, std::move(extended));
  });
  return mk::w_rule_a(body, level, 0, premise_ht, std::move(gen));
}

}  // namespace

Nat arith_arity(const std::string& id) { return arith_axiom(id).arity; }

ProofTree derive_arith(const std::string& id, const std::vector<ClosedTerm>& terms) {
  const ArithAxiom& ax = arith_axiom(id);
  if (terms.size() != ax.arity) {
    throw PreconditionError("axiom '" + id + "' takes " + std::to_string(ax.arity) +
                            " instance terms");
  }
  return ax.instance(terms);
}

ProofTree derive_arith_quantified(const std::string& id) { return arith_stack(id, {}); }

Formula arith_axiom_formula(const std::string& id) {
  const ArithAxiom& ax = arith_axiom(id);
  Formula f = ax.body;
  for (Nat i = ax.arity; i-- > 0;) f = Formula::univ(i, f);
  return f;
}

// ---------------------------------------------------------------------------
// Induction

namespace {

Formula step_body(const Formula& a, Nat n) {
  return Formula::lor(Formula::neg(a), substitute(a, n, Term::succ(Term::var(n))));
}

Formula step_formula(const Formula& a, Nat n) { return Formula::univ(n, step_body(a, n)); }

Formula chain_link(const Formula& a, Nat n, Nat k) {
  return Formula::neg(Formula::lor(Formula::neg(substitute(a, n, numeral(k))),
                                   substitute(a, n, numeral(k + 1))));
}

Nat lem_height_nat(const Formula& a) { return 2 * num_conn(a) + 1; }

// Proof of (C(m) \/ A[m+1]) \/ ~A[0] with height 2*num_conn(A) + 4 + 3m.
ProofTree chain_proof(const Formula& a, Nat n, Nat m) {
  Formula a0 = substitute(a, n, numeral(0));
  Formula na0 = Formula::neg(a0);
  if (m == 0) {
    Formula a1 = substitute(a, n, numeral(1));
    ProofTree left = mk::exchange_ab(build_LEM(a0));        // A0 \/ ~A0
    left = mk::weakening_ad(a1, std::move(left));           // A1 \/ (A0 \/ ~A0)
    left = reshape(std::move(left), Formula::lor(a0, Formula::lor(a1, na0)));
    left = mk::negation_ad(std::move(left));                // ~~A0 \/ (A1 \/ ~A0)
    ProofTree right = mk::weakening_ad(na0, build_LEM(a1));  // ~A0 \/ (~A1 \/ A1)
    right = reshape(std::move(right),
                    Formula::lor(Formula::neg(a1), Formula::lor(a1, na0)));
    ProofTree dm = mk::demorgan_abd(std::move(left), std::move(right));
    return assoc_right(std::move(dm));  // (C(0) \/ A1) \/ ~A0
  }

  ProofTree prev = chain_proof(a, n, m - 1);
  Formula am1 = substitute(a, n, numeral(m + 1));

  // Swap A[m] out of the chain conclusion and push the new instance in.
  ProofTree left = mk::weakening_ad(am1, std::move(prev));
  left = mk::exchange_ab(std::move(left));
  left = mk::exchange_cab(std::move(left));
  left = mk::exchange_cabd(std::move(left));
  left = mk::exchange_abd(std::move(left));
  left = assoc_left(std::move(left));   // A[m] \/ ((C \/ A[m+1]) \/ ~A0)
  left = mk::negation_ad(std::move(left));

  Formula chain_prev = inductive_chain(a, n, m - 1);
  ProofTree right = mk::weakening_ad(Formula::lor(chain_prev, na0), build_LEM(am1));
  right = assoc_right(std::move(right));
  right = mk::exchange_cabd(std::move(right));
  right = mk::exchange_cab(std::move(right));
  right = mk::exchange_cabd(std::move(right));
  right = mk::exchange_abd(std::move(right));
  right = assoc_left(std::move(right));  // ~A[m+1] \/ ((C \/ A[m+1]) \/ ~A0)

  ProofTree dm = mk::demorgan_abd(std::move(left), std::move(right));
  dm = mk::exchange_ab(std::move(dm));
  dm = mk::exchange_cab(std::move(dm));
  return mk::exchange_cabd(std::move(dm));  // (C(m) \/ A[m+1]) \/ ~A0
}

}  // namespace

Formula inductive_chain(const Formula& a, Nat n, Nat m) {
  if (m == 0) return chain_link(a, n, 0);
  return Formula::lor(inductive_chain(a, n, m - 1), chain_link(a, n, m));
}

Formula inductive_iterate(const Formula& a, Nat n, Nat m) {
  Formula am = substitute(a, n, numeral(m));
  Formula na0 = Formula::neg(substitute(a, n, numeral(0)));
  return Formula::lor(Formula::lor(am, na0), Formula::neg(step_formula(a, n)));
}

ProofTree derive_iterate(const Formula& a, Nat n, Nat m) {
  Formula a0 = substitute(a, n, numeral(0));
  if (!closed(a0)) {
    throw PreconditionError("derive_iterate: " + to_text(a) + " has free variables besides x" +
                            std::to_string(n));
  }
  Nat alpha = lem_height_nat(a);
  Formula nstep = Formula::neg(step_formula(a, n));
  if (m == 0) {
    ProofTree p = mk::exchange_ab(build_LEM(a0));     // A0 \/ ~A0
    p = mk::weakening_ad(nstep, std::move(p));        // ~Step \/ (A0 \/ ~A0)
    return mk::exchange_ab(std::move(p));             // (A0 \/ ~A0) \/ ~Step
  }

  ProofTree cur = assoc_left(chain_proof(a, n, m - 1));  // C(m-1) \/ (A[m] \/ ~A0)
  for (Nat k = m - 1; k >= 1; --k) {
    cur = mk::exchange_cab(std::move(cur));  // (C(k-1) \/ R) \/ link(k)
    cur = mk::exchange_ab(std::move(cur));   // link(k) \/ (C(k-1) \/ R)
    cur = mk::quantification_ad(step_body(a, n), n, numeral_c(k), std::move(cur));
    cur = mk::exchange_ab(std::move(cur));
    cur = assoc_left(std::move(cur));  // C(k-1) \/ (R \/ ~Step)
  }
  cur = mk::quantification_ad(step_body(a, n), n, numeral_c(0), std::move(cur));
  for (Nat merges = 0; merges + 1 < m; ++merges) {
    cur = assoc_right(std::move(cur));        // (~Step \/ R) \/ ~Step
    cur = mk::exchange_cab(std::move(cur));   // (~Step \/ ~Step) \/ R
    cur = mk::contraction_ad(std::move(cur));  // ~Step \/ R
  }
  cur = mk::exchange_ab(std::move(cur));  // (A[m] \/ ~A0) \/ ~Step
  return mk::pad_height_to(std::move(cur), nat_ord(alpha + 4 * m + 1));
}

ProofTree derive_induction(const Formula& a, Nat n) {
  Formula a0 = substitute(a, n, numeral(0));
  if (!closed(a0)) {
    throw PreconditionError("derive_induction: " + to_text(a) + " has free variables besides x" +
                            std::to_string(n));
  }
  Formula na0 = Formula::neg(a0);
  Formula nstep = Formula::neg(step_formula(a, n));
  Formula side = Formula::lor(na0, nstep);
  Nat degree = num_conn(a) + 1;

  Formula body = a;
  OmegaGen gen = OmegaGen::native([body, n, side](const ClosedTerm& c) {
    Nat m = c.value();
    ProofTree it = derive_iterate(body, n, m);
    it = reshape(std::move(it), Formula::lor(side, substitute(body, n, numeral(m))));
    ProofTree lem = lem_pair(body, n, numeral_c(m), c);  // ~A[m] \/ A[c]
    ProofTree cut = mk::cut_cad(std::move(it), std::move(lem));  // side \/ A[c]
    cut = mk::exchange_ab(std::move(cut));                        // A[c] \/ side
    return mk::pad_height_to(std::move(cut), omega_ord());
  });
  ProofTree w = mk::w_rule_ad(a, side, n, degree, omega_ord(), std::move(gen));
  return reshape(std::move(w),
                 Formula::lor(na0, Formula::lor(nstep, Formula::univ(n, a))));
}

// ---------------------------------------------------------------------------
// Translation

namespace {

ProofTree translate_variant(const PpVariant& v, const ClosureMap& sigma) {
  auto cw = [&sigma](const Formula& f) { return closure_with(f, sigma); };
  return std::visit(
      overloaded{
          [&](const PpFOL1& n) { return derive_FOL1(cw(n.a), cw(n.b)); },
          [&](const PpFOL2& n) { return derive_FOL2(cw(n.a), cw(n.b), cw(n.c)); },
          [&](const PpFOL3& n) { return derive_FOL3(cw(n.a), cw(n.b)); },
          [&](const PpFOL4& n) {
            Formula closured = cw(conclusion_of(PpVariant(n)));
            const Formula& quantified = as_neg(as_lor(closured)->left)->body;
            return derive_FOL4(as_univ(quantified)->body, n.var, ClosedTerm(n.t));
          },
          [&](const PpFOL5& n) {
            Formula closured = cw(conclusion_of(PpVariant(n)));
            const FmLor* rhs = as_lor(as_lor(closured)->right);
            Formula a = as_neg(rhs->left)->body;
            Formula b = as_univ(rhs->right)->body;
            return derive_FOL5(a, b, n.var);
          },
          [&](const PpEquTrans&) { return derive_arith_quantified("eq_trans"); },
          [&](const PpEquSucc&) { return derive_arith_quantified("eq_succ"); },
          [&](const PpNonZero&) { return derive_arith_quantified("non_zero"); },
          [&](const PpSuccEqu&) { return derive_arith_quantified("succ_equ"); },
          [&](const PpPl0&) { return derive_arith_quantified("pl0"); },
          [&](const PpPlS&) { return derive_arith_quantified("plS"); },
          [&](const PpMl0&) { return derive_arith_quantified("ml0"); },
          [&](const PpMlS&) { return derive_arith_quantified("mlS"); },
          [&](const PpInduct& n) {
            Formula closured = cw(conclusion_of(PpVariant(n)));
            const FmLor* rhs = as_lor(as_lor(closured)->right);
            Formula body = as_univ(rhs->right)->body;
            return derive_induction(body, n.var);
          },
          [&](const PpMP& n) {
            return mk::cut_ad(translate_impl(n.arg, sigma), translate_impl(n.impl, sigma));
          },
          [&](const PpUG& n) {
            Formula body = as_univ(cw(Formula::univ(n.var, n.sub.conclusion())))->body;
            Decoration dec = n.sub.decoration();
            PeanoProof sub = n.sub;
            Nat var = n.var;
            OmegaGen gen = OmegaGen::native([sub, var, sigma](const ClosedTerm& t) {
              return translate_impl(sub, sigma.with(var, t));
            });
            ProofTree w = mk::w_rule_a(body, n.var, dec.degree, dec.height, std::move(gen));
            // The base form of generalisation is decorated with w^alpha.
            return mk::pad_height_to(std::move(w),
                                     Ordinal::cons(dec.height, 0, Ordinal::zero()));
          },
          [&](const PpIUG& n) {
            Formula body = as_univ(cw(Formula::univ(n.var, n.sub.conclusion())))->body;
            Decoration dec = n.sub.decoration();
            PeanoGen family = n.family;
            OmegaGen gen = OmegaGen::native([family, sigma](const ClosedTerm& t) {
              return translate_impl(family(t), sigma);
            });
            return mk::w_rule_a(body, n.var, dec.degree, dec.height, std::move(gen));
          },
          [&](const PpStub& n) { return pt::node(cw(n.claim)); },
      },
      v);
}

}  // namespace

ProofTree translate(const PeanoProof& p, const ClosedTerm& c) {
  return translate_impl(p, ClosureMap{c, {}});
}

// ---------------------------------------------------------------------------
// Consistency demonstration

ConsistencyReport demonstrate_consistency(const PeanoProof& proof_a,
                                          const PeanoProof& proof_not_a) {
  Formula a = proof_a.conclusion();
  if (proof_not_a.conclusion() != Formula::neg(a)) {
    throw PreconditionError("demonstrate_consistency: conclusions are not A and ~A");
  }
  ClosedTerm zero = numeral_c(0);
  ProofTree t1 = translate(proof_a, zero);
  ProofTree t2 = translate(proof_not_a, zero);
  CheckResult c1 = check_tree(t1, default_omega_samples());
  CheckResult c2 = check_tree(t2, default_omega_samples());
  ProofTree danger = derive_danger_from_contradiction(t1, t2);

  std::string verdict;
  if (!c1.ok || !c2.ok) {
    verdict = "contradiction rejected:";
    if (!c1.ok) verdict += " proof of A fails at " + c1.failure->to_string() + ";";
    if (!c2.ok) verdict += " proof of ~A fails at " + c2.failure->to_string() + ";";
  } else {
    verdict =
        "both translations check, so cut elimination would produce a degree-0 proof of a "
        "dangerous disjunct, which the danger law rules out";
  }
  return ConsistencyReport{std::move(a), std::move(c1), std::move(c2), std::move(danger),
                           std::move(verdict)};
}

// ---------------------------------------------------------------------------
// Registry

namespace {

std::optional<std::vector<ClosedTerm>> match_arith_instance(const std::string& id,
                                                            const Formula& f) {
  auto closed_of = [](const Term& t) -> std::optional<ClosedTerm> {
    if (!closed_term(t)) return std::nullopt;
    return ClosedTerm(t);
  };
  if (id == "eq_trans") {
    const FmLor* l = as_lor(f);
    if (!l) return std::nullopt;
    const FmNeg* n1 = as_neg(l->left);
    const FmLor* l2 = n1 ? as_lor(l->right) : nullptr;
    if (!l2) return std::nullopt;
    const FmNeg* n2 = as_neg(l2->left);
    const FmAtom* a1 = n1 ? as_atom(n1->body) : nullptr;
    const FmAtom* a2 = n2 ? as_atom(n2->body) : nullptr;
    const FmAtom* a3 = as_atom(l2->right);
    if (!a1 || !a2 || !a3) return std::nullopt;
    if (a1->atom.right != a2->atom.left || a1->atom.left != a3->atom.left ||
        a2->atom.right != a3->atom.right) {
      return std::nullopt;
    }
    auto t0 = closed_of(a1->atom.left), t1 = closed_of(a1->atom.right),
         t2 = closed_of(a2->atom.right);
    if (!t0 || !t1 || !t2) return std::nullopt;
    return std::vector<ClosedTerm>{*t0, *t1, *t2};
  }
  // The remaining axioms are matched against their instance pattern directly.
  const ArithAxiom& ax = arith_axiom(id);
  // Try candidate terms read off the expected positions.
  auto try_terms = [&](std::vector<ClosedTerm> ts) -> std::optional<std::vector<ClosedTerm>> {
    Formula want = ax.body;
    for (Nat i = 0; i < ts.size(); ++i) want = substitute(want, i, ts[i].term());
    if (want == f) return ts;
    return std::nullopt;
  };
  if (id == "non_zero") {
    const FmNeg* n = as_neg(f);
    const FmAtom* at = n ? as_atom(n->body) : nullptr;
    if (!at) return std::nullopt;
    const TmSucc* s = std::get_if<TmSucc>(&at->atom.right.node());
    if (!s) return std::nullopt;
    auto t0 = closed_of(s->arg);
    if (!t0) return std::nullopt;
    return try_terms({*t0});
  }
  if (id == "pl0" || id == "ml0") {
    const FmAtom* at = as_atom(f);
    if (!at) return std::nullopt;
    const TmPlus* pl = std::get_if<TmPlus>(&at->atom.left.node());
    const TmTimes* tm = std::get_if<TmTimes>(&at->atom.left.node());
    const Term* t = pl ? &pl->left : tm ? &tm->left : nullptr;
    if (!t) return std::nullopt;
    auto t0 = closed_of(*t);
    if (!t0) return std::nullopt;
    return try_terms({*t0});
  }
  if (id == "plS" || id == "mlS") {
    const FmAtom* at = as_atom(f);
    if (!at) return std::nullopt;
    const TmPlus* pl = std::get_if<TmPlus>(&at->atom.left.node());
    const TmTimes* tm = std::get_if<TmTimes>(&at->atom.left.node());
    const Term* t0r = pl ? &pl->left : tm ? &tm->left : nullptr;
    const Term* sr = pl ? &pl->right : tm ? &tm->right : nullptr;
    if (!t0r || !sr) return std::nullopt;
    const TmSucc* s = std::get_if<TmSucc>(&sr->node());
    if (!s) return std::nullopt;
    auto t0 = closed_of(*t0r), t1 = closed_of(s->arg);
    if (!t0 || !t1) return std::nullopt;
    return try_terms({*t0, *t1});
  }
  if (id == "eq_succ" || id == "succ_equ") {
    const FmLor* l = as_lor(f);
    const FmNeg* n = l ? as_neg(l->left) : nullptr;
    const FmAtom* at = n ? as_atom(n->body) : nullptr;
    if (!at) return std::nullopt;
    Term lt = at->atom.left, rt = at->atom.right;
    if (id == "succ_equ") {
      const TmSucc* sl = std::get_if<TmSucc>(&lt.node());
      const TmSucc* sr = std::get_if<TmSucc>(&rt.node());
      if (!sl || !sr) return std::nullopt;
      lt = sl->arg;
      rt = sr->arg;
    }
    auto t0 = closed_of(lt), t1 = closed_of(rt);
    if (!t0 || !t1) return std::nullopt;
    return try_terms({*t0, *t1});
  }
  return std::nullopt;
}

}  // namespace

BuilderRegistry standard_registry(bool include_quantified_axioms) {
  BuilderRegistry reg;
  reg.add("axiom", [](const Formula& f) -> std::optional<ProofTree> {
    if (!is_axiom(f)) return std::nullopt;
    return pt::node(f);
  });
  reg.add("lem", [](const Formula& f) -> std::optional<ProofTree> {
    const FmLor* l = as_lor(f);
    const FmNeg* n = l ? as_neg(l->left) : nullptr;
    if (!n || n->body != l->right || !closed(l->right)) return std::nullopt;
    return build_LEM(l->right);
  });
  reg.add("fol1", [](const Formula& f) -> std::optional<ProofTree> {
    const FmLor* l = as_lor(f);
    const FmNeg* na = l ? as_neg(l->left) : nullptr;
    const FmLor* r = l ? as_lor(l->right) : nullptr;
    const FmNeg* nb = r ? as_neg(r->left) : nullptr;
    if (!na || !nb || r->right != na->body) return std::nullopt;
    if (!closed(na->body) || !closed(nb->body)) return std::nullopt;
    return derive_FOL1(na->body, nb->body);
  });
  reg.add("arith-instance", [](const Formula& f) -> std::optional<ProofTree> {
    for (const auto& entry : arith_axioms()) {
      if (auto terms = match_arith_instance(entry.first, f)) {
        return derive_arith(entry.first, *terms);
      }
    }
    return std::nullopt;
  });
  if (include_quantified_axioms) {
    reg.add("arith-quantified", [](const Formula& f) -> std::optional<ProofTree> {
      for (const auto& entry : arith_axioms()) {
        if (f == arith_axiom_formula(entry.first)) {
          return derive_arith_quantified(entry.first);
        }
      }
      return std::nullopt;
    });
  }
  return reg;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

struct PaWriter {
  const std::vector<ClosedTerm>& samples;
  std::string out;

  void quoted(const std::string& s) { out += '"' + s + '"'; }

  void write(const PeanoProof& p) {
    std::visit(
        overloaded{
            [&](const PpFOL1& n) {
              out += "(FOL1 ";
              quoted(to_text(n.a));
              out += ' ';
              quoted(to_text(n.b));
              out += ')';
            },
            [&](const PpFOL2& n) {
              out += "(FOL2 ";
              quoted(to_text(n.a));
              out += ' ';
              quoted(to_text(n.b));
              out += ' ';
              quoted(to_text(n.c));
              out += ')';
            },
            [&](const PpFOL3& n) {
              out += "(FOL3 ";
              quoted(to_text(n.a));
              out += ' ';
              quoted(to_text(n.b));
              out += ')';
            },
            [&](const PpFOL4& n) {
              out += "(FOL4 ";
              quoted(to_text(n.a));
              out += ' ' + std::to_string(n.var) + ' ';
              quoted(to_text(n.t));
              out += ')';
            },
            [&](const PpFOL5& n) {
              out += "(FOL5 ";
              quoted(to_text(n.a));
              out += ' ';
              quoted(to_text(n.b));
              out += ' ' + std::to_string(n.var) + ')';
            },
            [&](const PpEquTrans&) { out += "(equ_trans)"; },
            [&](const PpEquSucc&) { out += "(equ_succ)"; },
            [&](const PpNonZero&) { out += "(non_zero)"; },
            [&](const PpSuccEqu&) { out += "(succ_equ)"; },
            [&](const PpPl0&) { out += "(pl0)"; },
            [&](const PpPlS&) { out += "(plS)"; },
            [&](const PpMl0&) { out += "(ml0)"; },
            [&](const PpMlS&) { out += "(mlS)"; },
            [&](const PpInduct& n) {
              out += "(induct ";
              quoted(to_text(n.a));
              out += ' ' + std::to_string(n.var) + ')';
            },
            [&](const PpMP& n) {
              out += "(MP ";
              write(n.impl);
              out += ' ';
              write(n.arg);
              out += ')';
            },
            [&](const PpUG& n) {
              out += "(UG " + std::to_string(n.var) + ' ';
              write(n.sub);
              out += ')';
            },
            [&](const PpIUG& n) {
              out += "(I_UG " + std::to_string(n.var) + ' ';
              write(n.sub);
              out += " (sampled";
              if (n.family.is_sampled()) {
                for (const auto& [key, proof] : n.family.entries()) {
                  entry(key, proof);
                }
              } else {
                for (const ClosedTerm& t : samples) {
                  entry(t, n.family(t));
                }
              }
              out += "))";
            },
            [&](const PpStub& n) {
              out += "(stub ";
              quoted(to_text(n.claim));
              out += ')';
            },
        },
        p.node());
  }

  void entry(const ClosedTerm& key, const PeanoProof& proof) {
    out += " (";
    quoted(to_text(key.term()));
    out += ' ';
    write(proof);
    out += ')';
  }
};

struct PaParser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, pos, line, col);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string symbol() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (pos == start) fail("expected a symbol");
    return std::string(text.substr(start, pos - start));
  }

  std::string quoted() {
    skip_ws();
    if (pos >= text.size() || text[pos] != '"') fail("expected a quoted string");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != '"') ++pos;
    if (pos >= text.size()) fail("unterminated quoted string");
    std::string s(text.substr(start, pos - start));
    ++pos;
    return s;
  }

  Nat nat() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail("expected a number");
    }
    Nat n = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      n = n * 10 + static_cast<Nat>(text[pos] - '0');
      ++pos;
    }
    return n;
  }

  Formula formula() {
    std::size_t at = pos;
    std::string s = quoted();
    try {
      return parse_formula(s);
    } catch (const ParseError& e) {
      pos = at;
      fail(std::string("bad formula: ") + e.what());
    }
  }

  Term term() {
    std::size_t at = pos;
    std::string s = quoted();
    try {
      return parse_term(s);
    } catch (const ParseError& e) {
      pos = at;
      fail(std::string("bad term: ") + e.what());
    }
  }

  PeanoProof proof() {
    expect('(');
    std::string head = symbol();
    PeanoProof p = dispatch(head);
    expect(')');
    return p;
  }

  PeanoProof dispatch(const std::string& head) {
    if (head == "FOL1") {
      Formula a = formula();
      return pa::fol1(std::move(a), formula());
    }
    if (head == "FOL2") {
      Formula a = formula(), b = formula();
      return pa::fol2(std::move(a), std::move(b), formula());
    }
    if (head == "FOL3") {
      Formula a = formula();
      return pa::fol3(std::move(a), formula());
    }
    if (head == "FOL4") {
      Formula a = formula();
      Nat var = nat();
      Term t = term();
      if (!closed_term(t)) fail("FOL4 instance term must be closed");
      return pa::fol4(std::move(a), var, ClosedTerm(std::move(t)));
    }
    if (head == "FOL5") {
      Formula a = formula(), b = formula();
      return pa::fol5(std::move(a), std::move(b), nat());
    }
    if (head == "equ_trans") return pa::equ_trans();
    if (head == "equ_succ") return pa::equ_succ();
    if (head == "non_zero") return pa::non_zero();
    if (head == "succ_equ") return pa::succ_equ();
    if (head == "pl0") return pa::pl0();
    if (head == "plS") return pa::plS();
    if (head == "ml0") return pa::ml0();
    if (head == "mlS") return pa::mlS();
    if (head == "induct") {
      Formula a = formula();
      return pa::induct(std::move(a), nat());
    }
    if (head == "MP") {
      PeanoProof impl = proof();
      return pa::mp(std::move(impl), proof());
    }
    if (head == "UG") {
      Nat var = nat();
      return pa::ug(proof(), var);
    }
    if (head == "I_UG") {
      Nat var = nat();
      PeanoProof sub = proof();
      expect('(');
      if (symbol() != "sampled") fail("expected 'sampled'");
      std::vector<std::pair<ClosedTerm, PeanoProof>> entries;
      while (peek() == '(') {
        expect('(');
        Term key = term();
        if (!closed_term(key)) fail("sample term must be closed");
        PeanoProof premise = proof();
        expect(')');
        entries.emplace_back(ClosedTerm(std::move(key)), std::move(premise));
      }
      expect(')');
      return pa::i_ug(std::move(sub), var, PeanoGen::sampled(std::move(entries)));
    }
    if (head == "stub") return pa::stub(formula());
    fail("unknown proof constructor '" + head + "'");
  }
};

}  // namespace

std::string to_text(const PeanoProof& p, const std::vector<ClosedTerm>& samples) {
  PaWriter w{samples, {}};
  w.write(p);
  return w.out;
}

PeanoProof parse_peano_proof(std::string_view text) {
  PaParser p{text};
  PeanoProof result = p.proof();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input after proof");
  return result;
}

}  // namespace paw
