#include "doctest.h"
#include "paw/cutelim.hpp"
#include "paw/peano.hpp"
#include "paw/prooftree_text.hpp"

using namespace paw;

namespace {

Formula atom00() { return Formula::atom(Term::zero(), Term::zero()); }
Formula atom01() { return Formula::atom(Term::zero(), Term::succ(Term::zero())); }
Formula imp(Formula a, Formula b) {
  return Formula::lor(Formula::neg(std::move(a)), std::move(b));
}

}  // namespace

TEST_CASE("FOL1 derivation matches the worked example") {
  Formula a = atom00(), b = atom01();
  ProofTree p = derive_FOL1(a, b);
  CHECK(ptree_formula(p) == imp(a, imp(b, a)));
  CHECK(ptree_deg(p) == 0);
  CHECK(ptree_ord(p) == nat_ord(2ull));  // LEM height 1, one weakening
  CHECK(well_formed(p));
}

TEST_CASE("FOL2 needs one cut") {
  Formula a = atom00(), b = atom01(), c = Formula::atom(numeral(2), numeral(2));
  ProofTree p = derive_FOL2(a, b, c);
  CHECK(ptree_formula(p) == imp(imp(a, imp(b, c)), imp(imp(a, b), imp(a, c))));
  CHECK(ptree_deg(p) == num_conn(Formula::neg(b)));
  CHECK(well_formed(p));
  CHECK(contains_cut(p, default_omega_samples()));
}

TEST_CASE("FOL3 is cut free") {
  Formula a = atom00(), b = atom01();
  ProofTree p = derive_FOL3(a, b);
  Formula na = Formula::neg(a);
  CHECK(ptree_formula(p) == imp(imp(na, Formula::neg(b)), imp(imp(na, b), a)));
  CHECK(ptree_deg(p) == 0);
  CHECK(well_formed(p));
  CHECK_FALSE(contains_cut(p, default_omega_samples()));
}

TEST_CASE("FOL4 quantifies a LEM instance") {
  Formula a = Formula::atom(Term::var(0), Term::var(0));
  ClosedTerm m{Term::succ(Term::zero())};
  ProofTree p = derive_FOL4(a, 0, m);
  Formula inst = Formula::atom(m.term(), m.term());
  CHECK(ptree_formula(p) == Formula::lor(Formula::neg(Formula::univ(0, a)), inst));
  CHECK(ptree_deg(p) == 0);
  CHECK(ptree_ord(p) == nat_ord(2ull));
  CHECK(well_formed(p));
}

TEST_CASE("FOL5 concludes with the omega rule") {
  Formula a = atom00();
  Formula b = Formula::atom(Term::var(1), Term::var(1));
  ProofTree p = derive_FOL5(a, b, 1);
  Formula f = imp(a, b);
  CHECK(ptree_formula(p) ==
        Formula::lor(Formula::neg(Formula::univ(1, f)),
                     Formula::lor(Formula::neg(a), Formula::univ(1, b))));
  CHECK(ptree_deg(p) == 0);
  CHECK(well_formed(p));
  CHECK_THROWS_AS(derive_FOL5(Formula::atom(Term::var(1), Term::zero()), b, 1),
                  PreconditionError);
}

TEST_CASE("arithmetic axiom instances, both equality outcomes") {
  ClosedTerm zero = numeral_c(0);
  ClosedTerm zero2{Term::plus(Term::zero(), Term::zero())};
  ClosedTerm one = numeral_c(1);
  ClosedTerm two = numeral_c(2);

  // eq_trans when t0 and t1 agree: LEM_term weakened once.
  ProofTree a = derive_arith("eq_trans", {zero, zero2, two});
  CHECK(ptree_ord(a) == nat_ord(2ull));
  CHECK(ptree_deg(a) == 0);
  CHECK(well_formed(a));
  // eq_trans when they differ: weakening of the initial sequent, padded.
  ProofTree b = derive_arith("eq_trans", {zero, one, two});
  CHECK(ptree_ord(b) == nat_ord(2ull));
  CHECK(well_formed(b));

  ProofTree c = derive_arith("eq_succ", {zero, zero2});
  CHECK(ptree_ord(c) == nat_ord(1ull));
  CHECK(well_formed(c));
  ProofTree d = derive_arith("eq_succ", {zero, one});
  CHECK(ptree_ord(d) == nat_ord(1ull));
  CHECK(well_formed(d));
  ProofTree e = derive_arith("succ_equ", {one, one});
  CHECK(well_formed(e));
  ProofTree f = derive_arith("succ_equ", {one, two});
  CHECK(well_formed(f));

  // The remaining five are initial sequents after instantiation.
  for (const char* id : {"non_zero", "pl0", "ml0"}) {
    ProofTree g = derive_arith(id, {two});
    CHECK(ptree_ord(g) == Ordinal::zero());
    CHECK(well_formed(g));
  }
  for (const char* id : {"plS", "mlS"}) {
    ProofTree g = derive_arith(id, {two, one});
    CHECK(ptree_ord(g) == Ordinal::zero());
    CHECK(well_formed(g));
  }
  CHECK_THROWS_AS(derive_arith("eq_trans", {zero}), PreconditionError);
  CHECK_THROWS_AS(derive_arith("nope", {}), PreconditionError);
}

TEST_CASE("quantified arithmetic axioms") {
  struct Expect {
    const char* id;
    unsigned long long height;
  };
  for (Expect ex : {Expect{"eq_trans", 5}, Expect{"eq_succ", 3}, Expect{"succ_equ", 3},
                    Expect{"non_zero", 1}, Expect{"pl0", 1}, Expect{"plS", 2}, Expect{"ml0", 1},
                    Expect{"mlS", 2}}) {
    ProofTree p = derive_arith_quantified(ex.id);
    CHECK(ptree_formula(p) == arith_axiom_formula(ex.id));
    CHECK(ptree_deg(p) == 0);
    CHECK(ptree_ord(p) == nat_ord(ex.height));
    CHECK(check_tree(p, make_omega_samples(3)).ok);
  }
}

TEST_CASE("inductive chain and iterate formulas") {
  Formula a = Formula::atom(Term::var(0), Term::zero());  // x0 = 0
  auto inst = [&](Nat k) { return Formula::atom(numeral(k), Term::zero()); };
  Formula link0 = Formula::neg(Formula::lor(Formula::neg(inst(0)), inst(1)));
  CHECK(inductive_chain(a, 0, 0) == link0);
  Formula link1 = Formula::neg(Formula::lor(Formula::neg(inst(1)), inst(2)));
  CHECK(inductive_chain(a, 0, 1) == Formula::lor(link0, link1));

  Formula step = Formula::univ(
      0, Formula::lor(Formula::neg(a), Formula::atom(Term::succ(Term::var(0)), Term::zero())));
  CHECK(inductive_iterate(a, 0, 0) ==
        Formula::lor(Formula::lor(inst(0), Formula::neg(inst(0))), Formula::neg(step)));
  CHECK(inductive_iterate(a, 0, 2) ==
        Formula::lor(Formula::lor(inst(2), Formula::neg(inst(0))), Formula::neg(step)));
}

TEST_CASE("iterate proofs carry the alpha + 4m + 1 heights") {
  Formula a = Formula::atom(Term::var(0), Term::var(0));  // x0 = x0
  Nat alpha = 2 * num_conn(a) + 1;
  for (Nat m = 0; m <= 6; ++m) {
    ProofTree p = derive_iterate(a, 0, m);
    CHECK(ptree_formula(p) == inductive_iterate(a, 0, m));
    CHECK(ptree_deg(p) == 0);
    CHECK(ptree_ord(p) == nat_ord(alpha + 4 * m + 1));
    CHECK(well_formed(p));
  }
}

TEST_CASE("induction schema derivation") {
  Formula a = Formula::atom(Term::var(0), Term::var(0));
  ProofTree p = derive_induction(a, 0);
  CHECK(ptree_deg(p) == num_conn(a) + 1);
  Ordinal omega = Ordinal::cons(nat_ord(1ull), 0, Ordinal::zero());
  CHECK(ptree_ord(p) == succ(omega));
  CHECK(check_tree(p, make_omega_samples(3)).ok);
}

TEST_CASE("peano proofs memoize their translation decorations") {
  PeanoProof fol1 = pa::fol1(atom00(), atom01());
  CHECK(fol1.conclusion() == imp(atom00(), imp(atom01(), atom00())));
  CHECK(fol1.decoration().degree == 0);
  CHECK(fol1.decoration().height == nat_ord(2ull));

  PeanoProof pl0 = pa::pl0();
  CHECK(pl0.decoration().degree == 0);
  CHECK(pl0.decoration().height == nat_ord(1ull));
}

TEST_CASE("translate: closure of the conclusion, independent of the term for closed ones") {
  PeanoProof p = pa::fol1(atom00(), atom01());
  ProofTree t0 = translate(p, numeral_c(0));
  ProofTree t7 = translate(p, numeral_c(7));
  CHECK(ptree_formula(t0) == p.conclusion());
  CHECK(to_text(t0) == to_text(t7));
  CHECK(well_formed(t0));
}

TEST_CASE("translate MP as cut_ad") {
  PeanoProof impl = pa::fol1(atom00(), atom01());  // ~A \/ (~B \/ A)
  PeanoProof arg = pa::stub(atom00());
  PeanoProof mp = pa::mp(impl, arg);
  CHECK(mp.conclusion() == imp(atom01(), atom00()));
  ProofTree t = translate(mp, numeral_c(0));
  CHECK(std::holds_alternative<PtCutAD>(t.node()));
  CHECK(well_formed(t));  // the stub claims an axiom, so the leaf checks
  // Decoration law: degree max(d1, d2, num_conn(~A)).
  CHECK(mp.decoration().degree ==
        std::max<Nat>(num_conn(Formula::neg(atom00())),
                      std::max(impl.decoration().degree, arg.decoration().degree)));
  CHECK_THROWS_AS(pa::mp(arg, arg), PreconditionError);
}

TEST_CASE("generalisation translates through the omega rule") {
  Formula open = Formula::atom(Term::var(0), Term::var(0));
  PeanoProof base = pa::stub(open);
  PeanoProof ug = pa::ug(base, 0);
  CHECK(ug.conclusion() == Formula::univ(0, open));
  ProofTree t = translate(ug, numeral_c(0));
  CHECK(ptree_formula(t) == Formula::univ(0, open));
  CHECK(well_formed(t));  // every instance leaf t = t is an axiom
  // Base form decorated with w^alpha (here alpha = 0, so height 1).
  CHECK(ug.decoration().height == nat_ord(1ull));

  PeanoGen family = PeanoGen::native(
      [open](const ClosedTerm& t) { return pa::stub(substitute(open, 0, t.term())); });
  PeanoProof iug = pa::i_ug(base, 0, family);
  ProofTree ti = translate(iug, numeral_c(0));
  CHECK(ptree_formula(ti) == ptree_formula(t));
  CHECK(well_formed(ti));

  // With a taller premise the two decorations differ: w^alpha vs alpha + 1.
  PeanoProof taller = pa::mp(pa::stub(imp(open, Formula::atom(Term::var(0), Term::zero()))),
                             pa::stub(open));
  PeanoProof ug2 = pa::ug(taller, 0);
  CHECK(ug2.decoration().height == Ordinal::cons(nat_ord(2ull), 0, Ordinal::zero()));
  PeanoGen family2 = PeanoGen::native([taller](const ClosedTerm&) { return taller; });
  // family2 does not match the substituted conclusions, so I_UG rejects it.
  CHECK_THROWS_AS(pa::i_ug(taller, 0, family2), PreconditionError);
}

TEST_CASE("translating the induct constructor") {
  Formula a = Formula::atom(Term::var(0), Term::var(0));
  PeanoProof ind = pa::induct(a, 0);
  ProofTree t = translate(ind, numeral_c(0));
  CHECK(ptree_formula(t) == ind.conclusion());
  CHECK(check_tree(t, make_omega_samples(3)).ok);
}

TEST_CASE("all axiom constructors translate to well-formed closures") {
  std::vector<PeanoProof> axioms = {
      pa::fol1(atom00(), atom01()),
      pa::fol2(atom00(), atom01(), atom00()),
      pa::fol3(atom00(), atom01()),
      pa::fol4(Formula::atom(Term::var(0), Term::var(0)), 0, numeral_c(1)),
      pa::fol5(atom00(), Formula::atom(Term::var(1), Term::var(1)), 1),
      pa::equ_trans(),
      pa::equ_succ(),
      pa::non_zero(),
      pa::succ_equ(),
      pa::pl0(),
      pa::plS(),
      pa::ml0(),
      pa::mlS(),
      pa::induct(Formula::atom(Term::var(0), Term::var(0)), 0),
  };
  CHECK(axioms.size() == 14);
  ClosedTerm c = numeral_c(0);
  for (const PeanoProof& p : axioms) {
    ProofTree t = translate(p, c);
    CHECK(ptree_formula(t) == closure(p.conclusion(), c));
    CHECK(check_tree(t, make_omega_samples(2)).ok);
    CHECK(ptree_deg(t) == p.decoration().degree);
    CHECK(ptree_ord(t) == p.decoration().height);
  }
}

TEST_CASE("translating an open FOL axiom closes it first") {
  // FOL1 with an open A: the closure replaces x3 by the chosen term.
  Formula open_a = Formula::atom(Term::var(3), Term::zero());
  PeanoProof p = pa::fol1(open_a, atom00());
  ClosedTerm two = numeral_c(2);
  ProofTree t = translate(p, two);
  Formula closed_a = Formula::atom(numeral(2), Term::zero());
  CHECK(ptree_formula(t) == imp(closed_a, imp(atom00(), closed_a)));
  CHECK(well_formed(t));
}

TEST_CASE("consistency demonstration pinpoints the failing side") {
  PeanoProof good = pa::pl0();
  PeanoProof bad = pa::stub(Formula::neg(good.conclusion()));
  ConsistencyReport report = demonstrate_consistency(good, bad);
  CHECK(report.first.ok);
  CHECK_FALSE(report.second.ok);
  CHECK(report.second.failure->rule == "node");
  CHECK(ptree_formula(report.danger) == danger_formula());
  CHECK(ptree_deg(report.danger) >= 1);
  CHECK(report.verdict.find("rejected") != std::string::npos);

  PeanoProof stub_a = pa::stub(atom01());
  PeanoProof stub_na = pa::stub(Formula::neg(atom01()));
  ConsistencyReport both = demonstrate_consistency(stub_a, stub_na);
  CHECK_FALSE(both.first.ok);
  CHECK(both.second.ok);  // ~(0 = S(0)) happens to be an axiom

  CHECK_THROWS_AS(demonstrate_consistency(good, pa::stub(atom00())), PreconditionError);
}

TEST_CASE("peano proof text round trip") {
  PeanoProof p = pa::mp(pa::fol1(atom00(), atom01()), pa::stub(atom00()));
  std::string text = to_text(p);
  PeanoProof back = parse_peano_proof(text);
  CHECK(to_text(back) == text);
  CHECK(back.conclusion() == p.conclusion());

  PeanoProof ax = pa::equ_trans();
  CHECK(to_text(ax) == "(equ_trans)");
  CHECK(parse_peano_proof("(equ_trans)").conclusion() == ax.conclusion());

  // I_UG serializes its family at the sample terms.
  Formula open = Formula::atom(Term::var(0), Term::var(0));
  PeanoGen family = PeanoGen::native(
      [open](const ClosedTerm& t) { return pa::stub(substitute(open, 0, t.term())); });
  PeanoProof iug = pa::i_ug(pa::stub(open), 0, family);
  std::string itext = to_text(iug);
  PeanoProof iback = parse_peano_proof(itext);
  CHECK(to_text(iback) == itext);
  CHECK(iback.conclusion() == iug.conclusion());

  CHECK_THROWS_AS(parse_peano_proof("(FOL9)"), ParseError);
}

TEST_CASE("FOL derivations tolerate repeated instance formulas") {
  Formula a = Formula::atom(Term::zero(), Term::zero());
  ProofTree p2 = derive_FOL2(a, a, a);
  CHECK(well_formed(p2));
  ProofTree p3 = derive_FOL3(a, a);
  CHECK(well_formed(p3));
  ProofTree p1 = derive_FOL1(a, a);
  CHECK(well_formed(p1));
  PeanoProof mp = pa::mp(pa::fol1(a, a), pa::stub(a));
  CHECK(well_formed(translate(mp, numeral_c(0))));
}

TEST_CASE("LEM over a vacuous universal") {
  Formula vac = Formula::univ(3, Formula::atom(Term::zero(), Term::zero()));
  ProofTree p = build_LEM(vac);
  CHECK(ptree_ord(p) == nat_ord(3ull));
  CHECK(well_formed(p));
}

TEST_CASE("nested generalisation stacks omega powers") {
  Formula open2 = Formula::atom(Term::var(0), Term::var(1));
  PeanoProof inner = pa::ug(pa::stub(open2), 0);   // forall x0, x0 = x1
  PeanoProof outer = pa::ug(inner, 1);             // forall x1, forall x0, x0 = x1
  CHECK(outer.conclusion() == Formula::univ(1, Formula::univ(0, open2)));
  // Heights: stub 0, inner w^0 = 1, outer w^1 = w.
  CHECK(inner.decoration().height == nat_ord(1ull));
  CHECK(outer.decoration().height == Ordinal::cons(nat_ord(1ull), 0, Ordinal::zero()));
  ProofTree t = translate(outer, numeral_c(0));
  CHECK(ptree_formula(t) == outer.conclusion());
  // Not well-formed (the leaves claim open equations made false by closure
  // at distinct instances), but the structure and decorations line up.
  CHECK(ptree_ord(t) == outer.decoration().height);
}

TEST_CASE("cut elimination clears the modus ponens translation") {
  PeanoProof mp = pa::mp(pa::fol1(atom00(), atom01()), pa::stub(atom00()));
  ProofTree t = translate(mp, numeral_c(0));
  REQUIRE(well_formed(t));
  REQUIRE(ptree_deg(t) == 1);
  ProofTree out = cut_elim(t);
  CHECK(ptree_deg(out) == 0);
  CHECK(ptree_formula(out) == ptree_formula(t));
  CHECK(ptree_ord(out) == exp2(ptree_ord(t)));
  CHECK(well_formed(out));
  CHECK_FALSE(contains_cut(out, default_omega_samples()));
}

TEST_CASE("cut elimination clears the induction schema translation") {
  // The schema's omega premises sit at height omega; their reduction lands
  // exactly on the fixed point 2^omega = omega.
  Formula a = Formula::atom(Term::var(0), Term::var(0));
  ProofTree t = derive_induction(a, 0);
  REQUIRE(ptree_deg(t) == 1);
  Ordinal omega = Ordinal::cons(nat_ord(1ull), 0, Ordinal::zero());
  REQUIRE(ptree_ord(t) == succ(omega));
  ProofTree out = cut_elim(t);
  CHECK(ptree_deg(out) == 0);
  CHECK(ptree_formula(out) == ptree_formula(t));
  CHECK(ptree_ord(out) == mult(omega, nat_ord(2ull)));  // 2^(omega + 1)
  CHECK(check_tree(out, make_omega_samples(3)).ok);
}
