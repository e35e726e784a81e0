#include <random>

#include "doctest.h"
#include "paw/derivations.hpp"
#include "paw/peano.hpp"
#include "paw/prooftree_text.hpp"

using namespace paw;

namespace {

Formula atom00() { return Formula::atom(Term::zero(), Term::zero()); }
Formula atom01() { return Formula::atom(Term::zero(), Term::succ(Term::zero())); }

// Closed formulas with a bounded connective count, mixing all constructors.
struct ClosedGen {
  std::mt19937_64 rng{11};
  Nat pick(Nat n) { return std::uniform_int_distribution<Nat>(0, n - 1)(rng); }

  Term closed_term(int depth) {
    if (depth == 0 || pick(2) == 0) return numeral(pick(3));
    switch (pick(3)) {
      case 0:
        return Term::succ(closed_term(depth - 1));
      case 1:
        return Term::plus(closed_term(depth - 1), closed_term(depth - 1));
      default:
        return Term::times(closed_term(depth - 1), closed_term(depth - 1));
    }
  }

  Formula closed_formula(Nat conn) {
    if (conn == 0) return Formula::atom(closed_term(1), closed_term(1));
    switch (pick(3)) {
      case 0:
        return Formula::neg(closed_formula(conn - 1));
      case 1: {
        Nat left = pick(conn);
        return Formula::lor(closed_formula(left), closed_formula(conn - 1 - left));
      }
      default: {
        // A universal whose body uses the bound variable.
        Nat var = 3 + pick(2);
        Formula body = conn == 1 ? Formula::atom(Term::var(var), closed_term(1))
                                 : Formula::neg(  // keep the budget
                                       Formula::atom(Term::var(var), closed_term(1)));
        Nat used = num_conn(body);
        while (used + 1 < conn) {
          body = Formula::neg(body);
          ++used;
        }
        return Formula::univ(var, body);
      }
    }
  }
};

}  // namespace

TEST_CASE("LEM base cases have the paper decorations") {
  ProofTree p = build_LEM(atom00());
  CHECK(ptree_formula(p) == Formula::lor(Formula::neg(atom00()), atom00()));
  CHECK(ptree_deg(p) == 0);
  CHECK(ptree_ord(p) == nat_ord(1ull));
  CHECK(well_formed(p));

  ProofTree q = build_LEM(Formula::neg(atom01()));
  CHECK(ptree_deg(q) == 0);
  CHECK(ptree_ord(q) == nat_ord(3ull));
  CHECK(well_formed(q));

  ProofTree u = build_LEM(Formula::univ(0, Formula::atom(Term::var(0), Term::var(0))));
  CHECK(ptree_deg(u) == 0);
  CHECK(ptree_ord(u) == nat_ord(3ull));
  CHECK(std::holds_alternative<PtExchangeAB>(u.node()));
  CHECK(well_formed(u));

  CHECK_THROWS_AS(build_LEM(Formula::atom(Term::var(0), Term::zero())), PreconditionError);
}

TEST_CASE("LEM decoration law on generated closed formulas") {
  ClosedGen gen;
  int trees = 0;
  for (int i = 0; i < 60; ++i) {
    Formula a = gen.closed_formula(gen.pick(5));
    REQUIRE(closed(a));
    ProofTree p = build_LEM(a);
    Nat n = num_conn(a);
    CHECK(ptree_deg(p) == 0);
    CHECK(ptree_ord(p) == nat_ord(2 * n + 1));
    CHECK(ptree_formula(p) == Formula::lor(Formula::neg(a), a));
    CHECK(well_formed(p));
    CHECK_FALSE(contains_cut(p, make_omega_samples(2)));
    ++trees;
  }
  CHECK(trees >= 50);
}

TEST_CASE("extended LEM over equal terms") {
  // A = (x0 = 0), s = 0 + 0, t = 0.
  Formula a = Formula::atom(Term::var(0), Term::zero());
  ClosedTerm s{Term::plus(Term::zero(), Term::zero())};
  ClosedTerm t{Term::zero()};
  ProofTree p = build_LEM_term(a, 0, s, t);
  Formula want = Formula::lor(Formula::neg(Formula::atom(s.term(), Term::zero())),
                              Formula::atom(Term::zero(), Term::zero()));
  CHECK(ptree_formula(p) == want);
  CHECK(ptree_deg(p) == 0);
  CHECK(ptree_ord(p) == nat_ord(1ull));
  CHECK(well_formed(p));

  // s = t coincides with plain LEM of the substituted formula.
  ProofTree same = build_LEM_term(a, 0, t, t);
  ProofTree lem = build_LEM(substitute(a, 0, t.term()));
  CHECK(ptree_formula(same) == ptree_formula(lem));
  CHECK(ptree_ord(same) == ptree_ord(lem));

  // Negation case adds two.
  Formula na = Formula::neg(a);
  ProofTree q = build_LEM_term(na, 0, t, s);
  CHECK(ptree_ord(q) == nat_ord(3ull));
  CHECK(ptree_formula(q) ==
        Formula::lor(Formula::neg(Formula::neg(Formula::atom(Term::zero(), Term::zero()))),
                     Formula::neg(Formula::atom(s.term(), Term::zero()))));
  CHECK(well_formed(q));

  // Like LEM, the construction is cut free.
  CHECK_FALSE(contains_cut(q, make_omega_samples(2)));

  // Distinct precondition failures.
  CHECK_THROWS_WITH_AS(build_LEM_term(a, 0, t, ClosedTerm{numeral(1)}),
                       doctest::Contains("correct closed equation"), PreconditionError);
  CHECK_THROWS_WITH_AS(build_LEM_term(atom00(), 0, t, t),
                       doctest::Contains("free variables"), PreconditionError);
}

TEST_CASE("associativity round trips and preserves decorations") {
  // Prove ((0=0) \/ (0=0)) \/ (0=0) by two weakenings, then reassociate.
  ProofTree base = pt::node(atom00());
  ProofTree p = mk::weakening_ad(atom00(), base);  // (0=0) \/ (0=0)
  ProofTree left_assoc = mk::exchange_ab(mk::weakening_ad(atom00(), mk::exchange_ab(p)));
  CHECK(ptree_formula(left_assoc) ==
        Formula::lor(Formula::lor(atom00(), atom00()), atom00()));
  Decoration before = decoration(left_assoc);
  ProofTree round = assoc_right(assoc_left(left_assoc));
  CHECK(ptree_formula(round) == ptree_formula(left_assoc));
  CHECK(decoration(round).degree == before.degree);
  CHECK(decoration(round).height == before.height);
  CHECK(well_formed(round));

  ProofTree reassoc = assoc_left(left_assoc);
  CHECK(ptree_formula(reassoc) == Formula::lor(atom00(), Formula::lor(atom00(), atom00())));
  CHECK(decoration(reassoc).height == before.height);
}

TEST_CASE("weaken wrappers") {
  ProofTree p = weaken(atom00(), pt::node(atom00()));
  CHECK(ptree_formula(p) == Formula::lor(atom00(), atom00()));
  CHECK(ptree_ord(p) == nat_ord(1ull));
  CHECK(well_formed(p));

  // The closed variant of the worked example: weaken then exchange.
  Formula sum = Formula::atom(Term::plus(Term::zero(), Term::zero()), Term::zero());
  ProofTree sample = weaken_right(atom00(), pt::node(sum));
  CHECK(ptree_formula(sample) == Formula::lor(sum, atom00()));
  CHECK(ptree_ord(sample) == nat_ord(1ull));
  CHECK(ptree_deg(sample) == 0);
  CHECK(well_formed(sample));

  ProofTree twice = weaken(atom01(), weaken(atom00(), pt::node(atom00())));
  CHECK(ptree_ord(twice) == nat_ord(2ull));

  CHECK_THROWS_AS(weaken(Formula::atom(Term::var(1), Term::zero()), pt::node(atom00())),
                  PreconditionError);
}

TEST_CASE("reshape reaches arbitrary rearrangements") {
  // Prove a five-component disjunction by weakenings, then permute it.
  std::vector<Formula> leaves = {
      atom00(), atom01(), Formula::neg(atom01()),
      Formula::atom(numeral(2), numeral(2)), Formula::atom(numeral(3), numeral(3))};
  Formula f = leaves[0];
  ProofTree p = pt::node(leaves[0]);
  for (int i = 1; i < 5; ++i) {
    p = mk::exchange_ab(mk::weakening_ad(leaves[i], p));
    f = Formula::lor(f, leaves[i]);
  }
  REQUIRE(ptree_formula(p) == f);

  // Fully right-nested target in reverse order.
  Formula target = leaves[0];
  for (int i = 1; i < 5; ++i) target = Formula::lor(leaves[i], target);
  ProofTree q = reshape(p, target);
  CHECK(ptree_formula(q) == target);
  CHECK(decoration(q).height == decoration(p).height);
  CHECK(decoration(q).degree == decoration(p).degree);
  CHECK(well_formed(q));

  // Identity reshape returns the tree unchanged.
  ProofTree same = reshape(p, ptree_formula(p));
  CHECK(to_text(same) == to_text(p));

  // Not a rearrangement.
  CHECK_THROWS_AS(reshape(p, Formula::lor(atom00(), atom00())), PreconditionError);
}

TEST_CASE("exchange-only transformations never change decorations") {
  ClosedGen gen;
  for (int i = 0; i < 30; ++i) {
    Formula a = gen.closed_formula(0), b = gen.closed_formula(1), c = gen.closed_formula(0);
    ProofTree p = mk::weakening_ad(c, mk::weakening_ad(b, pt::node(a)));
    p = assoc_right(p);  // (c \/ b) \/ a
    Decoration d0 = decoration(p);
    Formula flipped = Formula::lor(Formula::lor(a, c), b);
    ProofTree q = reshape(p, flipped);
    CHECK(decoration(q).degree == d0.degree);
    CHECK(decoration(q).height == d0.height);
  }
}

TEST_CASE("derivation recipes validate builder output") {
  paw::BuilderRegistry reg = paw::standard_registry();
  Formula lem_target = Formula::lor(Formula::neg(atom00()), atom00());
  CHECK(recipe_holds({lem_target, "lem", {0, nat_ord(1ull)}}, reg));
  CHECK_FALSE(recipe_holds({lem_target, "lem", {0, nat_ord(2ull)}}, reg));
  CHECK_FALSE(recipe_holds({lem_target, "missing-builder", {0, nat_ord(1ull)}}, reg));
  CHECK(recipe_holds({atom00(), "axiom", {0, Ordinal::zero()}}, reg));
}
