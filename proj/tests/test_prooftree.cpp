#include <atomic>
#include <random>
#include <thread>
#include "doctest.h"
#include "paw/build.hpp"
#include "paw/derivations.hpp"
#include "paw/peano.hpp"
#include "paw/prooftree_text.hpp"

using namespace paw;

namespace {

Formula atom01() { return Formula::atom(Term::zero(), Term::succ(Term::zero())); }
Formula atom00() { return Formula::atom(Term::zero(), Term::zero()); }
Formula x1_eq_0() { return Formula::atom(Term::var(1), Term::zero()); }
Formula sum_eq_0() {
  return Formula::atom(Term::plus(Term::zero(), Term::zero()), Term::zero());
}

// The worked weakening-then-exchange deduction of (0 + 0 = 0) \/ (x1 = 0).
ProofTree sample_tree() {
  return pt::exchange_ab(
      x1_eq_0(), sum_eq_0(), 0, nat_ord(1ull),
      pt::weakening_ad(x1_eq_0(), sum_eq_0(), 0, Ordinal::zero(), pt::node(sum_eq_0())));
}

// Same deduction with a closed weakened formula.
ProofTree sample_tree_closed() {
  return pt::exchange_ab(
      atom00(), sum_eq_0(), 0, nat_ord(1ull),
      pt::weakening_ad(atom00(), sum_eq_0(), 0, Ordinal::zero(), pt::node(sum_eq_0())));
}

}  // namespace

TEST_CASE("extractors on the sample weakening-exchange tree") {
  ProofTree p = sample_tree();
  CHECK(ptree_formula(p) == Formula::lor(sum_eq_0(), x1_eq_0()));
  CHECK(ptree_deg(p) == 0);
  CHECK(ptree_ord(p) == nat_ord(1ull));
}

TEST_CASE("node decorations") {
  ProofTree n = pt::node(atom00());
  CHECK(ptree_formula(n) == atom00());
  CHECK(ptree_deg(n) == 0);
  CHECK(ptree_ord(n) == Ordinal::zero());
  CHECK(well_formed(n));
  CHECK_FALSE(well_formed(pt::node(atom01())));
}

TEST_CASE("cut decorations follow the degree and height recipe") {
  ProofTree left = mk::exchange_ab(mk::weakening_ad(atom01(), pt::node(atom00())));
  REQUIRE(ptree_formula(left) == Formula::lor(atom00(), atom01()));
  REQUIRE(ptree_ord(left) == nat_ord(1ull));
  ProofTree right = pt::node(Formula::neg(atom01()));
  ProofTree cut = mk::cut_ca(left, right);
  CHECK(ptree_formula(cut) == atom00());
  CHECK(ptree_deg(cut) == 1);  // num_conn(~(0 = S(0))) = 1
  CHECK(ptree_ord(cut) == nat_ord(2ull));
  CHECK(well_formed(cut));

  // cut_ad counts for the implicit weakening: height max + 2.
  ProofTree ad = mk::cut_ad(pt::node(atom00()),
                            mk::weakening_ad(Formula::neg(atom00()), pt::node(atom00())));
  CHECK(ptree_ord(ad) == nat_ord(3ull));  // succ(succ(max(0, 1)))
  CHECK(ptree_deg(ad) == 1);
}

TEST_CASE("well-formedness rejects the open weakening and accepts the closed variant") {
  ProofTree open_version = sample_tree();
  CheckResult res = check_tree(open_version, default_omega_samples());
  CHECK_FALSE(res.ok);
  REQUIRE(res.failure.has_value());
  CHECK(res.failure->rule == "weakening_ad");
  CHECK(res.failure->path == std::vector<std::size_t>{0});
  CHECK(res.failure->condition.find("x1 = 0") != std::string::npos);
  CHECK(res.failure->condition.find("not closed") != std::string::npos);

  CHECK(well_formed(sample_tree_closed()));
}

TEST_CASE("decoration mismatches are reported") {
  ProofTree bad_deg = pt::exchange_ab(atom00(), atom00(), 3, nat_ord(1ull),
                                      pt::weakening_ad(atom00(), atom00(), 0, Ordinal::zero(),
                                                       pt::node(atom00())));
  CheckResult res = check_tree(bad_deg, default_omega_samples());
  CHECK_FALSE(res.ok);
  CHECK(res.failure->condition.find("degree") != std::string::npos);

  CHECK_FALSE(well_formed(pt::ord_up(Ordinal::zero(), pt::node(atom00()))));
  CHECK_FALSE(well_formed(pt::deg_up(0, pt::node(atom00()))));
  CHECK(well_formed(pt::deg_up(2, pt::node(atom00()))));
  CHECK(well_formed(pt::ord_up(nat_ord(4ull), pt::node(atom00()))));
  Ordinal not_nf = Ordinal::cons(Ordinal::zero(), 0, nat_ord(1ull));
  CHECK_FALSE(well_formed(pt::ord_up(not_nf, pt::node(atom00()))));
}

TEST_CASE("failure paths point into the tree") {
  ProofTree deep = pt::negation_a(atom01(), 0, Ordinal::zero(), pt::node(atom01()));
  CheckResult res = check_tree(deep, default_omega_samples());
  CHECK_FALSE(res.ok);
  CHECK(res.failure->rule == "node");
  CHECK(res.failure->path == std::vector<std::size_t>{0});
}

TEST_CASE("omega node schema checks") {
  Formula body = Formula::atom(Term::var(9), Term::var(9));
  OmegaGen gen = OmegaGen::native([](const ClosedTerm& t) {
    return pt::node(Formula::atom(t.term(), t.term()));
  });
  ProofTree w = pt::w_rule_a(body, 9, 0, Ordinal::zero(), gen);
  CHECK(well_formed(w));
  CHECK(check_omega_node(w, make_omega_samples(3)));
  CHECK(check_omega_node(w, {}));  // vacuous

  OmegaGen bad = OmegaGen::native([](const ClosedTerm&) { return pt::node(atom00()); });
  ProofTree wb = pt::w_rule_a(body, 9, 0, Ordinal::zero(), bad);
  CHECK_FALSE(check_omega_node(wb, default_omega_samples()));
  CHECK_FALSE(well_formed(wb));
  CHECK(check_omega_node(wb, {}));

  CHECK_THROWS_AS(check_omega_node(pt::node(atom00()), default_omega_samples()),
                  PreconditionError);
}

TEST_CASE("well-formedness is monotone under sampling") {
  Formula body = Formula::atom(Term::var(9), Term::var(9));
  OmegaGen partial = OmegaGen::native([](const ClosedTerm& t) {
    if (t.value() >= 2) return pt::node(atom00());
    return pt::node(Formula::atom(t.term(), t.term()));
  });
  ProofTree w = pt::w_rule_a(body, 9, 0, Ordinal::zero(), partial);
  CHECK(check_tree(w, make_omega_samples(1)).ok);
  CHECK_FALSE(check_tree(w, make_omega_samples(3)).ok);
  CHECK_FALSE(check_tree(w, make_omega_samples(5)).ok);
}

TEST_CASE("serialization round trips generator-free trees") {
  ProofTree closed_sample = sample_tree_closed();
  std::string text = to_text(closed_sample);
  ProofTree back = parse_prooftree(text);
  CHECK(to_text(back) == text);
  CHECK(ptree_formula(back) == ptree_formula(closed_sample));
  CHECK(ptree_ord(back) == ptree_ord(closed_sample));

  std::string open_text = to_text(sample_tree());
  CHECK(to_text(parse_prooftree(open_text)) == open_text);
}

TEST_CASE("template generators round trip and instantiate by substitution") {
  std::string text =
      "(w_rule_a \"x9 = x9\" 9 0 (ord \"0\") (template x9 (node \"x9 = x9\")))";
  ProofTree w = parse_prooftree(text);
  CHECK(well_formed(w));
  CHECK(to_text(w) == text);
  const auto* node = std::get_if<PtOmegaA>(&w.node());
  REQUIRE(node != nullptr);
  ProofTree premise = node->gen(numeral_c(2));
  CHECK(ptree_formula(premise) == Formula::atom(numeral(2), numeral(2)));
}

TEST_CASE("sampled generators are the serialized form of native ones") {
  ProofTree lem = build_LEM(Formula::univ(0, Formula::atom(Term::var(0), Term::var(0))));
  std::string text = to_text(lem, make_omega_samples(2));
  ProofTree back = parse_prooftree(text);
  CHECK(to_text(back, make_omega_samples(2)) == text);
  CHECK(check_tree(back, make_omega_samples(2)).ok);
  CheckResult res = check_tree(back, make_omega_samples(4));
  CHECK_FALSE(res.ok);
  CHECK(res.failure->condition.find("unavailable") != std::string::npos);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_prooftree("(node \"0 = 0\""), ParseError);
  CHECK_THROWS_AS(parse_prooftree("(frobnicate \"0 = 0\")"), ParseError);
  try {
    parse_prooftree("(node \"0 = \")");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("bad formula") != std::string::npos);
  }
}

TEST_CASE("provable searches the registered builders") {
  BuilderRegistry reg = standard_registry();
  Formula lem_target = Formula::lor(Formula::neg(atom00()), atom00());
  auto found = reg.provable(lem_target, 0, nat_ord(1ull));
  REQUIRE(found.has_value());
  CHECK(ptree_formula(*found) == lem_target);
  CHECK(ptree_deg(*found) == 0);

  auto axiom = reg.provable(atom00(), 0, Ordinal::zero());
  REQUIRE(axiom.has_value());
  CHECK(ptree_deg(*axiom) == 0);

  CHECK_FALSE(reg.provable(atom01(), 5, Ordinal::zero()).has_value());
  CHECK_FALSE(reg.provable(lem_target, 0, nat_ord(2ull)).has_value());
  CHECK(reg.provable(lem_target, 3, nat_ord(1ull)).has_value());
}

TEST_CASE("decoration extraction never forces omega premises") {
  bool forced = false;
  OmegaGen gen = OmegaGen::native([&forced](const ClosedTerm& t) {
    forced = true;
    return pt::node(Formula::atom(t.term(), t.term()));
  });
  ProofTree w = pt::w_rule_a(Formula::atom(Term::var(9), Term::var(9)), 9, 0, Ordinal::zero(),
                             gen);
  CHECK(ptree_deg(w) == 0);
  CHECK(ptree_ord(w) == nat_ord(1ull));
  CHECK(ptree_formula(w) == Formula::univ(9, Formula::atom(Term::var(9), Term::var(9))));
  CHECK_FALSE(forced);
}

TEST_CASE("parsers reject mutated input without crashing") {
  std::mt19937_64 rng(99);
  ProofTree lem = build_LEM(Formula::univ(0, Formula::atom(Term::var(0), Term::var(0))));
  std::string good = to_text(lem, make_omega_samples(2));
  for (int i = 0; i < 400; ++i) {
    std::string mutated = good;
    std::size_t edits = 1 + rng() % 4;
    for (std::size_t e = 0; e < edits; ++e) {
      std::size_t at = rng() % mutated.size();
      switch (rng() % 3) {
        case 0:
          mutated[at] = static_cast<char>('!' + rng() % 90);
          break;
        case 1:
          mutated.erase(at, 1);
          break;
        default:
          mutated.insert(at, 1, static_cast<char>('!' + rng() % 90));
          break;
      }
    }
    try {
      ProofTree p = parse_prooftree(mutated);
      // Some mutations still parse; the result must behave like a tree.
      (void)ptree_formula(p);
      (void)ptree_ord(p);
    } catch (const ParseError&) {
    } catch (const PreconditionError&) {
    }
  }
}

TEST_CASE("trees and builders are safely shared across threads") {
  ProofTree shared = build_LEM(Formula::univ(0, Formula::atom(Term::var(0), Term::var(0))));
  std::vector<std::thread> workers;
  std::atomic<int> failures{0};
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&shared, &failures, t] {
      for (int i = 0; i < 20; ++i) {
        if (!check_tree(shared, make_omega_samples(2)).ok) ++failures;
        Formula a = Formula::atom(numeral(static_cast<Nat>(t)), numeral(static_cast<Nat>(t)));
        ProofTree lem = build_LEM(Formula::neg(a));
        if (ptree_ord(lem) != nat_ord(3ull)) ++failures;
      }
    });
  }
  for (std::thread& w : workers) w.join();
  CHECK(failures.load() == 0);
}
