#include <algorithm>

#include "doctest.h"
#include "paw/ordinal.hpp"
#include "support.hpp"

using namespace paw;
using testsupport::enumerate_notations;

namespace {

Ordinal fin(unsigned long long n) { return nat_ord(n); }
Ordinal omega() { return Ordinal::cons(fin(1), 0, Ordinal::zero()); }

}  // namespace

TEST_CASE("ordering clauses") {
  CHECK(lt(Ordinal::zero(), fin(1)));
  CHECK(lt(fin(1), omega()));          // head_lt
  CHECK_FALSE(lt(fin(3), fin(2)));     // coeff_lt direction
  CHECK(lt(fin(2), fin(3)));
  CHECK(lt(omega(), Ordinal::cons(fin(1), 0, fin(1))));  // tail_lt
  CHECK_FALSE(lt(omega(), omega()));
}

TEST_CASE("normal form clauses") {
  CHECK(is_nf(Ordinal::zero()));
  CHECK(is_nf(Ordinal::cons(Ordinal::zero(), 5, Ordinal::zero())));
  // violates beta < alpha
  CHECK_FALSE(is_nf(Ordinal::cons(Ordinal::zero(), 0, fin(1))));
  CHECK(is_nf(Ordinal::cons(fin(1), 0, fin(1))));  // omega + 1
}

TEST_CASE("nat_ord embedding") {
  CHECK(nat_ord(0ull) == Ordinal::zero());
  CHECK(nat_ord(1ull) == Ordinal::cons(Ordinal::zero(), 0, Ordinal::zero()));
  CHECK(nat_ord(3ull) == Ordinal::cons(Ordinal::zero(), 2, Ordinal::zero()));
  for (unsigned long long i = 0; i <= 20; ++i) {
    for (unsigned long long j = 0; j <= 20; ++j) {
      CHECK(lt(nat_ord(i), nat_ord(j)) == (i < j));
    }
  }
}

TEST_CASE("succ is the least strict upper bound on the small enumeration") {
  std::vector<Ordinal> nf = enumerate_notations(2, 4, true);
  CHECK(succ(Ordinal::zero()) == fin(1));
  CHECK(succ(fin(1)) == fin(2));
  CHECK(succ(omega()) == Ordinal::cons(fin(1), 0, fin(1)));
  for (const Ordinal& a : nf) {
    Ordinal s = succ(a);
    CHECK(is_nf(s));
    CHECK(lt(a, s));
    for (const Ordinal& b : nf) {
      if (lt(a, b)) CHECK_FALSE(lt(b, s));  // nothing fits strictly between
    }
  }
}

TEST_CASE("pred") {
  CHECK(pred(Ordinal::zero()) == Ordinal::zero());
  CHECK(pred(fin(5)) == fin(4));
  CHECK(pred(succ(omega())) == omega());
  CHECK(is_limit(omega()));
  CHECK_THROWS_AS(pred(omega()), PreconditionError);
}

TEST_CASE("addition") {
  std::vector<Ordinal> nf = enumerate_notations(2, 3, true);
  for (const Ordinal& a : nf) {
    CHECK(add(a, Ordinal::zero()) == a);
    CHECK(add(Ordinal::zero(), a) == a);
    CHECK(add(a, fin(1)) == succ(a));  // succ agrees with + 1
  }
  CHECK(add(fin(1), omega()) == omega());  // 1 + w = w
  CHECK(add(omega(), fin(1)) == Ordinal::cons(fin(1), 0, fin(1)));
}

TEST_CASE("multiplication") {
  CHECK(mult(omega(), Ordinal::zero()) == Ordinal::zero());
  CHECK(mult(fin(2), fin(2)) == fin(4));
  CHECK(mult(omega(), fin(2)) == Ordinal::cons(fin(1), 1, Ordinal::zero()));
  for (unsigned long long i = 0; i <= 10; ++i) {
    for (unsigned long long j = 0; j <= 10; ++j) {
      CHECK(mult(nat_ord(i), nat_ord(j)) == nat_ord(i * j));
      CHECK(add(nat_ord(i), nat_ord(j)) == nat_ord(i + j));
    }
  }
}

TEST_CASE("base-2 exponentiation") {
  CHECK(exp2(Ordinal::zero()) == fin(1));
  CHECK(exp2(fin(3)) == fin(8));
  for (unsigned long long n = 0; n <= 6; ++n) {
    CHECK(exp2(nat_ord(n)) == nat_ord(1ull << n));
  }
  // 2^w = w: a fixed point at the first limit.
  CHECK(exp2(omega()) == omega());
  // It still dominates every finite power sampled below it, and is the least
  // enumerated notation doing so.
  std::vector<Ordinal> nf = enumerate_notations(2, 3, true);
  for (const Ordinal& o : nf) {
    bool dominates = true;
    for (unsigned long long n = 0; n <= 10; ++n) {
      if (!lt(exp2(nat_ord(n)), o)) dominates = false;
    }
    if (dominates) CHECK_FALSE(lt(o, exp2(omega())));
  }
  CHECK(exp2(succ(omega())) == mult(omega(), fin(2)));
  CHECK(exp2(mult(omega(), fin(2))) == Ordinal::cons(fin(2), 0, Ordinal::zero()));
}

TEST_CASE("ord_max") {
  CHECK(ord_max(Ordinal::zero(), omega()) == omega());
  CHECK(ord_max(omega(), omega()) == omega());
  CHECK(ord_max(omega(), fin(3)) == omega());
}

TEST_CASE("transfinite recursion combinator") {
  // Base value without recursion.
  int base = transfinite_recurse<int>(
      Ordinal::zero(), [](const OrdRecurseFn<int>&, const Ordinal&) { return 41; });
  CHECK(base == 41);

  // Counting descent through pred matches the natural countdown.
  std::function<int(const OrdRecurseFn<int>&, const Ordinal&)> count =
      [](const OrdRecurseFn<int>& self, const Ordinal& a) -> int {
    if (a.is_zero()) return 0;
    return 1 + self(pred(a));
  };
  CHECK(transfinite_recurse<int>(nat_ord(5ull), count) == 5);

  // Recursing on a non-smaller measure is a contract violation.
  std::function<int(const OrdRecurseFn<int>&, const Ordinal&)> bad =
      [](const OrdRecurseFn<int>& self, const Ordinal& a) -> int { return self(a); };
  CHECK_THROWS_AS(transfinite_recurse<int>(fin(2), bad), PreconditionError);
}

TEST_CASE("text round trip") {
  CHECK(to_text(Ordinal::zero()) == "0");
  CHECK(to_text(fin(2)) == "w^0*2");
  Ordinal omega_plus_2 = add(omega(), fin(2));
  CHECK(to_text(omega_plus_2) == "w^w^0*1 + w^0*2");
  CHECK(parse_ordinal("w^w^0*1 + w^0*2") == omega_plus_2);
  Ordinal omega_sq = Ordinal::cons(fin(2), 0, Ordinal::zero());
  CHECK(to_text(omega_sq) == "w^(w^0*2)*1");
  for (const Ordinal& o : enumerate_notations(3, 2, false)) {
    CHECK(parse_ordinal(to_text(o)) == o);
  }
  CHECK_THROWS_AS(parse_ordinal("w^"), ParseError);
  CHECK_THROWS_AS(parse_ordinal("w^0*0"), ParseError);
}

TEST_CASE("the cut bound inequalities") {
  // 2^a + 1 < 2^(a+1) and 2^a + 2 < 2^(a+1) for 1 < a.
  for (const Ordinal& a : enumerate_notations(2, 3, true)) {
    if (!lt(fin(1), a)) continue;
    Ordinal lhs1 = succ(exp2(a));
    Ordinal lhs2 = succ(lhs1);
    Ordinal rhs = exp2(succ(a));
    CHECK(lt(lhs1, rhs));
    CHECK(lt(lhs2, rhs));
  }
}

TEST_CASE("arithmetic laws on the enumeration") {
  std::vector<Ordinal> nf = enumerate_notations(2, 2, true);
  for (const Ordinal& a : nf) {
    for (const Ordinal& b : nf) {
      // 2^(a + b) = 2^a * 2^b
      CHECK(exp2(add(a, b)) == mult(exp2(a), exp2(b)));
      for (const Ordinal& c : nf) {
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(mult(a, add(b, c)) == add(mult(a, b), mult(a, c)));
        CHECK(mult(mult(a, b), c) == mult(a, mult(b, c)));
      }
    }
  }
}

TEST_CASE("exp2 refuses unrepresentable finite results") {
  Ordinal huge = nat_ord(Natural(1) << 25);
  CHECK_THROWS_AS(exp2(huge), std::overflow_error);
}
