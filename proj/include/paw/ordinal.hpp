#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "paw/errors.hpp"

namespace paw {

// Coefficients of the notation. Repeated base-2 exponentiation yields finite
// ordinals whose coefficient exceeds any machine integer, so these are
// arbitrary precision.
using Natural = boost::multiprecision::cpp_int;

// Notation for ordinals below epsilon_0: zero, or cons(exponent, count, rest)
// denoting w^exponent * (count + 1) + rest. Notations are plain finite trees;
// only those in normal form (see is_nf) denote ordinals uniquely, and the
// arithmetic below is specified on normal forms only.
class Ordinal {
 public:
  Ordinal() = default;  // zero

  static Ordinal zero() { return Ordinal(); }
  static Ordinal cons(Ordinal exponent, Natural count, Ordinal rest);

  bool is_zero() const { return node_ == nullptr; }

  // Component access; all three require a non-zero notation.
  const Ordinal& exponent() const;
  const Natural& count() const;
  const Ordinal& rest() const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct Ordinal::Node {
  Ordinal exponent;
  Natural count;
  Ordinal rest;
};

bool operator==(const Ordinal& a, const Ordinal& b);
inline bool operator!=(const Ordinal& a, const Ordinal& b) { return !(a == b); }

// Strict ordering: lexicographic on (exponent, count, rest). Total on all
// notations, meaningful on normal forms.
bool lt(const Ordinal& a, const Ordinal& b);
inline bool leq(const Ordinal& a, const Ordinal& b) { return a == b || lt(a, b); }

bool is_nf(const Ordinal& a);

// Embedding of the naturals: 0 -> zero, n+1 -> cons(zero, n, zero).
Ordinal nat_ord(const Natural& n);
Ordinal nat_ord(unsigned long long n);

// True iff a denotes a natural number (zero or a single w^0 term).
bool is_natural(const Ordinal& a);
// Inverse of nat_ord; pre: is_natural(a).
Natural to_natural(const Ordinal& a);

bool is_successor(const Ordinal& a);  // nf notations split into zero/successor/limit
bool is_limit(const Ordinal& a);

// Arithmetic; preconditions: arguments in normal form. Results are normal.
Ordinal succ(const Ordinal& a);
// Defined on zero (gives zero) and successors; limit notations are an error.
Ordinal pred(const Ordinal& a);
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mult(const Ordinal& a, const Ordinal& b);
// 2^a. Only base 2 is needed by the cut-elimination bound.
Ordinal exp2(const Ordinal& a);
Ordinal ord_max(const Ordinal& a, const Ordinal& b);

// Textual notation: `0`, or `w^<exp>*<k>` terms joined by ` + `, where an
// exponent is `0`, a bare `w^<exp>` power (coefficient 1, no tail), or a
// parenthesized full notation. Example: w^w^0*1 + w^0*2 is omega + 2.
std::string to_text(const Ordinal& a);
Ordinal parse_ordinal(std::string_view text);  // throws ParseError

template <class T>
using OrdRecurseFn = std::function<T(const Ordinal&)>;

// Recursion combinator for strong induction over normal-form notations. The
// step function receives a recursor that accepts only strictly lt-smaller
// normal-form measures; violating that is reported as a PreconditionError.
// This runtime guard is the executable residue of well-foundedness; the
// static argument is the structural decrease on (exponent, count, rest).
template <class T>
T transfinite_recurse(Ordinal measure,
                      std::function<T(const OrdRecurseFn<T>&, const Ordinal&)> step) {
  if (!is_nf(measure)) {
    throw PreconditionError("transfinite_recurse: measure not in normal form");
  }
  OrdRecurseFn<T> self = [measure, step](const Ordinal& smaller) -> T {
    if (!is_nf(smaller)) {
      throw PreconditionError("transfinite_recurse: recursion on a non-normal measure");
    }
    if (!lt(smaller, measure)) {
      throw PreconditionError("transfinite_recurse: recursion on a non-smaller measure " +
                              to_text(smaller) + " from " + to_text(measure));
    }
    return transfinite_recurse<T>(smaller, step);
  };
  return step(self, measure);
}

}  // namespace paw
