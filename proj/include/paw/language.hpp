#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "paw/errors.hpp"

namespace paw {

using Nat = std::uint64_t;  // variable indices, connective counts, degrees

// ---------------------------------------------------------------------------
// Terms: 0 | x_i | S(t) | t + t | t * t

struct TermNode;

class Term {
 public:
  Term();  // the term 0

  static Term zero();
  static Term var(Nat index);
  static Term succ(Term t);
  static Term plus(Term a, Term b);
  static Term times(Term a, Term b);

  const TermNode& node() const { return *node_; }

 private:
  explicit Term(std::shared_ptr<const TermNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const TermNode> node_;
};

struct TmZero {};
struct TmVar {
  Nat index;
};
struct TmSucc {
  Term arg;
};
struct TmPlus {
  Term left, right;
};
struct TmTimes {
  Term left, right;
};

struct TermNode : std::variant<TmZero, TmVar, TmSucc, TmPlus, TmTimes> {
  using variant::variant;
};

bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

// ---------------------------------------------------------------------------
// Atoms and formulas: t = t | ~F | F \/ F | forall x_i, F

struct Atom {
  Term left, right;
};

bool operator==(const Atom& a, const Atom& b);
inline bool operator!=(const Atom& a, const Atom& b) { return !(a == b); }

struct FormulaNode;

class Formula {
 public:
  static Formula atom(Atom a);
  static Formula atom(Term left, Term right);
  static Formula neg(Formula f);
  static Formula lor(Formula left, Formula right);
  static Formula univ(Nat index, Formula body);

  const FormulaNode& node() const { return *node_; }

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const FormulaNode> node_;
};

struct FmAtom {
  Atom atom;
};
struct FmNeg {
  Formula body;
};
struct FmLor {
  Formula left, right;
};
struct FmUniv {
  Nat index;
  Formula body;
};

struct FormulaNode : std::variant<FmAtom, FmNeg, FmLor, FmUniv> {
  using variant::variant;
};

bool operator==(const Formula& a, const Formula& b);
inline bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

// Shape helpers; return nullptr when the formula has a different head.
const FmLor* as_lor(const Formula& f);
const FmNeg* as_neg(const Formula& f);
const FmUniv* as_univ(const Formula& f);
const FmAtom* as_atom(const Formula& f);

// ---------------------------------------------------------------------------
// Evaluation and the axiom test

// 0 when the term contains a variable, otherwise one greater than the value.
Nat eval_term(const Term& t);

enum class Correctness { Correct, Incorrect, Undetermined };

// Correct: both sides evaluate, equally. Incorrect: both evaluate, unequally.
// Undetermined: a side contains a variable.
Correctness correct_atom(const Atom& a);

// Initial sequents: correct atoms and negations of incorrect atoms.
bool is_axiom(const Formula& f);

// ---------------------------------------------------------------------------
// Variables, substitution, closure

bool closed_term(const Term& t);
bool closed(const Formula& f);

std::vector<Nat> free_list_term(const Term& t);
// Sorted ascending, duplicate-free. univ n binds n within its body.
std::vector<Nat> free_list(const Formula& f);

Term substitute_term(const Term& t, Nat index, const Term& replacement);
// Replaces free occurrences of x_index only; stops at a binder for index.
Formula substitute(const Formula& f, Nat index, const Term& replacement);

// Count of neg, lor and univ nodes.
Nat num_conn(const Formula& f);

// A term together with evidence that it is closed.
class ClosedTerm {
 public:
  explicit ClosedTerm(Term t);  // throws PreconditionError when open

  const Term& term() const { return term_; }
  // Arithmetic value (not the eval offset).
  Nat value() const { return value_; }

 private:
  Term term_;
  Nat value_;
};

bool operator==(const ClosedTerm& a, const ClosedTerm& b);

// The canonical closed term S^m(0).
Term numeral(Nat m);
ClosedTerm numeral_c(Nat m);

// Replaces every free variable of f by c; identity on closed formulas.
Formula closure(const Formula& f, const ClosedTerm& c);
Term closure_term(const Term& t, const ClosedTerm& c);

// ---------------------------------------------------------------------------
// Text syntax. Terms: 0, S(t), (t + t), (t * t), x<i>. Formulas: t = t, ~F,
// (F \/ F), forall x<i>, F.

std::string to_text(const Term& t);
std::string to_text(const Formula& f);
Term parse_term(std::string_view text);      // throws ParseError
Formula parse_formula(std::string_view text);  // throws ParseError

}  // namespace paw
