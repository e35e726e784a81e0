#include "paw/language.hpp"

#include <algorithm>

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
// Construction

Term::Term() : node_(std::make_shared<const TermNode>(TmZero{})) {}

Term Term::zero() { return Term(); }
Term Term::var(Nat index) { return Term(std::make_shared<const TermNode>(TmVar{index})); }
Term Term::succ(Term t) { return Term(std::make_shared<const TermNode>(TmSucc{std::move(t)})); }
Term Term::plus(Term a, Term b) {
  return Term(std::make_shared<const TermNode>(TmPlus{std::move(a), std::move(b)}));
}
Term Term::times(Term a, Term b) {
  return Term(std::make_shared<const TermNode>(TmTimes{std::move(a), std::move(b)}));
}

Formula Formula::atom(Atom a) {
  return Formula(std::make_shared<const FormulaNode>(FmAtom{std::move(a)}));
}
Formula Formula::atom(Term left, Term right) {
  return atom(Atom{std::move(left), std::move(right)});
}
Formula Formula::neg(Formula f) {
  return Formula(std::make_shared<const FormulaNode>(FmNeg{std::move(f)}));
}
Formula Formula::lor(Formula left, Formula right) {
  return Formula(std::make_shared<const FormulaNode>(FmLor{std::move(left), std::move(right)}));
}
Formula Formula::univ(Nat index, Formula body) {
  return Formula(std::make_shared<const FormulaNode>(FmUniv{index, std::move(body)}));
}

bool operator==(const Term& a, const Term& b) {
  if (&a.node() == &b.node()) return true;
  return std::visit(
      overloaded{
          [&](const TmZero&) { return std::holds_alternative<TmZero>(b.node()); },
          [&](const TmVar& x) {
            const auto* y = std::get_if<TmVar>(&b.node());
            return y != nullptr && x.index == y->index;
          },
          [&](const TmSucc& x) {
            const auto* y = std::get_if<TmSucc>(&b.node());
            return y != nullptr && x.arg == y->arg;
          },
          [&](const TmPlus& x) {
            const auto* y = std::get_if<TmPlus>(&b.node());
            return y != nullptr && x.left == y->left && x.right == y->right;
          },
          [&](const TmTimes& x) {
            const auto* y = std::get_if<TmTimes>(&b.node());
            return y != nullptr && x.left == y->left && x.right == y->right;
          },
      },
      a.node());
}

bool operator==(const Atom& a, const Atom& b) { return a.left == b.left && a.right == b.right; }

bool operator==(const Formula& a, const Formula& b) {
  if (&a.node() == &b.node()) return true;
  return std::visit(
      overloaded{
          [&](const FmAtom& x) {
            const auto* y = std::get_if<FmAtom>(&b.node());
            return y != nullptr && x.atom == y->atom;
          },
          [&](const FmNeg& x) {
            const auto* y = std::get_if<FmNeg>(&b.node());
            return y != nullptr && x.body == y->body;
          },
          [&](const FmLor& x) {
            const auto* y = std::get_if<FmLor>(&b.node());
            return y != nullptr && x.left == y->left && x.right == y->right;
          },
          [&](const FmUniv& x) {
            const auto* y = std::get_if<FmUniv>(&b.node());
            return y != nullptr && x.index == y->index && x.body == y->body;
          },
      },
      a.node());
}

const FmLor* as_lor(const Formula& f) { return std::get_if<FmLor>(&f.node()); }
const FmNeg* as_neg(const Formula& f) { return std::get_if<FmNeg>(&f.node()); }
const FmUniv* as_univ(const Formula& f) { return std::get_if<FmUniv>(&f.node()); }
const FmAtom* as_atom(const Formula& f) { return std::get_if<FmAtom>(&f.node()); }

// ---------------------------------------------------------------------------
// Evaluation

Nat eval_term(const Term& t) {
  return std::visit(overloaded{
                        [](const TmZero&) -> Nat { return 1; },
                        [](const TmVar&) -> Nat { return 0; },
                        [](const TmSucc& x) -> Nat {
                          Nat e = eval_term(x.arg);
                          return e == 0 ? 0 : e + 1;
                        },
                        [](const TmPlus& x) -> Nat {
                          Nat l = eval_term(x.left), r = eval_term(x.right);
                          if (l == 0 || r == 0) return 0;
                          return (l - 1) + (r - 1) + 1;
                        },
                        [](const TmTimes& x) -> Nat {
                          Nat l = eval_term(x.left), r = eval_term(x.right);
                          if (l == 0 || r == 0) return 0;
                          return (l - 1) * (r - 1) + 1;
                        },
                    },
                    t.node());
}

Correctness correct_atom(const Atom& a) {
  Nat l = eval_term(a.left), r = eval_term(a.right);
  if (l == 0 || r == 0) return Correctness::Undetermined;
  return l == r ? Correctness::Correct : Correctness::Incorrect;
}

bool is_axiom(const Formula& f) {
  if (const auto* a = as_atom(f)) {
    return correct_atom(a->atom) == Correctness::Correct;
  }
  if (const auto* n = as_neg(f)) {
    if (const auto* a = as_atom(n->body)) {
      return correct_atom(a->atom) == Correctness::Incorrect;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Free variables and substitution

bool closed_term(const Term& t) {
  return std::visit(overloaded{
                        [](const TmZero&) { return true; },
                        [](const TmVar&) { return false; },
                        [](const TmSucc& x) { return closed_term(x.arg); },
                        [](const TmPlus& x) {
                          return closed_term(x.left) && closed_term(x.right);
                        },
                        [](const TmTimes& x) {
                          return closed_term(x.left) && closed_term(x.right);
                        },
                    },
                    t.node());
}

namespace {

void collect_free_term(const Term& t, std::vector<Nat>& out) {
  std::visit(overloaded{
                 [](const TmZero&) {},
                 [&](const TmVar& x) { out.push_back(x.index); },
                 [&](const TmSucc& x) { collect_free_term(x.arg, out); },
                 [&](const TmPlus& x) {
                   collect_free_term(x.left, out);
                   collect_free_term(x.right, out);
                 },
                 [&](const TmTimes& x) {
                   collect_free_term(x.left, out);
                   collect_free_term(x.right, out);
                 },
             },
             t.node());
}

void collect_free(const Formula& f, std::vector<Nat>& bound, std::vector<Nat>& out) {
  std::visit(overloaded{
                 [&](const FmAtom& x) {
                   std::vector<Nat> vars;
                   collect_free_term(x.atom.left, vars);
                   collect_free_term(x.atom.right, vars);
                   for (Nat v : vars) {
                     if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.push_back(v);
                   }
                 },
                 [&](const FmNeg& x) { collect_free(x.body, bound, out); },
                 [&](const FmLor& x) {
                   collect_free(x.left, bound, out);
                   collect_free(x.right, bound, out);
                 },
                 [&](const FmUniv& x) {
                   bound.push_back(x.index);
                   collect_free(x.body, bound, out);
                   bound.pop_back();
                 },
             },
             f.node());
}

std::vector<Nat> dedupe_sorted(std::vector<Nat> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<Nat> free_list_term(const Term& t) {
  std::vector<Nat> out;
  collect_free_term(t, out);
  return dedupe_sorted(std::move(out));
}

std::vector<Nat> free_list(const Formula& f) {
  std::vector<Nat> bound, out;
  collect_free(f, bound, out);
  return dedupe_sorted(std::move(out));
}

bool closed(const Formula& f) { return free_list(f).empty(); }

Term substitute_term(const Term& t, Nat index, const Term& replacement) {
  return std::visit(
      overloaded{
          [&](const TmZero&) { return t; },
          [&](const TmVar& x) { return x.index == index ? replacement : t; },
          [&](const TmSucc& x) { return Term::succ(substitute_term(x.arg, index, replacement)); },
          [&](const TmPlus& x) {
            return Term::plus(substitute_term(x.left, index, replacement),
                              substitute_term(x.right, index, replacement));
          },
          [&](const TmTimes& x) {
            return Term::times(substitute_term(x.left, index, replacement),
                               substitute_term(x.right, index, replacement));
          },
      },
      t.node());
}

Formula substitute(const Formula& f, Nat index, const Term& replacement) {
  return std::visit(
      overloaded{
          [&](const FmAtom& x) {
            return Formula::atom(substitute_term(x.atom.left, index, replacement),
                                 substitute_term(x.atom.right, index, replacement));
          },
          [&](const FmNeg& x) { return Formula::neg(substitute(x.body, index, replacement)); },
          [&](const FmLor& x) {
            return Formula::lor(substitute(x.left, index, replacement),
                                substitute(x.right, index, replacement));
          },
          [&](const FmUniv& x) {
            if (x.index == index) return f;
            return Formula::univ(x.index, substitute(x.body, index, replacement));
          },
      },
      f.node());
}

Nat num_conn(const Formula& f) {
  return std::visit(overloaded{
                        [](const FmAtom&) -> Nat { return 0; },
                        [](const FmNeg& x) -> Nat { return 1 + num_conn(x.body); },
                        [](const FmLor& x) -> Nat { return 1 + num_conn(x.left) + num_conn(x.right); },
                        [](const FmUniv& x) -> Nat { return 1 + num_conn(x.body); },
                    },
                    f.node());
}

// ---------------------------------------------------------------------------
// Closed terms, numerals, closure

ClosedTerm::ClosedTerm(Term t) : term_(std::move(t)), value_(0) {
  Nat e = eval_term(term_);
  if (e == 0) {
    throw PreconditionError("ClosedTerm: term is not closed: " + to_text(term_));
  }
  value_ = e - 1;
}

bool operator==(const ClosedTerm& a, const ClosedTerm& b) { return a.term() == b.term(); }

Term numeral(Nat m) {
  Term t = Term::zero();
  for (Nat i = 0; i < m; ++i) t = Term::succ(std::move(t));
  return t;
}

ClosedTerm numeral_c(Nat m) { return ClosedTerm(numeral(m)); }

Term closure_term(const Term& t, const ClosedTerm& c) {
  return std::visit(
      overloaded{
          [&](const TmZero&) { return t; },
          [&](const TmVar&) { return c.term(); },
          [&](const TmSucc& x) { return Term::succ(closure_term(x.arg, c)); },
          [&](const TmPlus& x) {
            return Term::plus(closure_term(x.left, c), closure_term(x.right, c));
          },
          [&](const TmTimes& x) {
            return Term::times(closure_term(x.left, c), closure_term(x.right, c));
          },
      },
      t.node());
}

namespace {

Formula closure_impl(const Formula& f, const ClosedTerm& c, std::vector<Nat>& bound) {
  return std::visit(
      overloaded{
          [&](const FmAtom& x) {
            // Bound variables stay; the replacement term is closed, so no
            // capture can occur.
            Term l = x.atom.left, r = x.atom.right;
            std::vector<Nat> vars;
            collect_free_term(l, vars);
            collect_free_term(r, vars);
            for (Nat v : dedupe_sorted(std::move(vars))) {
              if (std::find(bound.begin(), bound.end(), v) == bound.end()) {
                l = substitute_term(l, v, c.term());
                r = substitute_term(r, v, c.term());
              }
            }
            return Formula::atom(std::move(l), std::move(r));
          },
          [&](const FmNeg& x) { return Formula::neg(closure_impl(x.body, c, bound)); },
          [&](const FmLor& x) {
            return Formula::lor(closure_impl(x.left, c, bound), closure_impl(x.right, c, bound));
          },
          [&](const FmUniv& x) {
            bound.push_back(x.index);
            Formula body = closure_impl(x.body, c, bound);
            bound.pop_back();
            return Formula::univ(x.index, std::move(body));
          },
      },
      f.node());
}

}  // namespace

Formula closure(const Formula& f, const ClosedTerm& c) {
  std::vector<Nat> bound;
  return closure_impl(f, c, bound);
}

}  // namespace paw
