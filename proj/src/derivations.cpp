#include "paw/derivations.hpp"

#include <deque>
#include <map>

namespace paw {

namespace {

Ordinal lem_height(const Formula& a) {
  Nat n = num_conn(a);
  return succ(nat_ord(n + n));
}

}  // namespace

ProofTree lem_pair(const Formula& a, Nat n, const ClosedTerm& s, const ClosedTerm& t) {
  if (correct_atom(Atom{s.term(), t.term()}) != Correctness::Correct) {
    throw PreconditionError("lem_pair: terms " + to_text(s.term()) + " and " + to_text(t.term()) +
                            " do not have equal values");
  }
  Formula a_s = substitute(a, n, s.term());
  Formula a_t = substitute(a, n, t.term());
  if (!closed(a_s)) {
    throw PreconditionError("lem_pair: " + to_text(a) + " has free variables besides x" +
                            std::to_string(n));
  }

  if (as_atom(a) != nullptr) {
    Correctness c = correct_atom(as_atom(a_s)->atom);
    if (c == Correctness::Correct) {
      // A[s] and A[t] are both axioms; weaken the negation in.
      return mk::weakening_ad(Formula::neg(a_s), pt::node(a_t));
    }
    ProofTree base = pt::node(Formula::neg(a_s));
    return mk::exchange_ab(mk::weakening_ad(a_t, std::move(base)));
  }

  if (const auto* negf = as_neg(a)) {
    // Swap s and t: from ~E[t] \/ E[s] derive ~~E[s] \/ ~E[t].
    ProofTree inner = lem_pair(negf->body, n, t, s);
    ProofTree p = mk::negation_ad(mk::exchange_ab(std::move(inner)));
    return mk::pad_height_to(std::move(p), lem_height(a));
  }

  if (const auto* orf = as_lor(a)) {
    Formula bt = substitute(orf->left, n, t.term());
    Formula ct = substitute(orf->right, n, t.term());
    ProofTree left = lem_pair(orf->left, n, s, t);
    left = assoc_left(mk::exchange_ab(mk::weakening_ad(ct, std::move(left))));
    ProofTree right = lem_pair(orf->right, n, s, t);
    right = mk::exchange_cab(mk::exchange_ab(mk::weakening_ad(bt, std::move(right))));
    right = assoc_left(std::move(right));
    ProofTree p = mk::demorgan_abd(std::move(left), std::move(right));
    return mk::pad_height_to(std::move(p), lem_height(a));
  }

  const auto* univ = as_univ(a);
  Nat m = univ->index;
  Formula e = univ->body;
  Formula e_s = m == n ? e : substitute(e, n, s.term());
  Formula e_t = m == n ? e : substitute(e, n, t.term());
  Formula quantified_neg = Formula::neg(Formula::univ(m, e_s));
  Ordinal premise_height = succ(lem_height(e));

  OmegaGen gen = OmegaGen::native([e, e_s, m, n, s, t](const ClosedTerm& u) {
    ProofTree q = lem_pair(substitute(e, m, u.term()), n, s, t);
    q = mk::quantification_ad(e_s, m, u, std::move(q));
    return mk::exchange_ab(std::move(q));
  });
  ProofTree w = mk::w_rule_ad(e_t, quantified_neg, m, 0, premise_height, std::move(gen));
  return mk::exchange_ab(std::move(w));
}

ProofTree build_LEM(const Formula& a) {
  if (!closed(a)) {
    throw PreconditionError("build_LEM: formula " + to_text(a) + " is not closed");
  }
  ClosedTerm zero = numeral_c(0);
  return lem_pair(a, 0, zero, zero);
}

ProofTree build_LEM_term(const Formula& a, Nat n, const ClosedTerm& s, const ClosedTerm& t) {
  if (correct_atom(Atom{s.term(), t.term()}) != Correctness::Correct) {
    throw PreconditionError("build_LEM_term: s = t is not a correct closed equation");
  }
  if (free_list(a) != std::vector<Nat>{n}) {
    throw PreconditionError("build_LEM_term: free variables of " + to_text(a) +
                            " are not exactly [x" + std::to_string(n) + "]");
  }
  return lem_pair(a, n, s, t);
}

ProofTree assoc_left(ProofTree p) {
  return mk::exchange_ab(mk::exchange_cab(mk::exchange_abd(std::move(p))));
}

ProofTree assoc_right(ProofTree p) {
  return mk::exchange_abd(mk::exchange_cab(mk::exchange_ab(std::move(p))));
}

bool recipe_holds(const DerivationRecipe& recipe, const BuilderRegistry& registry) {
  std::optional<ProofTree> tree = registry.run(recipe.builder, recipe.target);
  if (!tree) return false;
  return ptree_formula(*tree) == recipe.target && well_formed(*tree) &&
         ptree_deg(*tree) == recipe.expected.degree &&
         ptree_ord(*tree) == recipe.expected.height;
}

ProofTree weaken(const Formula& a, ProofTree p) { return mk::weakening_ad(a, std::move(p)); }

ProofTree weaken_right(const Formula& a, ProofTree p) {
  return mk::exchange_ab(mk::weakening_ad(a, std::move(p)));
}

// ---------------------------------------------------------------------------
// reshape: bidirectional search over the four root exchanges

namespace {

enum class Move { AB, CAB, ABD, CABD };

void successors(const Formula& f, std::vector<std::pair<Move, Formula>>& out) {
  out.clear();
  const FmLor* l = as_lor(f);
  if (!l) return;
  out.emplace_back(Move::AB, Formula::lor(l->right, l->left));
  if (const FmLor* ll = as_lor(l->left)) {
    out.emplace_back(Move::CAB,
                     Formula::lor(Formula::lor(ll->left, l->right), ll->right));
    out.emplace_back(Move::ABD,
                     Formula::lor(Formula::lor(ll->right, ll->left), l->right));
    if (const FmLor* lll = as_lor(ll->left)) {
      out.emplace_back(
          Move::CABD,
          Formula::lor(Formula::lor(Formula::lor(lll->left, ll->right), lll->right), l->right));
    }
  }
}

void collect_components(const Formula& f, std::vector<std::string>& out) {
  if (const FmLor* l = as_lor(f)) {
    collect_components(l->left, out);
    collect_components(l->right, out);
  } else {
    out.push_back(to_text(f));
  }
}

std::vector<Move> find_moves(const Formula& from, const Formula& to) {
  if (from == to) return {};
  std::vector<std::string> a, b;
  collect_components(from, a);
  collect_components(to, b);
  {
    auto sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
      throw PreconditionError("reshape: " + to_text(to) + " is not a rearrangement of " +
                              to_text(from));
    }
  }
  if (a.size() > 9) {
    throw PreconditionError("reshape: too many disjuncts (" + std::to_string(a.size()) + ")");
  }

  // Both frontiers expand with the same involutive moves; paths meeting in
  // the middle concatenate, the backward half reversed.
  std::map<std::string, std::pair<Formula, std::vector<Move>>> fwd, bwd;
  fwd.emplace(to_text(from), std::make_pair(from, std::vector<Move>{}));
  bwd.emplace(to_text(to), std::make_pair(to, std::vector<Move>{}));
  std::deque<Formula> fq{from}, bq{to};

  std::vector<std::pair<Move, Formula>> next;
  while (!fq.empty() || !bq.empty()) {
    for (auto* side : {&fq, &bq}) {
      bool forward = side == &fq;
      auto& mine = forward ? fwd : bwd;
      auto& theirs = forward ? bwd : fwd;
      if (side->empty()) continue;
      Formula cur = side->front();
      side->pop_front();
      std::vector<Move> path = mine.at(to_text(cur)).second;
      successors(cur, next);
      for (auto& [move, succ_f] : next) {
        std::string key = to_text(succ_f);
        if (mine.count(key)) continue;
        std::vector<Move> new_path = path;
        new_path.push_back(move);
        auto hit = theirs.find(key);
        if (hit != theirs.end()) {
          std::vector<Move> full = forward ? new_path : hit->second.second;
          std::vector<Move> back = forward ? hit->second.second : new_path;
          full.insert(full.end(), back.rbegin(), back.rend());
          return full;
        }
        mine.emplace(key, std::make_pair(succ_f, new_path));
        side->push_back(succ_f);
      }
    }
  }
  throw PreconditionError("reshape: no exchange sequence found from " + to_text(from) + " to " +
                          to_text(to));
}

}  // namespace

ProofTree reshape(ProofTree p, const Formula& target) {
  std::vector<Move> moves = find_moves(ptree_formula(p), target);
  for (Move m : moves) {
    switch (m) {
      case Move::AB:
        p = mk::exchange_ab(std::move(p));
        break;
      case Move::CAB:
        p = mk::exchange_cab(std::move(p));
        break;
      case Move::ABD:
        p = mk::exchange_abd(std::move(p));
        break;
      case Move::CABD:
        p = mk::exchange_cabd(std::move(p));
        break;
    }
  }
  return p;
}

}  // namespace paw
