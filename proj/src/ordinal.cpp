#include "paw/ordinal.hpp"

#include <cctype>
#include <utility>

namespace paw {

Ordinal Ordinal::cons(Ordinal exponent, Natural count, Ordinal rest) {
  if (count < 0) {
    throw PreconditionError("Ordinal::cons: negative count");
  }
  Ordinal o;
  o.node_ = std::make_shared<const Node>(Node{std::move(exponent), std::move(count), std::move(rest)});
  return o;
}

const Ordinal& Ordinal::exponent() const {
  if (!node_) throw PreconditionError("Ordinal::exponent on zero");
  return node_->exponent;
}

const Natural& Ordinal::count() const {
  if (!node_) throw PreconditionError("Ordinal::count on zero");
  return node_->count;
}

const Ordinal& Ordinal::rest() const {
  if (!node_) throw PreconditionError("Ordinal::rest on zero");
  return node_->rest;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.count() == b.count() && a.exponent() == b.exponent() && a.rest() == b.rest();
}

bool lt(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return false;
  if (a.is_zero()) return true;  // zero_lt
  if (lt(a.exponent(), b.exponent())) return true;  // head_lt
  if (a.exponent() != b.exponent()) return false;
  if (a.count() < b.count()) return true;  // coeff_lt
  if (a.count() != b.count()) return false;
  return lt(a.rest(), b.rest());  // tail_lt
}

bool is_nf(const Ordinal& a) {
  if (a.is_zero()) return true;  // zero_nf
  if (!is_nf(a.exponent())) return false;
  if (a.rest().is_zero()) return true;  // single_nf
  // cons_nf: the rest's leading exponent must drop strictly.
  return lt(a.rest().exponent(), a.exponent()) && is_nf(a.rest());
}

Ordinal nat_ord(const Natural& n) {
  if (n < 0) throw PreconditionError("nat_ord: negative argument");
  if (n == 0) return Ordinal::zero();
  return Ordinal::cons(Ordinal::zero(), n - 1, Ordinal::zero());
}

Ordinal nat_ord(unsigned long long n) { return nat_ord(Natural(n)); }

bool is_natural(const Ordinal& a) {
  if (a.is_zero()) return true;
  return a.exponent().is_zero() && a.rest().is_zero();
}

Natural to_natural(const Ordinal& a) {
  if (!is_natural(a)) throw PreconditionError("to_natural: not a natural notation");
  if (a.is_zero()) return 0;
  return a.count() + 1;
}

bool is_successor(const Ordinal& a) {
  if (a.is_zero()) return false;
  if (a.rest().is_zero()) return a.exponent().is_zero();
  return is_successor(a.rest());
}

bool is_limit(const Ordinal& a) { return !a.is_zero() && !is_successor(a); }

Ordinal succ(const Ordinal& a) {
  if (a.is_zero()) return nat_ord(1);
  if (a.exponent().is_zero()) return Ordinal::cons(Ordinal::zero(), a.count() + 1, Ordinal::zero());
  return Ordinal::cons(a.exponent(), a.count(), succ(a.rest()));
}

Ordinal pred(const Ordinal& a) {
  if (a.is_zero()) return a;
  if (is_limit(a)) throw PreconditionError("pred: undefined on limit notation " + to_text(a));
  if (a.exponent().is_zero()) {
    if (a.count() == 0) return Ordinal::zero();
    return Ordinal::cons(Ordinal::zero(), a.count() - 1, Ordinal::zero());
  }
  return Ordinal::cons(a.exponent(), a.count(), pred(a.rest()));
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Compare leading exponents; a smaller left head is absorbed by b.
  if (lt(a.exponent(), b.exponent())) return b;
  if (a.exponent() == b.exponent()) {
    return Ordinal::cons(a.exponent(), a.count() + b.count() + 1, b.rest());
  }
  return Ordinal::cons(a.exponent(), a.count(), add(a.rest(), b));
}

Ordinal mult(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal::zero();
  if (b.exponent().is_zero()) {
    // Right factor is finite: only the leading coefficient multiplies.
    Natural k = b.count() + 1;
    return Ordinal::cons(a.exponent(), (a.count() + 1) * k - 1, a.rest());
  }
  // a * (w^e * (n+1) + rest) = w^(head(a)+e) * (n+1) + a * rest
  return Ordinal::cons(add(a.exponent(), b.exponent()), b.count(), mult(a, b.rest()));
}

namespace {

// Bound on the bit width of finite results; beyond this the notation itself
// is too large to materialize.
constexpr unsigned long long kMaxFiniteExpBits = 1u << 24;

Natural pow2_nat(const Natural& n) {
  if (n > kMaxFiniteExpBits) {
    throw std::overflow_error("exp2: finite result 2^" + n.str() + " is too large to represent");
  }
  return Natural(1) << static_cast<unsigned>(n);
}

// E(e) with 2^(w^e') = w^(w^E(e')): predecessor on finite exponents, identity
// on infinite ones (where 1 + e = e).
Ordinal exp_shift(const Ordinal& e) {
  if (is_natural(e)) return nat_ord(to_natural(e) - 1);
  return e;
}

}  // namespace

Ordinal exp2(const Ordinal& a) {
  if (a.is_zero()) return nat_ord(1);
  if (is_natural(a)) return nat_ord(pow2_nat(to_natural(a)));
  // 2^(w^e*(n+1) + rest) = w^(w^E(e)*(n+1)) * 2^rest
  Ordinal head = Ordinal::cons(Ordinal::cons(exp_shift(a.exponent()), a.count(), Ordinal::zero()),
                               0, Ordinal::zero());
  return mult(head, exp2(a.rest()));
}

Ordinal ord_max(const Ordinal& a, const Ordinal& b) { return lt(a, b) ? b : a; }

namespace {

void power_to_text(const Ordinal& a, std::string& out);

// Exponent position: bare chains of w^ for single powers, parens otherwise.
void exponent_to_text(const Ordinal& e, std::string& out) {
  if (e.is_zero()) {
    out += '0';
  } else if (e.count() == 0 && e.rest().is_zero()) {
    out += "w^";
    exponent_to_text(e.exponent(), out);
  } else {
    out += '(';
    power_to_text(e, out);
    out += ')';
  }
}

void power_to_text(const Ordinal& a, std::string& out) {
  const Ordinal* cur = &a;
  bool first = true;
  while (!cur->is_zero()) {
    if (!first) out += " + ";
    first = false;
    out += "w^";
    exponent_to_text(cur->exponent(), out);
    out += '*';
    out += Natural(cur->count() + 1).str();
    cur = &cur->rest();
  }
}

struct OrdParser {
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
    if (pos >= text.size() || text[pos] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos;
  }

  Natural parse_nat() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail("expected a number");
    }
    Natural n = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      n = n * 10 + (text[pos] - '0');
      ++pos;
    }
    return n;
  }

  Ordinal parse_exponent() {
    char c = peek();
    if (c == '0') {
      ++pos;
      return Ordinal::zero();
    }
    if (c == '(') {
      ++pos;
      Ordinal inner = parse_sum();
      expect(')');
      return inner;
    }
    if (c == 'w') {
      ++pos;
      expect('^');
      return Ordinal::cons(parse_exponent(), 0, Ordinal::zero());
    }
    fail("expected an exponent: '0', 'w^...', or '(...)'");
  }

  Ordinal parse_power() {
    skip_ws();
    if (peek() != 'w') fail("expected 'w'");
    ++pos;
    expect('^');
    Ordinal e = parse_exponent();
    expect('*');
    Natural k = parse_nat();
    if (k == 0) fail("coefficient must be positive");
    return Ordinal::cons(std::move(e), k - 1, Ordinal::zero());
  }

  // Terms are kept in the written order; the notation is built verbatim and
  // need not be normal.
  Ordinal parse_sum() {
    if (peek() == '0') {
      ++pos;
      return Ordinal::zero();
    }
    Ordinal first = parse_power();
    if (peek() == '+') {
      ++pos;
      Ordinal tail = parse_sum();
      return Ordinal::cons(first.exponent(), first.count(), std::move(tail));
    }
    return first;
  }

  Ordinal parse_full() {
    Ordinal o = parse_sum();
    skip_ws();
    if (pos != text.size()) fail("trailing input after ordinal");
    return o;
  }
};

}  // namespace

std::string to_text(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  power_to_text(a, out);
  return out;
}

Ordinal parse_ordinal(std::string_view text) {
  OrdParser p{text};
  return p.parse_full();
}

}  // namespace paw
