#include <cctype>

#include "paw/language.hpp"

namespace paw {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

void term_to_text(const Term& t, std::string& out) {
  std::visit(overloaded{
                 [&](const TmZero&) { out += '0'; },
                 [&](const TmVar& x) {
                   out += 'x';
                   out += std::to_string(x.index);
                 },
                 [&](const TmSucc& x) {
                   out += "S(";
                   term_to_text(x.arg, out);
                   out += ')';
                 },
                 [&](const TmPlus& x) {
                   out += '(';
                   term_to_text(x.left, out);
                   out += " + ";
                   term_to_text(x.right, out);
                   out += ')';
                 },
                 [&](const TmTimes& x) {
                   out += '(';
                   term_to_text(x.left, out);
                   out += " * ";
                   term_to_text(x.right, out);
                   out += ')';
                 },
             },
             t.node());
}

void formula_to_text(const Formula& f, std::string& out) {
  std::visit(overloaded{
                 [&](const FmAtom& x) {
                   term_to_text(x.atom.left, out);
                   out += " = ";
                   term_to_text(x.atom.right, out);
                 },
                 [&](const FmNeg& x) {
                   out += '~';
                   formula_to_text(x.body, out);
                 },
                 [&](const FmLor& x) {
                   out += '(';
                   formula_to_text(x.left, out);
                   out += " \\/ ";
                   formula_to_text(x.right, out);
                   out += ')';
                 },
                 [&](const FmUniv& x) {
                   out += "forall x";
                   out += std::to_string(x.index);
                   out += ", ";
                   formula_to_text(x.body, out);
                 },
             },
             f.node());
}

struct TextParser {
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

  bool try_consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool try_consume_word(std::string_view word) {
    skip_ws();
    if (text.substr(pos, word.size()) == word) {
      pos += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }

  Nat parse_index() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail("expected a variable index");
    }
    Nat n = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      n = n * 10 + static_cast<Nat>(text[pos] - '0');
      ++pos;
    }
    return n;
  }

  Term parse_term() {
    char c = peek();
    if (c == '0') {
      ++pos;
      return Term::zero();
    }
    if (c == 'x') {
      ++pos;
      return Term::var(parse_index());
    }
    if (c == 'S') {
      ++pos;
      expect('(');
      Term t = parse_term();
      expect(')');
      return Term::succ(std::move(t));
    }
    if (c == '(') {
      ++pos;
      Term left = parse_term();
      skip_ws();
      char op = peek();
      if (op != '+' && op != '*') fail("expected '+' or '*'");
      ++pos;
      Term right = parse_term();
      expect(')');
      return op == '+' ? Term::plus(std::move(left), std::move(right))
                       : Term::times(std::move(left), std::move(right));
    }
    fail("expected a term");
  }

  Formula parse_formula() {
    char c = peek();
    if (c == '~') {
      ++pos;
      return Formula::neg(parse_formula());
    }
    if (try_consume_word("forall")) {
      skip_ws();
      if (!try_consume('x')) fail("expected a variable after 'forall'");
      Nat index = parse_index();
      expect(',');
      return Formula::univ(index, parse_formula());
    }
    if (c == '(') {
      // A '(' opens either a disjunction or a parenthesized term of an atom;
      // try the atom reading first and fall back.
      std::size_t saved = pos;
      try {
        return parse_atom();
      } catch (const ParseError&) {
        pos = saved;
      }
      expect('(');
      Formula left = parse_formula();
      skip_ws();
      if (!try_consume_word("\\/")) fail("expected '\\/'");
      Formula right = parse_formula();
      expect(')');
      return Formula::lor(std::move(left), std::move(right));
    }
    return parse_atom();
  }

  Formula parse_atom() {
    Term left = parse_term();
    expect('=');
    Term right = parse_term();
    return Formula::atom(std::move(left), std::move(right));
  }

  template <class T, class Fn>
  T parse_full(Fn fn) {
    T result = (this->*fn)();
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return result;
  }
};

}  // namespace

std::string to_text(const Term& t) {
  std::string out;
  term_to_text(t, out);
  return out;
}

std::string to_text(const Formula& f) {
  std::string out;
  formula_to_text(f, out);
  return out;
}

Term parse_term(std::string_view text) {
  TextParser p{text};
  return p.parse_full<Term>(&TextParser::parse_term);
}

Formula parse_formula(std::string_view text) {
  TextParser p{text};
  return p.parse_full<Formula>(&TextParser::parse_formula);
}

}  // namespace paw
