#include "paw/prooftree_text.hpp"

#include <cctype>

namespace paw {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

// ---------------------------------------------------------------------------
// Writer

struct Writer {
  const std::vector<ClosedTerm>& samples;
  std::string out;

  void quoted(const std::string& s) {
    out += '"';
    out += s;  // the text syntax never contains quotes
    out += '"';
  }

  void formula(const Formula& f) { quoted(to_text(f)); }
  void term(const Term& t) { quoted(to_text(t)); }
  void nat(Nat n) { out += std::to_string(n); }
  void ord(const Ordinal& o) {
    out += "(ord ";
    quoted(to_text(o));
    out += ')';
  }

  void gen(const OmegaGen& g) {
    switch (g.kind()) {
      case OmegaGen::Kind::Template:
        out += "(template x" + std::to_string(g.template_param()) + " ";
        tree(g.template_body());
        out += ')';
        return;
      case OmegaGen::Kind::Sampled:
        out += "(sampled";
        for (const auto& [key, premise] : g.entries()) {
          out += " (";
          term(key.term());
          out += ' ';
          tree(premise);
          out += ')';
        }
        out += ')';
        return;
      case OmegaGen::Kind::Native:
        // Emitted as its finite expansion at the requested sample set.
        out += "(sampled";
        for (const ClosedTerm& t : samples) {
          out += " (";
          term(t.term());
          out += ' ';
          tree(g(t));
          out += ')';
        }
        out += ')';
        return;
    }
  }

  void tree(const ProofTree& p) {
    out += '(';
    out += rule_name(p);
    std::visit(
        overloaded{
            [&](const PtNode& n) { sp(), formula(n.formula); },
            [&](const PtDegUp& n) { sp(), nat(n.degree), sp(), tree(n.child); },
            [&](const PtOrdUp& n) { sp(), ord(n.height), sp(), tree(n.child); },
            [&](const PtExchangeAB& n) {
              sp(), formula(n.a), sp(), formula(n.b), sp(), nat(n.deg), sp(), ord(n.ht), sp(),
                  tree(n.child);
            },
            [&](const PtExchangeCAB& n) {
              sp(), formula(n.c), sp(), formula(n.a), sp(), formula(n.b), sp(), nat(n.deg), sp(),
                  ord(n.ht), sp(), tree(n.child);
            },
            [&](const PtExchangeABD& n) {
              sp(), formula(n.a), sp(), formula(n.b), sp(), formula(n.d), sp(), nat(n.deg), sp(),
                  ord(n.ht), sp(), tree(n.child);
            },
            [&](const PtExchangeCABD& n) {
              sp(), formula(n.c), sp(), formula(n.a), sp(), formula(n.b), sp(), formula(n.d),
                  sp(), nat(n.deg), sp(), ord(n.ht), sp(), tree(n.child);
            },
            [&](const PtContractionA& n) {
              sp(), formula(n.a), sp(), nat(n.deg), sp(), ord(n.ht), sp(), tree(n.child);
            },
            [&](const PtContractionAD& n) {
              sp(), formula(n.a), sp(), formula(n.d), sp(), nat(n.deg), sp(), ord(n.ht), sp(),
                  tree(n.child);
            },
            [&](const PtWeakeningAD& n) {
              sp(), formula(n.a), sp(), formula(n.d), sp(), nat(n.deg), sp(), ord(n.ht), sp(),
                  tree(n.child);
            },
            [&](const PtDemorganAB& n) {
              sp(), formula(n.a), sp(), formula(n.b), sp(), nat(n.deg1), sp(), nat(n.deg2), sp(),
                  ord(n.ht1), sp(), ord(n.ht2), sp(), tree(n.left), sp(), tree(n.right);
            },
            [&](const PtDemorganABD& n) {
              sp(), formula(n.a), sp(), formula(n.b), sp(), formula(n.d), sp(), nat(n.deg1), sp(),
                  nat(n.deg2), sp(), ord(n.ht1), sp(), ord(n.ht2), sp(), tree(n.left), sp(),
                  tree(n.right);
            },
            [&](const PtNegationA& n) {
              sp(), formula(n.a), sp(), nat(n.deg), sp(), ord(n.ht), sp(), tree(n.child);
            },
            [&](const PtNegationAD& n) {
              sp(), formula(n.a), sp(), formula(n.d), sp(), nat(n.deg), sp(), ord(n.ht), sp(),
                  tree(n.child);
            },
            [&](const PtQuantificationA& n) {
              sp(), formula(n.a), sp(), nat(n.var), sp(), term(n.witness), sp(), nat(n.deg), sp(),
                  ord(n.ht), sp(), tree(n.child);
            },
            [&](const PtQuantificationAD& n) {
              sp(), formula(n.a), sp(), formula(n.d), sp(), nat(n.var), sp(), term(n.witness),
                  sp(), nat(n.deg), sp(), ord(n.ht), sp(), tree(n.child);
            },
            [&](const PtOmegaA& n) {
              sp(), formula(n.a), sp(), nat(n.var), sp(), nat(n.deg), sp(), ord(n.ht), sp(),
                  gen(n.gen);
            },
            [&](const PtOmegaAD& n) {
              sp(), formula(n.a), sp(), formula(n.d), sp(), nat(n.var), sp(), nat(n.deg), sp(),
                  ord(n.ht), sp(), gen(n.gen);
            },
            [&](const PtCutCA& n) {
              sp(), formula(n.c), sp(), formula(n.a), sp(), nat(n.deg1), sp(), nat(n.deg2), sp(),
                  ord(n.ht1), sp(), ord(n.ht2), sp(), tree(n.left), sp(), tree(n.right);
            },
            [&](const PtCutAD& n) {
              sp(), formula(n.a), sp(), formula(n.d), sp(), nat(n.deg1), sp(), nat(n.deg2), sp(),
                  ord(n.ht1), sp(), ord(n.ht2), sp(), tree(n.left), sp(), tree(n.right);
            },
            [&](const PtCutCAD& n) {
              sp(), formula(n.c), sp(), formula(n.a), sp(), formula(n.d), sp(), nat(n.deg1), sp(),
                  nat(n.deg2), sp(), ord(n.ht1), sp(), ord(n.ht2), sp(), tree(n.left), sp(),
                  tree(n.right);
            },
        },
        p.node());
    out += ')';
  }

  void sp() { out += ' '; }
};

// ---------------------------------------------------------------------------
// Parser

struct PtParser {
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
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string symbol() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (pos == start) fail("expected a symbol");
    return std::string(text.substr(start, pos - start));
  }

  std::string quoted() {
    skip_ws();
    if (pos >= text.size() || text[pos] != '"') fail("expected a quoted string");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != '"') ++pos;
    if (pos >= text.size()) fail("unterminated quoted string");
    std::string s(text.substr(start, pos - start));
    ++pos;
    return s;
  }

  Nat nat() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail("expected a number");
    }
    Nat n = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      n = n * 10 + static_cast<Nat>(text[pos] - '0');
      ++pos;
    }
    return n;
  }

  template <class T, class Fn>
  T reparse(Fn fn, const char* what) {
    std::size_t at = pos;
    std::string s = quoted();
    try {
      return fn(s);
    } catch (const ParseError& e) {
      pos = at;
      fail(std::string("bad ") + what + ": " + e.what());
    }
  }

  Formula formula() {
    return reparse<Formula>([](const std::string& s) { return parse_formula(s); }, "formula");
  }
  Term term() {
    return reparse<Term>([](const std::string& s) { return parse_term(s); }, "term");
  }

  Ordinal ord() {
    expect('(');
    if (symbol() != "ord") fail("expected 'ord'");
    Ordinal o = reparse<Ordinal>([](const std::string& s) { return parse_ordinal(s); }, "ordinal");
    expect(')');
    return o;
  }

  OmegaGen gen() {
    expect('(');
    std::string head = symbol();
    if (head == "template") {
      skip_ws();
      if (pos >= text.size() || text[pos] != 'x') fail("expected a template parameter x<i>");
      ++pos;
      Nat param = nat();
      ProofTree body = tree();
      expect(')');
      return OmegaGen::with_template(param, std::move(body));
    }
    if (head == "sampled") {
      std::vector<std::pair<ClosedTerm, ProofTree>> entries;
      while (peek() == '(') {
        expect('(');
        Term key = term();
        if (!closed_term(key)) fail("sample term " + to_text(key) + " is not closed");
        ProofTree premise = tree();
        expect(')');
        entries.emplace_back(ClosedTerm(std::move(key)), std::move(premise));
      }
      expect(')');
      return OmegaGen::sampled(std::move(entries));
    }
    fail("expected 'template' or 'sampled'");
  }

  ProofTree tree() {
    expect('(');
    std::string head = symbol();
    ProofTree result = dispatch(head);
    expect(')');
    return result;
  }

  ProofTree dispatch(const std::string& head) {
    if (head == "node") return pt::node(formula());
    if (head == "deg_up") {
      Nat d = nat();
      return pt::deg_up(d, tree());
    }
    if (head == "ord_up") {
      Ordinal o = ord();
      return pt::ord_up(std::move(o), tree());
    }
    if (head == "exchange_ab") {
      Formula a = formula(), b = formula();
      Nat d = nat();
      Ordinal o = ord();
      return pt::exchange_ab(std::move(a), std::move(b), d, std::move(o), tree());
    }
    if (head == "exchange_cab") {
      Formula c = formula(), a = formula(), b = formula();
      Nat d = nat();
      Ordinal o = ord();
      return pt::exchange_cab(std::move(c), std::move(a), std::move(b), d, std::move(o), tree());
    }
    if (head == "exchange_abd") {
      Formula a = formula(), b = formula(), dd = formula();
      Nat d = nat();
      Ordinal o = ord();
      return pt::exchange_abd(std::move(a), std::move(b), std::move(dd), d, std::move(o), tree());
    }
    if (head == "exchange_cabd") {
      Formula c = formula(), a = formula(), b = formula(), dd = formula();
      Nat d = nat();
      Ordinal o = ord();
      return pt::exchange_cabd(std::move(c), std::move(a), std::move(b), std::move(dd), d,
                               std::move(o), tree());
    }
    if (head == "contraction_a") {
      Formula a = formula();
      Nat d = nat();
      Ordinal o = ord();
      return pt::contraction_a(std::move(a), d, std::move(o), tree());
    }
    if (head == "contraction_ad") {
      Formula a = formula(), dd = formula();
      Nat d = nat();
      Ordinal o = ord();
      return pt::contraction_ad(std::move(a), std::move(dd), d, std::move(o), tree());
    }
    if (head == "weakening_ad") {
      Formula a = formula(), dd = formula();
      Nat d = nat();
      Ordinal o = ord();
      return pt::weakening_ad(std::move(a), std::move(dd), d, std::move(o), tree());
    }
    if (head == "demorgan_ab") {
      Formula a = formula(), b = formula();
      Nat d1 = nat(), d2 = nat();
      Ordinal o1 = ord(), o2 = ord();
      ProofTree left = tree();
      return pt::demorgan_ab(std::move(a), std::move(b), d1, d2, std::move(o1), std::move(o2),
                             std::move(left), tree());
    }
    if (head == "demorgan_abd") {
      Formula a = formula(), b = formula(), dd = formula();
      Nat d1 = nat(), d2 = nat();
      Ordinal o1 = ord(), o2 = ord();
      ProofTree left = tree();
      return pt::demorgan_abd(std::move(a), std::move(b), std::move(dd), d1, d2, std::move(o1),
                              std::move(o2), std::move(left), tree());
    }
    if (head == "negation_a") {
      Formula a = formula();
      Nat d = nat();
      Ordinal o = ord();
      return pt::negation_a(std::move(a), d, std::move(o), tree());
    }
    if (head == "negation_ad") {
      Formula a = formula(), dd = formula();
      Nat d = nat();
      Ordinal o = ord();
      return pt::negation_ad(std::move(a), std::move(dd), d, std::move(o), tree());
    }
    if (head == "quantification_a") {
      Formula a = formula();
      Nat var = nat();
      Term w = term();
      Nat d = nat();
      Ordinal o = ord();
      return pt::quantification_a(std::move(a), var, std::move(w), d, std::move(o), tree());
    }
    if (head == "quantification_ad") {
      Formula a = formula(), dd = formula();
      Nat var = nat();
      Term w = term();
      Nat d = nat();
      Ordinal o = ord();
      return pt::quantification_ad(std::move(a), std::move(dd), var, std::move(w), d,
                                   std::move(o), tree());
    }
    if (head == "w_rule_a") {
      Formula a = formula();
      Nat var = nat(), d = nat();
      Ordinal o = ord();
      return pt::w_rule_a(std::move(a), var, d, std::move(o), gen());
    }
    if (head == "w_rule_ad") {
      Formula a = formula(), dd = formula();
      Nat var = nat(), d = nat();
      Ordinal o = ord();
      return pt::w_rule_ad(std::move(a), std::move(dd), var, d, std::move(o), gen());
    }
    if (head == "cut_ca") {
      Formula c = formula(), a = formula();
      Nat d1 = nat(), d2 = nat();
      Ordinal o1 = ord(), o2 = ord();
      ProofTree left = tree();
      return pt::cut_ca(std::move(c), std::move(a), d1, d2, std::move(o1), std::move(o2),
                        std::move(left), tree());
    }
    if (head == "cut_ad") {
      Formula a = formula(), dd = formula();
      Nat d1 = nat(), d2 = nat();
      Ordinal o1 = ord(), o2 = ord();
      ProofTree left = tree();
      return pt::cut_ad(std::move(a), std::move(dd), d1, d2, std::move(o1), std::move(o2),
                        std::move(left), tree());
    }
    if (head == "cut_cad") {
      Formula c = formula(), a = formula(), dd = formula();
      Nat d1 = nat(), d2 = nat();
      Ordinal o1 = ord(), o2 = ord();
      ProofTree left = tree();
      return pt::cut_cad(std::move(c), std::move(a), std::move(dd), d1, d2, std::move(o1),
                         std::move(o2), std::move(left), tree());
    }
    fail("unknown proof constructor '" + head + "'");
  }
};

}  // namespace

std::string to_text(const ProofTree& p, const std::vector<ClosedTerm>& omega_samples) {
  Writer w{omega_samples, {}};
  w.tree(p);
  return w.out;
}

ProofTree parse_prooftree(std::string_view text) {
  PtParser p{text};
  ProofTree result = p.tree();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input after proof tree");
  return result;
}

}  // namespace paw
