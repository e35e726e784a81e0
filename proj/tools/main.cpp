#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "paw/cutelim.hpp"
#include "paw/derivations.hpp"
#include "paw/inversion.hpp"
#include "paw/peano.hpp"
#include "paw/prooftree_text.hpp"
#include "paw/report.hpp"

namespace {

using namespace paw;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

struct Options {
  std::vector<std::string> positional;
  Nat omega_samples = 5;
  bool report = false;
  std::optional<std::string> out;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Options parse_options(int argc, char** argv, int start) {
  Options opt;
  for (int i = start; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--report") {
      opt.report = true;
    } else if (arg == "--omega-samples") {
      if (++i >= argc) throw UsageError("--omega-samples needs a value");
      opt.omega_samples = std::stoull(argv[i]);
    } else if (arg == "--out") {
      if (++i >= argc) throw UsageError("--out needs a file name");
      opt.out = argv[i];
    } else if (arg.rfind("--", 0) == 0) {
      throw UsageError("unknown flag " + arg);
    } else {
      opt.positional.push_back(std::move(arg));
    }
  }
  return opt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const Options& opt, const std::string& text, Report& report) {
  if (opt.out) {
    std::ofstream out(*opt.out, std::ios::binary);
    if (!out) throw UsageError("cannot write " + *opt.out);
    out << text << '\n';
    report.add("out-file", *opt.out);
  } else {
    report.add("proof", text);
  }
}

void add_decoration(Report& report, const char* prefix, const ProofTree& p) {
  report.add(std::string(prefix) + "-formula", to_text(ptree_formula(p)));
  report.add(std::string(prefix) + "-degree", std::to_string(ptree_deg(p)));
  report.add(std::string(prefix) + "-height", to_text(ptree_ord(p)));
}

void add_histogram(Report& report, const ProofTree& p, const std::vector<ClosedTerm>& samples) {
  std::string h;
  for (const auto& [rule, count] : rule_histogram(p, samples)) {
    if (!h.empty()) h += ' ';
    h += rule + "=" + std::to_string(count);
  }
  report.add("rule-histogram", h);
}

int cmd_check(const Options& opt) {
  if (opt.positional.size() != 1) throw UsageError("usage: check <proof-file>");
  ProofTree p = parse_prooftree(read_file(opt.positional[0]));
  std::vector<ClosedTerm> samples = make_omega_samples(opt.omega_samples);
  CheckResult result = check_tree(p, samples);
  Report report;
  report.add("command", "check");
  report.add("input-file", opt.positional[0]);
  add_decoration(report, "input", p);
  report.add("well-formed", result.ok ? "yes" : "no");
  if (!result.ok) report.add("diagnostic", result.failure->to_string());
  std::cout << report.render();
  return result.ok ? kOk : kVerificationFailure;
}

int cmd_eliminate(const Options& opt) {
  if (opt.positional.size() != 1) throw UsageError("usage: eliminate <proof-file>");
  ProofTree p = parse_prooftree(read_file(opt.positional[0]));
  std::vector<ClosedTerm> samples = make_omega_samples(opt.omega_samples);
  Report report;
  report.add("command", "eliminate");
  report.add("input-file", opt.positional[0]);
  CheckResult pre = check_tree(p, samples);
  if (!pre.ok) {
    report.add("well-formed", "no");
    report.add("diagnostic", pre.failure->to_string());
    std::cout << report.render();
    return kVerificationFailure;
  }
  add_decoration(report, "input", p);
  ProofTree out = cut_elim(p);
  add_decoration(report, "output", out);
  if (opt.report) add_histogram(report, out, samples);
  CheckResult post = check_tree(out, samples);
  report.add("output-well-formed", post.ok ? "yes" : "no");
  if (!post.ok) report.add("diagnostic", post.failure->to_string());
  write_output(opt, to_text(out, samples), report);
  std::cout << report.render();
  return post.ok ? kOk : kVerificationFailure;
}

int cmd_invert(const Options& opt) {
  if (opt.positional.size() < 3) {
    throw UsageError("usage: invert {dubneg|demorgan1|demorgan2|omega} <proof-file> <pattern> "
                     "<indicator> [term]");
  }
  const std::string& kind = opt.positional[0];
  ProofTree p = parse_prooftree(read_file(opt.positional[1]));
  Formula pattern = parse_formula(opt.positional[2]);
  SubstIndicator ind = opt.positional.size() > 3 ? parse_indicator(opt.positional[3])
                                                 : target(ptree_formula(p));
  std::vector<ClosedTerm> samples = make_omega_samples(opt.omega_samples);
  Report report;
  report.add("command", "invert");
  report.add("kind", kind);
  CheckResult pre = check_tree(p, samples);
  if (!pre.ok) {
    report.add("well-formed", "no");
    report.add("diagnostic", pre.failure->to_string());
    std::cout << report.render();
    return kVerificationFailure;
  }
  add_decoration(report, "input", p);
  ProofTree out = [&] {
    if (kind == "dubneg") return invert_dubneg(p, pattern, ind);
    if (kind == "demorgan1") return invert_demorgan_1(p, pattern, ind);
    if (kind == "demorgan2") return invert_demorgan_2(p, pattern, ind);
    if (kind == "omega") {
      if (opt.positional.size() != 5) throw UsageError("invert omega needs a closed term");
      Term t = parse_term(opt.positional[4]);
      if (!closed_term(t)) throw UsageError("instantiation term must be closed");
      return invert_omega(p, pattern, ind, ClosedTerm(std::move(t)));
    }
    throw UsageError("unknown inversion '" + kind + "'");
  }();
  add_decoration(report, "output", out);
  CheckResult post = check_tree(out, samples);
  report.add("output-well-formed", post.ok ? "yes" : "no");
  if (!post.ok) report.add("diagnostic", post.failure->to_string());
  write_output(opt, to_text(out, samples), report);
  std::cout << report.render();
  return post.ok ? kOk : kVerificationFailure;
}

int cmd_derive(const Options& opt) {
  if (opt.positional.empty()) {
    throw UsageError(
        "usage: derive {lem|lem-term|induction|pa-axiom|fol1|fol2|fol3|fol4|fol5} <args>");
  }
  const std::string& kind = opt.positional[0];
  std::vector<std::string> args(opt.positional.begin() + 1, opt.positional.end());
  auto closed_arg = [](const std::string& text) {
    Term t = parse_term(text);
    if (!closed_term(t)) throw UsageError("term " + text + " must be closed");
    return ClosedTerm(std::move(t));
  };

  ProofTree out = [&]() -> ProofTree {
    if (kind == "lem") {
      if (args.size() != 1) throw UsageError("usage: derive lem <formula>");
      return build_LEM(parse_formula(args[0]));
    }
    if (kind == "lem-term") {
      if (args.size() != 4) throw UsageError("usage: derive lem-term <formula> <var> <s> <t>");
      return build_LEM_term(parse_formula(args[0]), std::stoull(args[1]), closed_arg(args[2]),
                            closed_arg(args[3]));
    }
    if (kind == "induction") {
      if (args.size() != 2) throw UsageError("usage: derive induction <formula> <var>");
      return derive_induction(parse_formula(args[0]), std::stoull(args[1]));
    }
    if (kind == "pa-axiom") {
      if (args.empty()) throw UsageError("usage: derive pa-axiom <id> [instance terms...]");
      std::string id = args[0];
      if (args.size() == 1) return derive_arith_quantified(id);
      std::vector<ClosedTerm> terms;
      for (std::size_t i = 1; i < args.size(); ++i) terms.push_back(closed_arg(args[i]));
      return derive_arith(id, terms);
    }
    if (kind == "fol1") {
      if (args.size() != 2) throw UsageError("usage: derive fol1 <A> <B>");
      return derive_FOL1(parse_formula(args[0]), parse_formula(args[1]));
    }
    if (kind == "fol2") {
      if (args.size() != 3) throw UsageError("usage: derive fol2 <A> <B> <C>");
      return derive_FOL2(parse_formula(args[0]), parse_formula(args[1]), parse_formula(args[2]));
    }
    if (kind == "fol3") {
      if (args.size() != 2) throw UsageError("usage: derive fol3 <A> <B>");
      return derive_FOL3(parse_formula(args[0]), parse_formula(args[1]));
    }
    if (kind == "fol4") {
      if (args.size() != 3) throw UsageError("usage: derive fol4 <A> <var> <t>");
      return derive_FOL4(parse_formula(args[0]), std::stoull(args[1]), closed_arg(args[2]));
    }
    if (kind == "fol5") {
      if (args.size() != 3) throw UsageError("usage: derive fol5 <A> <B> <var>");
      return derive_FOL5(parse_formula(args[0]), parse_formula(args[1]), std::stoull(args[2]));
    }
    throw UsageError("unknown derivation kind '" + kind + "'");
  }();

  std::vector<ClosedTerm> samples = make_omega_samples(opt.omega_samples);
  Report report;
  report.add("command", "derive");
  report.add("kind", kind);
  add_decoration(report, "output", out);
  CheckResult post = check_tree(out, samples);
  report.add("output-well-formed", post.ok ? "yes" : "no");
  if (!post.ok) report.add("diagnostic", post.failure->to_string());
  write_output(opt, to_text(out, samples), report);
  std::cout << report.render();
  return post.ok ? kOk : kVerificationFailure;
}

int cmd_translate(const Options& opt) {
  if (opt.positional.size() != 2) {
    throw UsageError("usage: translate <pa-proof-file> <closed-term>");
  }
  PeanoProof p = parse_peano_proof(read_file(opt.positional[0]));
  Term c = parse_term(opt.positional[1]);
  if (!closed_term(c)) throw UsageError("closure term must be closed");
  std::vector<ClosedTerm> samples = make_omega_samples(opt.omega_samples);
  ProofTree out = translate(p, ClosedTerm(std::move(c)));
  Report report;
  report.add("command", "translate");
  report.add("input-file", opt.positional[0]);
  report.add("pa-conclusion", to_text(p.conclusion()));
  add_decoration(report, "output", out);
  CheckResult post = check_tree(out, samples);
  report.add("output-well-formed", post.ok ? "yes" : "no");
  if (!post.ok) report.add("diagnostic", post.failure->to_string());
  write_output(opt, to_text(out, samples), report);
  std::cout << report.render();
  return post.ok ? kOk : kVerificationFailure;
}

int usage() {
  std::cerr << "usage: paw <command> [args] [--omega-samples N] [--report] [--out FILE]\n"
               "commands:\n"
               "  check <proof-file>\n"
               "  eliminate <proof-file>\n"
               "  invert {dubneg|demorgan1|demorgan2|omega} <proof-file> <pattern> <indicator> "
               "[term]\n"
               "  derive {lem|lem-term|induction|pa-axiom|fol1..fol5} <args>\n"
               "  translate <pa-proof-file> <closed-term>\n";
  return kUsageError;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) return usage();
  std::string command = argv[1];
  try {
    Options opt = parse_options(argc, argv, 2);
    if (command == "check") return cmd_check(opt);
    if (command == "eliminate") return cmd_eliminate(opt);
    if (command == "invert") return cmd_invert(opt);
    if (command == "derive") return cmd_derive(opt);
    if (command == "translate") return cmd_translate(opt);
    return usage();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerificationFailure;
  }
}
