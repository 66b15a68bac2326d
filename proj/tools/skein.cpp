// Command-line front end for the skein quotient engine.
//
// Exit codes: 0 success (or "yes" answers), 1 computed negative answer
// (non-member, failing verify checks), 2 usage or parse errors.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "skein/parser.hpp"
#include "skein/quotient.hpp"
#include "skein/verify.hpp"

namespace {

const char* kUsage = R"(usage: skein <subcommand> [args]

subcommands:
  nf "<expr>" [--json] [--cert]   canonical normal form in R[x1,x2,y]/G
  member "<expr>"                 membership certificate for the span of {G_n}
  classify "<expr>"               Zero | Torsion | HasFreePart
  split "<expr>"                  torsion coordinates + free residue
  nf-loc "<expr>"                 localized (y-free) normal form
  gen <family> <n>                print a generator (G J Q U F sigma W)
  verify [--max-n N] [--seed S] [--cases C] [--json]
                                  replay the identity and structure suites

Expressions use q, x1, x2, y, integers, + - * ^ and the builtins
G(n) J(n) Q(n) U(n) F(n) sigma(n) W(n) S(n,var) T(n,var) bk(n) qi(n).
Pass "-" to read the expression from standard input.
)";

std::string read_expr_arg(const std::string& arg) {
  if (arg != "-") return arg;
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

int usage_error(const std::string& msg) {
  std::cerr << "skein: " << msg << "\n" << kUsage;
  return 2;
}

skein::SkeinPoly eval_or_exit(const std::string& text) {
  return skein::eval(skein::parse(text));
}

int cmd_nf(const std::vector<std::string>& args) {
  std::string expr;
  bool json = false, cert = false;
  for (const auto& a : args) {
    if (a == "--json") json = true;
    else if (a == "--cert") cert = true;
    else if (expr.empty()) expr = a;
    else return usage_error("nf takes one expression");
  }
  if (expr.empty()) return usage_error("nf requires an expression");
  skein::NormalForm nf = skein::normal_form(eval_or_exit(read_expr_arg(expr)));
  if (json) {
    nlohmann::json out = {{"rep", skein::to_json(nf.rep)}};
    if (cert) out["cert"] = skein::to_json(nf.cert)["cert"];
    std::cout << out.dump() << "\n";
  } else {
    std::cout << skein::render(nf.rep) << "\n";
    if (cert) {
      for (const auto& [n, c] : nf.cert.entries)
        std::cout << "G(" << n << "): " << skein::render(c) << "\n";
    }
  }
  return 0;
}

int cmd_member(const std::vector<std::string>& args) {
  if (args.size() != 1) return usage_error("member requires one expression");
  auto cert = skein::membership(eval_or_exit(read_expr_arg(args[0])));
  if (!cert) {
    std::cout << "not a member\n";
    return 1;
  }
  std::cout << skein::to_json(*cert).dump() << "\n";
  return 0;
}

int cmd_classify(const std::vector<std::string>& args) {
  if (args.size() != 1) return usage_error("classify requires one expression");
  switch (skein::classify(eval_or_exit(read_expr_arg(args[0])))) {
    case skein::Classification::Zero: std::cout << "Zero\n"; break;
    case skein::Classification::Torsion: std::cout << "Torsion\n"; break;
    case skein::Classification::HasFreePart:
      std::cout << "HasFreePart\n";
      break;
  }
  return 0;
}

int cmd_split(const std::vector<std::string>& args) {
  if (args.size() != 1) return usage_error("split requires one expression");
  auto split = skein::torsion_split(eval_or_exit(read_expr_arg(args[0])));
  std::cout << skein::to_json(split).dump() << "\n";
  return 0;
}

int cmd_nf_loc(const std::vector<std::string>& args) {
  if (args.size() != 1) return usage_error("nf-loc requires one expression");
  auto loc = skein::normal_form_localized(eval_or_exit(read_expr_arg(args[0])));
  std::cout << "(" << skein::render(loc.numerator) << ") / ("
            << loc.denominator.str() << ")\n";
  return 0;
}

int cmd_gen(const std::vector<std::string>& args) {
  if (args.size() != 2) return usage_error("gen requires a family and an index");
  skein::Family family;
  if (args[0] == "G") family = skein::Family::G;
  else if (args[0] == "J") family = skein::Family::J;
  else if (args[0] == "Q") family = skein::Family::Q;
  else if (args[0] == "U") family = skein::Family::U;
  else if (args[0] == "F") family = skein::Family::F;
  else if (args[0] == "sigma") family = skein::Family::Sigma;
  else if (args[0] == "W") family = skein::Family::W;
  else return usage_error("unknown family '" + args[0] + "'");
  int n;
  try {
    n = std::stoi(args[1]);
  } catch (const std::exception&) {
    return usage_error("index must be an integer, got '" + args[1] + "'");
  }
  std::cout << skein::render(skein::gen_by_id({family, n})) << "\n";
  return 0;
}

int cmd_verify(const std::vector<std::string>& args) {
  int max_n = 30, cases = 200;
  unsigned long long seed = 0;
  bool json = false;
  for (size_t i = 0; i < args.size(); ++i) {
    auto next_int = [&](long long& out) {
      if (i + 1 >= args.size()) return false;
      try {
        out = std::stoll(args[++i]);
      } catch (const std::exception&) {
        return false;
      }
      return true;
    };
    long long v;
    if (args[i] == "--json") json = true;
    else if (args[i] == "--max-n" && next_int(v)) max_n = static_cast<int>(v);
    else if (args[i] == "--seed" && next_int(v))
      seed = static_cast<unsigned long long>(v);
    else if (args[i] == "--cases" && next_int(v)) cases = static_cast<int>(v);
    else return usage_error("bad verify argument '" + args[i] + "'");
  }
  skein::VerifyReport report = skein::run_suite(max_n);
  skein::VerifyReport structure = skein::run_structure_suite(seed, cases, 8);
  report.checks.insert(report.checks.end(), structure.checks.begin(),
                       structure.checks.end());
  if (json) {
    std::cout << skein::to_json(report).dump() << "\n";
  } else {
    for (const auto& c : report.checks)
      std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name << " [" << c.lo
                << ".." << c.hi << "]"
                << (c.pass ? "" : " at index " + std::to_string(c.witness_index))
                << "\n";
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) return usage_error("missing subcommand");
  std::string cmd = args[0];
  args.erase(args.begin());
  try {
    if (cmd == "nf") return cmd_nf(args);
    if (cmd == "member") return cmd_member(args);
    if (cmd == "classify") return cmd_classify(args);
    if (cmd == "split") return cmd_split(args);
    if (cmd == "nf-loc") return cmd_nf_loc(args);
    if (cmd == "gen") return cmd_gen(args);
    if (cmd == "verify") return cmd_verify(args);
    return usage_error("unknown subcommand '" + cmd + "'");
  } catch (const skein::ParseError& e) {
    std::cerr << "skein: " << e.what() << "\n";
    return 2;
  } catch (const skein::EvalError& e) {
    std::cerr << "skein: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "skein: " << e.what() << "\n";
    return 2;
  }
}
