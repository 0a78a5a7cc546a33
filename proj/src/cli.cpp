#include "tvg/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "tvg/classify.hpp"
#include "tvg/constructions.hpp"
#include "tvg/core.hpp"
#include "tvg/enumerate.hpp"
#include "tvg/errors.hpp"
#include "tvg/formal.hpp"
#include "tvg/group_file.hpp"
#include "tvg/isomorphism.hpp"

namespace tvg {

namespace {

// Accepts "1.5", "-2i", "i", "0.5+2i", "1e-3-4j".
cplx parse_complex(std::string s) {
  std::erase_if(s, [](char c) { return c == ' '; });
  if (s.empty()) throw CLI::ValidationError("empty complex number");
  auto real = [&](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != t.size()) throw CLI::ValidationError("not a number: '" + s + "'");
    return v;
  };
  const char last = s.back();
  if (last != 'i' && last != 'j') return {real(s), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      return {real(body.substr(0, k)), real(body.substr(k))};
    }
  }
  return {0.0, real(body)};
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

void print_report(const TwoValuedGroup& X, const ValidationReport& r, std::ostream& out) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "elements: " << X.size() << "\n";
  out << "two-valued group: " << yn(r.is_two_valued_group) << "\n";
  out << "commutative: " << yn(r.is_commutative) << "\n";
  out << "involutive: " << yn(r.is_involutive) << "\n";
  for (const Violation& v : r.violations) {
    out << "  " << to_string(v.axiom) << ":";
    for (ElementId x : v.witness) out << " " << X.name(x);
    out << "\n";
  }
  for (std::size_t a = 0; a < r.violation_counts.size(); ++a) {
    if (r.violation_counts[a] == 0) continue;
    out << "  total " << to_string(static_cast<Axiom>(a)) << " violations: " << r.violation_counts[a] << "\n";
  }
}

void print_table(const TwoValuedGroup& X, std::ostream& out) {
  for (ElementId a = 0; a < X.size(); ++a) {
    out << "   ";
    for (ElementId b = 0; b < X.size(); ++b) {
      const Pair p = X.at(a, b);
      out << " [" << X.name(p.lo) << "," << X.name(p.hi) << "]";
    }
    out << "\n";
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite involutive commutative two-valued groups", "tvg"};
  app.require_subcommand(1);

  auto* construct_cmd = app.add_subcommand("construct", "Build a group from one of the three series");
  std::string principal_arg, output_path;
  std::size_t unipotent_n = 0, special_n = 0, times_c2 = 0;
  auto* principal_opt = construct_cmd->add_option("--principal", principal_arg,
                                                  "Invariant factors d1,d2,... (each divides the next)");
  auto* unipotent_opt = construct_cmd->add_option("--unipotent", unipotent_n, "Unipotent series index n >= 1");
  auto* special_opt = construct_cmd->add_option("--special", special_n, "Special series index n >= 1");
  principal_opt->excludes(unipotent_opt, special_opt);
  unipotent_opt->excludes(special_opt);
  construct_cmd->add_option("--times-c2", times_c2, "Multiply by C2^m");
  construct_cmd->add_option("-o,--output", output_path, "Output file (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Check the two-valued group axioms");
  std::string file_a, file_b;
  verify_cmd->add_option("file", file_a)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Print the canonical isomorphism class label");
  classify_cmd->add_option("file", file_a)->required();

  auto* iso_cmd = app.add_subcommand("iso", "Decide whether two groups are isomorphic");
  bool witness = false;
  iso_cmd->add_option("file_a", file_a)->required();
  iso_cmd->add_option("file_b", file_b)->required();
  iso_cmd->add_flag("--witness", witness, "Search for and print an explicit isomorphism");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List all groups of a given size up to isomorphism");
  std::size_t k = 0;
  bool all = false, ic = false;
  enumerate_cmd->add_option("k", k)->required()->check(CLI::PositiveNumber);
  auto* all_flag = enumerate_cmd->add_flag("--all", all, "All commutative groups, involutive or not");
  enumerate_cmd->add_flag("--involutive-commutative", ic, "Involutive commutative groups (default)")
      ->excludes(all_flag);

  auto* elliptic_cmd = app.add_subcommand("elliptic", "Sample associativity of the algebraic addition law");
  std::string params_arg;
  std::size_t samples = 100;
  double tol = 1e-6;
  std::uint64_t seed = 1;
  elliptic_cmd->add_option("--params", params_arg, "a1,a2,a3 as complex numbers, e.g. 0.3,1-2i,0")->required();
  elliptic_cmd->add_option("--samples", samples, "Number of samples")->check(CLI::PositiveNumber);
  elliptic_cmd->add_option("--tol", tol, "Relative tolerance")->check(CLI::PositiveNumber);
  elliptic_cmd->add_option("--seed", seed, "Random seed");

  std::vector<const char*> argv{"tvg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (*construct_cmd && principal_arg.empty() && !*unipotent_opt && !*special_opt) {
      throw CLI::RequiredError("one of --principal, --unipotent, --special");
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "tvg: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*construct_cmd) {
      TwoValuedGroup X = [&] {
        if (!principal_arg.empty()) {
          std::vector<int> chain;
          for (const auto& tok : split_commas(principal_arg)) {
            std::size_t pos = 0;
            int d = 0;
            try {
              d = std::stoi(tok, &pos);
            } catch (const std::exception&) {
              pos = 0;
            }
            if (pos == 0 || pos != tok.size()) throw ParseError("--principal: not an integer: '" + tok + "'");
            chain.push_back(d);
          }
          return principal(chain);
        }
        if (*unipotent_opt) return unipotent(unipotent_n);
        return special_series(special_n);
      }();
      if (times_c2 > 0) X = product_with_boolean(X, times_c2);
      if (output_path.empty()) {
        out << serialize_group(X);
      } else {
        write_group(X, output_path);
        out << "wrote " << X.size() << " elements to " << output_path << "\n";
      }
      return 0;
    }
    if (*verify_cmd) {
      const TwoValuedGroup X = read_group(file_a);
      const ValidationReport r = verify_axioms(X);
      print_report(X, r, out);
      return r.is_two_valued_group ? 0 : 1;
    }
    if (*classify_cmd) {
      const TwoValuedGroup X = read_group(file_a);
      out << to_string(classify(X)) << "\n";
      return 0;
    }
    if (*iso_cmd) {
      const TwoValuedGroup X = read_group(file_a), Z = read_group(file_b);
      bool isomorphic = false;
      const bool both_ic =
          verify_axioms(X, 0).involutive_commutative_group() && verify_axioms(Z, 0).involutive_commutative_group();
      if (witness || !both_ic) {
        const auto f = witness_isomorphism(X, Z);
        isomorphic = f.has_value();
        if (f && witness) {
          for (ElementId x = 0; x < X.size(); ++x) out << X.name(x) << " -> " << Z.name((*f)[x]) << "\n";
        }
      } else {
        isomorphic = are_isomorphic(X, Z);
      }
      out << (isomorphic ? "isomorphic" : "not isomorphic") << "\n";
      return isomorphic ? 0 : 1;
    }
    if (*enumerate_cmd) {
      const auto mode = all ? EnumerationMode::Commutative : EnumerationMode::InvolutiveCommutative;
      const auto groups = enumerate_all(k, mode);
      out << groups.size() << (groups.size() == 1 ? " group" : " groups") << " of size " << k << "\n";
      for (std::size_t i = 0; i < groups.size(); ++i) {
        const ValidationReport r = verify_axioms(groups[i], 0);
        out << "[" << i + 1 << "] "
            << (r.is_involutive ? to_string(classify(groups[i])) : std::string("not involutive")) << "\n";
        print_table(groups[i], out);
      }
      return 0;
    }
    if (*elliptic_cmd) {
      const auto toks = split_commas(params_arg);
      if (toks.size() != 3) {
        err << "tvg: --params needs exactly three values a1,a2,a3\n";
        return 2;
      }
      LawParams p;
      try {
        p = {parse_complex(toks[0]), parse_complex(toks[1]), parse_complex(toks[2])};
      } catch (const CLI::ValidationError& e) {
        err << "tvg: --params: " << e.what() << "\n";
        return 2;
      }
      const AssociativitySweep s = associativity_sweep(p, samples, tol, seed);
      out << "samples checked: " << s.checked << " (redrawn near degeneracy: " << s.degenerate << ")\n";
      out << "associative: " << s.passed << "/" << s.checked << "\n";
      out << "max relative error: " << s.max_error << "\n";
      return s.ok() && s.checked == samples ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "tvg: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace tvg
