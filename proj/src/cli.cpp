#include "csplab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>

#include "csplab/catalan.hpp"
#include "csplab/errors.hpp"
#include "csplab/perms.hpp"
#include "csplab/registry.hpp"
#include "csplab/report.hpp"
#include "csplab/tableaux.hpp"

namespace csplab {

namespace {

struct RunConfig {
  std::string family;
  Params params;
  Checker checker = Checker::both;
  bool json = false;
  std::string out_path;
  Caps caps;
  std::optional<std::size_t> corrupt;
};

/// "--key value" and "--key=value" pairs left over after the fixed options.
Params parse_family_params(const std::vector<std::string>& extras) {
  Params params;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& tok = extras[i];
    if (tok.rfind("--", 0) != 0 || tok.size() <= 2) {
      throw PreconditionViolation("unexpected argument '" + tok + "'; family parameters are given as --key value");
    }
    std::string key = tok.substr(2);
    std::string value;
    if (auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else {
      if (i + 1 >= extras.size()) throw PreconditionViolation("parameter --" + key + " needs a value");
      value = extras[++i];
    }
    if (!params.emplace(key, value).second) throw PreconditionViolation("parameter --" + key + " given twice");
  }
  return params;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw PreconditionViolation("cannot write '" + cfg.out_path + "'");
  file << text;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  CSPInstance inst = registry_instantiate(cfg.family, cfg.params, cfg.caps);
  if (cfg.corrupt) inst = corrupt_coefficient(std::move(inst), *cfg.corrupt);
  const CSPReport report = run_checks(inst, cfg.checker);
  emit(cfg, cfg.json ? report_to_json(report).dump(2) + "\n" : report_to_text(report), out);
  if (!cfg.out_path.empty()) out << "verdict: " << (report.verdict ? "PASS" : "FAIL") << "\n";
  return report.verdict ? kPass : kMismatch;
}

int cmd_orbits(const RunConfig& cfg, std::ostream& out) {
  const CSPInstance inst = registry_instantiate(cfg.family, cfg.params, cfg.caps);
  emit(cfg, cfg.json ? orbit_table_json(inst).dump(2) + "\n" : orbit_table_text(inst), out);
  return kPass;
}

unsigned arg_uint(const std::vector<std::string>& args, std::size_t i, const std::string& name) {
  if (i >= args.size()) throw PreconditionViolation("poly " + name + ": missing argument " + std::to_string(i + 1));
  const std::string& s = args[i];
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) || s.size() > 6) {
    throw PreconditionViolation("poly " + name + ": '" + s + "' is not a small nonnegative integer");
  }
  return static_cast<unsigned>(std::stoul(s));
}

void expect_arity(const std::vector<std::string>& args, std::size_t n, const std::string& name) {
  if (args.size() != n) {
    throw PreconditionViolation("poly " + name + " takes " + std::to_string(n) + " argument(s), got " +
                                std::to_string(args.size()));
  }
}

IntPolynomial named_polynomial(const std::string& name, const std::vector<std::string>& args) {
  if (name == "qint") {
    expect_arity(args, 1, name);
    return q_int(arg_uint(args, 0, name));
  }
  if (name == "qfact") {
    expect_arity(args, 1, name);
    return q_factorial(arg_uint(args, 0, name));
  }
  if (name == "qbinom") {
    expect_arity(args, 2, name);
    return gaussian_binomial(arg_uint(args, 0, name), arg_uint(args, 1, name));
  }
  if (name == "qcatalan") {
    expect_arity(args, 1, name);
    return q_catalan(arg_uint(args, 0, name));
  }
  if (name == "fuss") {
    expect_arity(args, 2, name);
    return q_fuss_catalan_A(arg_uint(args, 0, name), arg_uint(args, 1, name));
  }
  if (name == "eulerian") {
    expect_arity(args, 1, name);
    return eulerian_poly(arg_uint(args, 0, name));
  }
  if (name == "qsyt") {
    expect_arity(args, 1, name);
    return q_count_syt(Partition::parse(args[0]));
  }
  if (name == "face") {
    expect_arity(args, 3, name);
    return face_poly(arg_uint(args, 0, name), arg_uint(args, 1, name), arg_uint(args, 2, name));
  }
  if (name == "proper") {
    expect_arity(args, 1, name);
    return proper_triangulation_poly(arg_uint(args, 0, name));
  }
  if (name == "cyclotomic") {
    expect_arity(args, 1, name);
    const unsigned d = arg_uint(args, 0, name);
    if (d == 0) throw PreconditionViolation("poly cyclotomic: d must be positive");
    return cyclotomic(d);
  }
  if (name == "stat") {
    expect_arity(args, 2, name);
    return stat_genfun(all_permutations(arg_uint(args, 1, name)), parse_statistic(args[0]));
  }
  throw PreconditionViolation("unknown polynomial '" + name +
                              "' (qint, qfact, qbinom, qcatalan, fuss, eulerian, qsyt, face, proper, cyclotomic, stat)");
}

int cmd_poly(const std::string& name, const std::vector<std::string>& args, std::ostream& out) {
  const IntPolynomial f = named_polynomial(name, args);
  out << f.to_string() << "\n";
  out << "coefficients: [";
  for (std::size_t i = 0; i < f.coefficients().size(); ++i) out << (i ? "," : "") << f.coefficients()[i].get_str();
  out << "]\n";
  out << "f(1) = " << f.at_one().get_str() << "\n";
  return kPass;
}

int cmd_list(std::ostream& out) {
  for (const auto& fam : family_catalogue()) {
    out << fam.id << "\n    parameters: " << fam.parameters << "\n    " << fam.description << "\n";
  }
  return kPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustive checks of cyclic sieving phenomena", "csp-lab"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string checker = "both";
  std::optional<std::size_t> cap;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("family", cfg.family, "family id (see `csp-lab list`)")->required();
    sub->add_flag("--json", cfg.json, "emit JSON");
    sub->add_option("--out", cfg.out_path, "write the report to PATH");
    sub->add_option("--cap", cap, "maximum #X")->check(CLI::PositiveNumber);
    sub->allow_extras();
  };

  auto* verify = app.add_subcommand("verify", "instantiate a family and run the CSP checkers");
  add_common(verify);
  verify->add_option("--checker", checker, "roots, orbits or both")->check(CLI::IsMember({"roots", "orbits", "both"}));
  verify->add_option("--corrupt-coeff", cfg.corrupt, "test hook: add 1 to the coefficient of q^i");

  auto* orbits = app.add_subcommand("orbits", "print the orbit table of a family instance");
  add_common(orbits);

  std::string poly_name;
  std::vector<std::string> poly_args;
  auto* poly = app.add_subcommand("poly", "print a named polynomial");
  poly->add_option("name", poly_name, "polynomial name")->required();
  poly->add_option("args", poly_args, "integer or partition arguments");

  auto* list = app.add_subcommand("list", "list the family catalogue");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*list) return cmd_list(out);
    if (*poly) return cmd_poly(poly_name, poly_args, out);
    cfg.caps = Caps::from_environment();
    if (cap) cfg.caps.max_size = *cap;
    cfg.checker = parse_checker(checker);
    CLI::App* sub = *verify ? verify : orbits;
    cfg.params = parse_family_params(sub->remaining());
    return *verify ? cmd_verify(cfg, out) : cmd_orbits(cfg, out);
  } catch (const UsageError& e) {
    err << "csp-lab: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "csp-lab: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "csp-lab: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace csplab
