#include "okubo/cli.hpp"

#include "okubo/catalog.hpp"
#include "okubo/checks.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace okubo::cli {

namespace {

struct Options {
  std::string format;
  std::string fano;
  std::uint64_t seed = kDefaultSeed;
  std::string verify_target;
  std::string constants_file;
  std::string lattice_target;
  int max_n = 4;
  std::string stabilizer_action;
  std::string catalog_action;
  std::string catalog_name;
};

std::string default_format() {
  const char* env = std::getenv("OKUBO_FORMAT");
  if (env && parse_format(env)) return env;
  return "text";
}

std::vector<CheckReport> verify(const Algebra& alg, const Options& o) {
  const auto& t = o.verify_target;
  if (t == "all") return check_all(alg, o.seed);
  if (t == "para-closure") {
    if (o.constants_file.empty()) return check_para_closure(alg);
    std::ifstream in(o.constants_file);
    if (!in) throw std::invalid_argument("cannot read " + o.constants_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return check_para_closure(alg, parse_constants(ss.str(), Product::Para, alg.convention_id()));
  }
  if (t == "okubo-obstruction") return check_okubo_obstruction(alg);
  if (t == "scaled-order") return check_scaled_order(alg);
  if (t == "scaling-search") return check_scaling_search(alg);
  if (t == "bridges") {
    auto r = check_bridges(alg, o.seed);
    auto tau = check_tau(alg);
    r.insert(r.end(), tau.begin(), tau.end());
    return r;
  }
  if (t == "matrix-laws") {
    auto r = check_matrix_laws(alg, o.seed);
    auto laws = check_algebra_laws(alg, o.seed);
    r.insert(r.end(), laws.begin(), laws.end());
    return r;
  }
  throw std::invalid_argument("unknown verify target " + t);
}

std::vector<CheckReport> lattice(const Algebra& alg, const Options& o) {
  const auto& t = o.lattice_target;
  if (t == "invariants") {
    auto r = check_e8(alg);
    auto c = check_lattice_invariants(alg);
    r.insert(r.end(), c.begin(), c.end());
    return r;
  }
  if (t == "shells") return check_shells(alg, o.max_n);
  if (t == "glue") return check_glue_saturate(alg, true, false);
  if (t == "saturate") return check_glue_saturate(alg, false, true);
  if (t == "trace16") return check_trace16(alg);
  throw std::invalid_argument("unknown lattice target " + t);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certification of octonion, para-octonion and Okubo orders", "okubo"};
  app.require_subcommand(1);
  Options o;
  o.format = default_format();
  o.fano = std::string(default_convention_id());
  const auto ids = convention_ids();
  app.add_option("--format", o.format, "json or text (default from OKUBO_FORMAT, else text)")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--fano", o.fano, "Fano convention id")->check(CLI::IsMember(ids));
  app.add_option("--seed", o.seed, "seed for sampled identities");

  auto* verify_cmd = app.add_subcommand("verify", "algebraic certification suites")->fallthrough();
  verify_cmd
      ->add_option("target", o.verify_target)
      ->required()
      ->check(CLI::IsMember(
          {"all", "para-closure", "okubo-obstruction", "scaled-order", "scaling-search", "bridges", "matrix-laws"}));
  verify_cmd->add_option("--constants", o.constants_file, "para structure constants file for para-closure");

  auto* lattice_cmd = app.add_subcommand("lattice", "lattice suites")->fallthrough();
  lattice_cmd->add_option("target", o.lattice_target)
      ->required()
      ->check(CLI::IsMember({"invariants", "shells", "glue", "saturate", "trace16"}));
  lattice_cmd->add_option("--max", o.max_n, "largest norm for shells")->check(CLI::Range(1, 6));

  auto* stab_cmd = app.add_subcommand("stabilizer", "arithmetic stabilizer search")->fallthrough();
  stab_cmd->add_option("action", o.stabilizer_action)->required()->check(CLI::IsMember({"search"}));

  auto* cat_cmd = app.add_subcommand("catalog", "classical integral orders")->fallthrough();
  cat_cmd->add_option("action", o.catalog_action)->required()->check(CLI::IsMember({"verify"}));
  cat_cmd->add_option("name", o.catalog_name)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
  if (!o.constants_file.empty() && o.verify_target != "para-closure") {
    err << "error: --constants only applies to verify para-closure\n" << app.help();
    return 2;
  }
  if (cat_cmd->parsed() && o.catalog_name != "all") {
    const auto names = classical_names();
    if (std::find(names.begin(), names.end(), o.catalog_name) == names.end()) {
      try {
        build_classical(Algebra(convention(o.fano)), o.catalog_name);
      } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
      }
      return 2;
    }
  }

  const Algebra alg(convention(o.fano));
  std::vector<CheckReport> reports;
  try {
    if (verify_cmd->parsed())
      reports = verify(alg, o);
    else if (lattice_cmd->parsed())
      reports = lattice(alg, o);
    else if (stab_cmd->parsed())
      reports = check_stabilizer(alg);
    else
      reports = check_catalog(alg, o.catalog_name);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  out << serialize(reports, *parse_format(o.format));
  return exit_code_for(reports);
}

}  // namespace okubo::cli
