#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hyperlattice/dsl.h"
#include "hyperlattice/errors.h"
#include "hyperlattice/suites.h"

using namespace hyperlattice;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Flags {
  std::optional<int> n;
  std::optional<int> window;
  std::optional<int> scales;
  std::optional<std::string> grid;
  std::optional<std::string> t;
  std::optional<std::string> triple;
  std::optional<std::string> delta;
  std::optional<std::string> dl;
  std::optional<std::string> metric;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_dim;
  std::string config_file;
  std::string json_path;
  bool no_timing = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--n", f.n, "number of components and axes");
  cmd->add_option("--window", f.window, "monad window size W (odd)");
  cmd->add_option("--scales", f.scales, "number of infinitesimal scales L");
  cmd->add_option("--grid", f.grid, "centers r1,r2,...");
  cmd->add_option("--config", f.config_file, "JSON config file");
}

void add_suite_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--t", f.t, "boost parameter e^a as p/q");
  cmd->add_option("--triple", f.triple, "Pythagorean triple a,b,c for rotations");
  cmd->add_option("--delta", f.delta, "translation step p/q");
  cmd->add_option("--dl", f.dl, "lattice separation a,b,...");
  cmd->add_option("--metric", f.metric, "mink or euclid");
  cmd->add_option("--seed", f.seed, "seed for randomized checks");
  cmd->add_option("--max-dim", f.max_dim, "Fock oracle dimension cap");
  cmd->add_option("--json", f.json_path, "write the JSON report to PATH");
  cmd->add_flag("--no-timing", f.no_timing, "omit timing fields from the JSON report");
}

Config assemble(const Flags& f) {
  Config c;
  if (!f.config_file.empty()) {
    std::ifstream in(f.config_file);
    if (!in) throw std::invalid_argument("cannot read config file " + f.config_file);
    c = Config::from_json(nlohmann::json::parse(in), c);
  }
  if (f.n) c.n = *f.n;
  if (f.window) {
    if (*f.window < 1 || *f.window % 2 == 0) throw std::invalid_argument("--window must be a positive odd size");
    c.half_width = (*f.window - 1) / 2;
  }
  if (f.scales) c.scales = *f.scales;
  if (f.grid) c.grid = parse_rational_list(*f.grid);
  if (f.t) c.boost_t = parse_rational_list(*f.t).at(0);
  if (f.triple) c.triple = parse_integer_list(*f.triple);
  if (f.delta) c.delta = parse_rational_list(*f.delta).at(0);
  if (f.dl) c.dl = parse_integer_list(*f.dl);
  if (f.metric) c.metric = *f.metric;
  if (f.seed) c.seed = *f.seed;
  if (f.max_dim) c.oracle_max_dim = *f.max_dim;
  c.validate();
  return c;
}

int run_report(const std::string& suite, const Flags& f) {
  const Report report = run_suite(suite, assemble(f));
  for (const auto& r : report.results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.id;
    if (!r.pass) std::cout << "  expected " << r.expected << ", got " << r.got << "  [" << r.witness.value_or("") << "]";
    std::cout << '\n';
  }
  std::cout << report.suite << ": " << report.passed() << "/" << report.results.size() << " passed\n";
  if (!f.json_path.empty()) {
    std::ofstream out(f.json_path);
    if (!out) throw std::invalid_argument("cannot write " + f.json_path);
    out << report.to_json(!f.no_timing).dump(2) << '\n';
  }
  return report.ok() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of field theory on infinitesimal lattices"};
  app.require_subcommand(1);

  Flags f;
  std::string suite;
  std::string expr;
  std::string statistics = "bose";

  auto* verify = app.add_subcommand("verify", "run one identity suite, or all");
  std::string names;
  for (const auto& s : suite_names()) names += (names.empty() ? "" : ", ") + s;
  verify->add_option("suite", suite, "one of: " + names)->required();
  add_common(verify, f);
  add_suite_flags(verify, f);

  auto* eval = app.add_subcommand("eval", "evaluate an operator expression");
  eval->add_option("expr", expr, "expression")->required();
  eval->add_option("--statistics", statistics, "bose or fermi, for expressions built only from fields")
      ->check(CLI::IsMember({"bose", "fermi"}));
  add_common(eval, f);

  auto* report = app.add_subcommand("report", "run every suite and write the JSON report");
  add_common(report, f);
  add_suite_flags(report, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return run_report(suite, f);
    if (*report) {
      if (f.json_path.empty()) f.json_path = "report.json";
      return run_report("all", f);
    }
    const Config c = assemble(f);
    EvalContext ctx;
    ctx.spec = c.spec();
    if (statistics == "fermi") ctx.statistics = Statistics::fermi;
    const Value v = evaluate(expr, ctx);
    std::cout << v.str() << '\n';
    return kPass;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error at " << e.what() << '\n';
    return kUsage;
  } catch (const UnknownSuite& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}
