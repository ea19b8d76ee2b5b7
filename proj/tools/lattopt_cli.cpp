// Command-line front end: parse instance files, run counting / bounds /
// optimization / approximation / oracle commands, and print one JSON result
// document to stdout. Diagnostics and timing go to stderr so that stdout is
// byte-identical across runs with the same inputs and flags.
#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lattopt/documents.hpp"
#include "lattopt/errors.hpp"
#include "lattopt/instances.hpp"

namespace {

using lattopt::BigRat;
using lattopt::InstanceBundle;
using Json = lattopt::io::Json;

BigRat parse_epsilon(const std::string& text) {
  auto epsilon = lattopt::rat_from_string(text);
  if (!epsilon) throw lattopt::io::ParseError("--epsilon: not an exact rational: " + text);
  return *epsilon;
}

int emit(const Json& doc, int rc = lattopt::io::kExitOk) {
  std::cout << lattopt::io::render_document(doc);
  return rc;
}

int cmd_generate(const std::string& which, unsigned long a, unsigned long b, unsigned long c,
                 size_t d, unsigned degree, long radius, unsigned long seed,
                 const std::string& output) {
  InstanceBundle inst;
  if (which == "example1") {
    inst = lattopt::example1();
  } else if (which == "nvs04") {
    inst = lattopt::nvs04();
  } else if (which == "an1") {
    inst = lattopt::an1_instance(a, b, c);
  } else if (which == "random") {
    inst = lattopt::random_instance(d, degree, radius, seed);
  } else {
    throw lattopt::io::ParseError("unknown builder \"" + which +
                                  "\" (expected example1, nvs04, an1, or random)");
  }
  std::string text = lattopt::io::format_instance(inst);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + output);
    out << text;
  }
  return lattopt::io::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice-point counting and integer polynomial optimization over polytopes"};
  app.require_subcommand(1);

  std::string file;
  unsigned digits = 6;
  unsigned k = 1;
  unsigned k_max = 30;
  std::string epsilon = "1/10";
  bool recover = false;
  bool shift = false;
  long budget = lattopt::kDefaultOracleBudget;
  std::vector<size_t> integer_vars;
  std::vector<long> grid;
  bool exact_mode = false;
  bool nonneg_flag = false;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "instance file (JSON)")->required();
    sub->add_option("--precision-digits", digits, "decimal digits in renderings")
        ->check(CLI::Range(0, 60));
  };

  auto* count = app.add_subcommand("count", "count the lattice points of the polytope");
  add_file(count);

  auto* bounds = app.add_subcommand("bounds", "bound table L_k/U_k for k = 1..K");
  add_file(bounds);
  bounds->add_option("--k", k, "largest power index")->required()->check(CLI::PositiveNumber);
  bounds->add_flag("--shift", shift, "force the shifted non-negative objective");

  auto* optimize = app.add_subcommand("optimize", "exact optimum via the bound ladder");
  add_file(optimize);
  optimize->add_option("--k-max", k_max, "power index budget")->check(CLI::PositiveNumber);

  auto* fptas = app.add_subcommand("fptas", "(1-epsilon)-approximation of the optimum");
  add_file(fptas);
  fptas->add_option("--epsilon", epsilon, "epsilon in (0,1], exact rational like 1/10")
      ->required();
  fptas->add_flag("--recover-point", recover, "bisect to a certified point");
  fptas->add_flag("--shift", shift, "run on the shifted non-negative objective");

  auto* oracle = app.add_subcommand("oracle", "brute-force reference answers");
  add_file(oracle);
  oracle->add_option("--budget", budget, "max box cells to scan")->check(CLI::PositiveNumber);

  auto* mixed = app.add_subcommand("mixed", "grid-refinement sequence for mixed instances");
  add_file(mixed);
  mixed->add_option("--integer-vars", integer_vars, "indices of integer variables");
  mixed->add_option("--grid", grid, "denominators n for the refinement sequence")->required();
  mixed->add_option("--epsilon", epsilon, "epsilon for the per-grid fptas runs");
  mixed->add_flag("--exact", exact_mode, "solve each grid problem exactly");
  mixed->add_flag("--nonnegative", nonneg_flag, "assert the objective is non-negative");

  auto* generate = app.add_subcommand("generate", "emit a builder instance file");
  std::string which;
  unsigned long a = 1, b = 3, c = 3;
  size_t gen_d = 2;
  unsigned gen_degree = 3;
  long gen_radius = 5;
  unsigned long gen_seed = 1;
  std::string output;
  generate->add_option("builder", which, "example1 | nvs04 | an1 | random")->required();
  generate->add_option("--a", a, "an1 parameter a");
  generate->add_option("--b", b, "an1 parameter b");
  generate->add_option("--c", c, "an1 parameter c");
  generate->add_option("--d", gen_d, "random: dimension");
  generate->add_option("--degree", gen_degree, "random: max total degree");
  generate->add_option("--radius", gen_radius, "random: box radius");
  generate->add_option("--seed", gen_seed, "random: seed");
  generate->add_option("--output", output, "write to file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  auto started = std::chrono::steady_clock::now();
  int rc = lattopt::io::kExitInternal;
  try {
    if (count->parsed()) {
      rc = emit(lattopt::io::count_document(lattopt::io::load_instance(file)));
    } else if (bounds->parsed()) {
      rc = emit(lattopt::io::bounds_document(lattopt::io::load_instance(file), k, shift, digits));
    } else if (optimize->parsed()) {
      Json doc = lattopt::io::optimize_document(lattopt::io::load_instance(file), k_max, digits);
      rc = emit(doc, doc["converged"].get<bool>() ? lattopt::io::kExitOk
                                                  : lattopt::io::kExitUnconverged);
    } else if (fptas->parsed()) {
      rc = emit(lattopt::io::fptas_document(lattopt::io::load_instance(file),
                                            parse_epsilon(epsilon), recover, shift, digits));
    } else if (oracle->parsed()) {
      Json doc = lattopt::io::oracle_document(lattopt::io::load_instance(file), budget);
      rc = emit(doc, doc["status"] == "infeasible" ? lattopt::io::kExitInfeasible
                                                   : lattopt::io::kExitOk);
    } else if (mixed->parsed()) {
      rc = emit(lattopt::io::mixed_document(lattopt::io::load_instance(file), integer_vars, grid,
                                            parse_epsilon(epsilon), exact_mode, nonneg_flag,
                                            digits));
    } else if (generate->parsed()) {
      rc = cmd_generate(which, a, b, c, gen_d, gen_degree, gen_radius, gen_seed, output);
    }
  } catch (const lattopt::io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    rc = lattopt::io::kExitParse;
  } catch (const lattopt::InfeasibleError& e) {
    std::cerr << "error: infeasible: " << e.what() << "\n";
    rc = lattopt::io::kExitInfeasible;
  } catch (const lattopt::UnboundedError& e) {
    std::cerr << "error: unbounded: " << e.what() << "\n";
    rc = lattopt::io::kExitUnbounded;
  } catch (const lattopt::DegenerateError& e) {
    std::cerr << "error: degenerate: " << e.what() << "\n";
    rc = lattopt::io::kExitDegenerate;
  } catch (const lattopt::BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << "\n";
    rc = lattopt::io::kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    rc = lattopt::io::kExitInternal;
  }
  auto elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
  std::cerr << "# elapsed_ms=" << elapsed.count() << "\n";
  return rc;
}
