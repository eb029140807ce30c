#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trient/cli.hpp"
#include "trient/errors.hpp"
#include "trient/verify.hpp"

int main(int argc, char** argv) {
  namespace cli = trient::cli;
  CLI::App app{"Entanglement measures and monogamy residuals for "
               "2 x 2 x n tripartite pure states"};
  app.require_subcommand(1);

  std::string measure_path, measure_format = "json";
  CLI::App* measure =
      app.add_subcommand("measure", "Report all measures for a state file");
  measure->add_option("file", measure_path, "state JSON file")->required();
  measure->add_option("--format", measure_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string sweep_family, sweep_out;
  std::vector<std::string> sweep_params, sweep_fixes;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Tabulate measures over a parameter grid of a state family");
  sweep->add_option("--family", sweep_family, "state family")
      ->required()
      ->check(CLI::IsMember({"ghz", "w"}));
  sweep->add_option("--param", sweep_params,
                    "swept axis, NAME=START:STOP:STEPS (repeatable)");
  sweep->add_option("--fix", sweep_fixes,
                    "pinned parameter, NAME=VALUE (repeatable)");
  sweep->add_option("--out", sweep_out, "output CSV path")->required();

  std::uint64_t verify_seed = 42;
  int verify_trials = 1000;
  double verify_tol = 1e-8;
  std::vector<std::string> verify_suites;
  std::string verify_out;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run seeded statistical property suites");
  verify->add_option("--seed", verify_seed, "base RNG seed");
  verify->add_option("--trials", verify_trials, "trials per suite");
  verify->add_option("--tol", verify_tol, "violation tolerance");
  verify->add_option("--suite", verify_suites,
                     "suite to run (repeatable; default: all)");
  verify->add_option("--out", verify_out,
                     "also write the JSONL report to this path");

  std::string classify_path;
  CLI::App* classify = app.add_subcommand(
      "classify", "Entanglement class of a state from ranks and measures");
  classify->add_option("file", classify_path, "state JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kBadInput;
  }

  if (measure->parsed())
    return cli::cmd_measure(measure_path, measure_format, std::cout,
                            std::cerr);
  if (sweep->parsed()) {
    try {
      const cli::SweepSpec spec =
          cli::parse_sweep_spec(sweep_family, sweep_params, sweep_fixes);
      return cli::cmd_sweep(spec, sweep_out, std::cerr);
    } catch (const trient::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return cli::kBadInput;
    }
  }
  if (verify->parsed())
    return cli::cmd_verify(verify_seed, verify_trials, verify_tol,
                           verify_suites, verify_out, std::cout, std::cerr);
  if (classify->parsed())
    return cli::cmd_classify(classify_path, std::cout, std::cerr);
  return cli::kBadInput;
}
