#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "foldtrack_cli/commands.hpp"

namespace cli = foldtrack::cli;

int main(int argc, char** argv) {
  CLI::App app{"foldtrack: fold factorizations, controlled inverses and expansion factors of free group automorphisms"};
  app.require_subcommand(1);

  std::string aut;
  int k_max = 40;
  int budget = 16;
  int rank = 2;
  std::uint64_t seed = 1;
  std::vector<std::string> files;
  std::vector<long> powers{10, 1000, 1000000};
  cli::ExperimentConfig config;

  auto* spectrum = app.add_subcommand("spectrum", "expansion spectrum of an automorphism as JSON");
  spectrum->add_option("aut", aut, "automorphism, e.g. \"a->ab, b->a\"")->required();

  auto* invert = app.add_subcommand("invert", "controlled inverse and fold factorization");
  invert->add_option("input", aut, "automorphism text or a map JSON file")->required();

  auto* ratio = app.add_subcommand("ratio", "lambda, mu and log(lambda)/log(mu)");
  ratio->add_option("aut", aut, "automorphism")->required();
  ratio->add_option("--kmax", k_max, "iterations for the word-growth estimate")->capture_default_str();

  auto* experiment = app.add_subcommand("experiment", "seeded random trials written as TSV");
  experiment->add_option("--rank", config.rank)->capture_default_str();
  experiment->add_option("--length", config.length, "Nielsen moves per automorphism")->capture_default_str();
  experiment->add_option("--trials", config.trials)->capture_default_str();
  experiment->add_option("--seed", config.seed)->capture_default_str();
  experiment->add_option("--kmax", config.k_max)->capture_default_str();
  experiment->add_option("--jobs", config.jobs, "worker threads")->capture_default_str();
  experiment->add_option("--out", config.out, "output file (default: stdout)");

  auto* audit = app.add_subcommand("audit", "matrix and fold property suites, twist metric table, reducibility and quasi-metric audits");
  audit->add_option("files", files, "graph or map JSON files");
  audit->add_option("--budget", budget, "largest stratum searched for reductions")->capture_default_str();
  audit->add_option("--seed", seed)->capture_default_str();

  auto* metric = app.add_subcommand("metric", "upper bounds for d(G,G')");
  metric->add_option("files", files, "two graph JSON files; none for the twist family");
  metric->add_option("--rank", rank)->capture_default_str();
  metric->add_option("--powers", powers, "twist exponents m")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (*spectrum) return cli::cmd_spectrum(aut, std::cout, std::cerr);
  if (*invert) return cli::cmd_invert(aut, std::cout, std::cerr);
  if (*ratio) return cli::cmd_ratio(aut, k_max, std::cout, std::cerr);
  if (*experiment) return cli::cmd_experiment(config, std::cout, std::cerr);
  if (*audit) return cli::cmd_audit(files, budget, seed, std::cout, std::cerr);
  if (*metric) return cli::cmd_metric(files, rank, powers, std::cout, std::cerr);
  return cli::kInputError;
}
