#include <iostream>

#include <CLI11.hpp>

#include "cheblab/catalog.hpp"
#include "cheblab/commands.hpp"

namespace {

using cheblab::cli::RunConfig;

void add_catalog_flags(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--catalog", config.catalog,
                  "Catalog: \"builtin\" or a JSON file path")
      ->capture_default_str();
}

void add_scan_flags(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--x", config.x, "Prime bound (inclusive)")->capture_default_str();
  cmd->add_option("--checkpoints", config.checkpoints, "Checkpoint count")
      ->capture_default_str();
  cmd->add_option("--workers", config.workers, "Concurrent scan workers")
      ->capture_default_str();
  cmd->add_option("--out", config.out, "CSV output path (\"-\" = stdout)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Empirical verification of prime-counting induction identities and\n"
               "Chebotarev densities over a catalog of explicit Galois extensions"};
  app.require_subcommand(1);

  RunConfig config;
  int (*handler)(const RunConfig&, std::ostream&, std::ostream&) = nullptr;

  CLI::App* verify = app.add_subcommand("verify", "Run the exact verification suites");
  add_catalog_flags(verify, config);
  verify->add_flag("--quick", config.quick, "Cross-check primes up to 1e4 instead of 1e5");
  verify->callback([&] { handler = cheblab::cli::cmd_verify; });

  CLI::App* density = app.add_subcommand(
      "density", "Per-class prime counts normalized by the logarithmic integral");
  add_catalog_flags(density, config);
  density->add_option("--entry", config.entry, "Catalog entry name")->required();
  add_scan_flags(density, config);
  density->callback([&] { handler = cheblab::cli::cmd_density; });

  CLI::App* induction = app.add_subcommand(
      "induction", "Both sides of the induction identity with an exactness check");
  add_catalog_flags(induction, config);
  induction->add_option("--entry", config.entry, "Catalog entry name")->required();
  induction->add_option("--subgroup", config.subgroup, "Subfield name");
  induction->add_option("--phi", config.phi,
                        "Class function: one | zero | delta:(..) | indicator:k | sigma-phi:(..)")
      ->capture_default_str();
  add_scan_flags(induction, config);
  induction->callback([&] { handler = cheblab::cli::cmd_induction; });

  CLI::App* crosscheck = app.add_subcommand(
      "crosscheck", "Factor degrees of the subfield polynomial vs coset orbit sizes");
  add_catalog_flags(crosscheck, config);
  crosscheck->add_option("--entry", config.entry, "Catalog entry name")->required();
  crosscheck->add_option("--subgroup", config.subgroup,
                         "Limit to one subfield (default: all with a polynomial)");
  crosscheck->add_option("--x", config.x, "Prime bound (inclusive)")->capture_default_str();
  crosscheck->callback([&] { handler = cheblab::cli::cmd_crosscheck; });

  CLI::App* reduce = app.add_subcommand(
      "reduce", "Chebotarev densities by induction on element order (exact + empirical)");
  add_catalog_flags(reduce, config);
  reduce->add_option("--entry", config.entry, "Catalog entry name")->required();
  add_scan_flags(reduce, config);
  reduce->callback([&] { handler = cheblab::cli::cmd_reduce; });

  CLI::App* analytic = app.add_subcommand(
      "analytic", "Truncated Dirichlet-series estimates of the analytic density");
  add_catalog_flags(analytic, config);
  analytic->add_option("--entry", config.entry, "Catalog entry name")->required();
  analytic->add_option("--subgroup", config.subgroup, "Subfield name");
  analytic->add_option("--phi", config.phi,
                       "Class function: one | zero | delta:(..) | indicator:k | sigma-phi:(..)")
      ->capture_default_str();
  analytic->add_option("--s", config.s_values, "s grid (each > 1)")->capture_default_str();
  analytic->add_option("--cutoff", config.cutoff, "Dirichlet truncation bound")
      ->capture_default_str();
  analytic->add_option("--out", config.out, "CSV output path (\"-\" = stdout)")
      ->capture_default_str();
  analytic->callback([&] { handler = cheblab::cli::cmd_analytic; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // CLI11 returns 0 for --help; anything else is a usage error.
    return code == 0 ? 0 : cheblab::cli::kExitUsage;
  }

  try {
    return handler(config, std::cout, std::cerr);
  } catch (const cheblab::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cheblab::cli::kExitUsage;
  } catch (const cheblab::CatalogError& e) {
    std::cerr << "catalog error: " << e.what() << "\n";
    return cheblab::cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cheblab::cli::kExitAssertionFailure;
  }
}
