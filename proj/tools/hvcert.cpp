// Command-line driver: hvcert <command> [options].
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hvcert/cli.hpp"
#include "hvcert/error.hpp"

using namespace hvcert;

int main(int argc, char** argv) {
  CLI::App app{"Certification scans, symbolic certificates and identity checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cli::kToolVersion);

  std::string omega, n, mu = "omega", format = "json", output;
  int threads = 0;
  std::uint64_t seed = cli::RunConfig{}.seed;
  bool symbolic = false, require_nonempty = false;
  cli::Tolerances tol;

  const char* names[] = {"certify", "scan", "coeffs", "integrals", "sphere-check", "report"};
  const char* help[] = {"interval certificates per cell, or all-n certificates with --symbolic",
                        "numeric scan over omega and n",
                        "spectral coefficient tables",
                        "bubble integral identities",
                        "sphere oracle identities and the annulus curvature check",
                        "everything above, summarized"};
  for (int i = 0; i < 6; ++i) {
    auto* sub = app.add_subcommand(names[i], help[i]);
    sub->add_option("--omega", omega, "omega or range a..b");
    sub->add_option("--n", n, "dimension or range a..b");
    sub->add_flag("--symbolic", symbolic, "all-dimension certificates");
    sub->add_option("--mu-branch", mu, "omega | omega+1")->capture_default_str();
    sub->add_option("--format", format, "json | csv | markdown")->capture_default_str();
    sub->add_option("--output", output, "report path (default stdout or $HVCERT_OUTPUT_DIR)");
    sub->add_option("--threads", threads, "worker threads, 0 = all cores")->capture_default_str();
    sub->add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
    sub->add_flag("--require-nonempty", require_nonempty, "exit 1 if a scan finds an empty cell");
    sub->add_option("--tol-identity", tol.identity)->capture_default_str();
    sub->add_option("--tol-recurrence", tol.recurrence)->capture_default_str();
    sub->add_option("--tol-sphere", tol.sphere)->capture_default_str();
    sub->add_option("--tol-annulus", tol.annulus)->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cli::RunConfig config;
  try {
    config.command = cli::parse_command(app.get_subcommands().front()->get_name());
    if (!omega.empty()) config.omega = cli::parse_range(omega);
    if (!n.empty()) config.n = cli::parse_range(n);
    config.symbolic = symbolic;
    config.mu_branch = certify::parse_mu_branch(mu);
    config.format = cli::parse_format(format);
    config.output = output;
    config.threads = threads;
    config.seed = seed;
    config.require_nonempty = require_nonempty;
    config.tolerances = tol;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return cli::run(config, std::cout, std::cerr);
}
