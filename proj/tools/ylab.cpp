#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ylab/cli.hpp"

using namespace ylab;

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of so/sp Yang-Baxter identities"};
  app.require_subcommand(1);
  CLI::App* run = app.add_subcommand("run", "Run a suite of identity checks and write a JSON report");

  cli::RunConfig config;
  if (const char* jobs = std::getenv("YLAB_JOBS")) config.jobs = std::atoi(jobs);

  std::string kind = "so", basis = "split";
  std::string lambda, mu;
  bool no_timing = false;
  run->add_option("--kind", kind, "Algebra family")->check(CLI::IsMember({"so", "sp"}))->capture_default_str();
  run->add_option("--n", config.n, "Dimension of the fundamental representation")->capture_default_str();
  run->add_option("--basis", basis, "Metric basis")->check(CLI::IsMember({"delta", "split"}))->capture_default_str();
  run->add_option("--cutoff", config.cutoff, "Bosonic occupation cutoff")->capture_default_str();
  run->add_option("--js-degree", config.js_degree, "Jordan-Schwinger degree m")->capture_default_str();
  run->add_option("--u", config.u, "Rational spectral point")->capture_default_str();
  run->add_option("--k-max", config.k_max, "Highest order of the spinorial R series")->capture_default_str();
  run->add_option("--weyl-order", config.weyl_order, "Series order for the Weyl-algebra checks")->capture_default_str();
  run->add_option("--suite", config.suite, "Suite name")->check(CLI::IsMember(cli::suite_names()))->capture_default_str();
  run->add_option("--output", config.output, "Report path (stdout when empty)");
  run->add_option("--lambda", lambda, "First fusion shift");
  run->add_option("--mu", mu, "Second fusion shift");
  run->add_option("--jobs", config.jobs, "Worker threads (default $YLAB_JOBS or 1)")->capture_default_str();
  run->add_flag("--no-timing", no_timing, "Write wall_ms = 0 for byte-identical reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  config.kind = kind == "so" ? AlgebraKind::so() : AlgebraKind::sp();
  config.basis = basis == "delta" ? Basis::delta : Basis::split;
  if (!lambda.empty()) config.lambda = lambda;
  if (!mu.empty()) config.mu = mu;
  config.timing = !no_timing;

  cli::Report report;
  try {
    report = cli::run(config);
  } catch (const cli::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  const std::string json = cli::to_json(report);
  if (config.output.empty()) {
    std::cout << json;
  } else {
    std::ofstream out(config.output);
    if (!out) {
      std::cerr << "cannot write " << config.output << "\n";
      return 2;
    }
    out << json;
  }
  return cli::exit_code(report);
}
