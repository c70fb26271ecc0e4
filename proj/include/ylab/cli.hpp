#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ylab/algebra.hpp"
#include "ylab/tensor.hpp"

namespace ylab::cli {

/// Invalid combination of run parameters (exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  AlgebraKind kind = AlgebraKind::so();
  int n = 4;
  Basis basis = Basis::split;
  /// Occupation cutoff of bosonic Fock spaces.
  int cutoff = 6;
  int js_degree = 1;
  std::string u = "1/7";
  int k_max = 8;
  /// Truncation order of the Weyl-algebra series (bosonic families).
  int weyl_order = 6;
  std::string suite = "all";
  std::string output;
  std::optional<std::string> lambda;
  std::optional<std::string> mu;
  int jobs = 1;
  /// When false every wall_ms is written as 0, making reports byte-identical.
  bool timing = true;
};

struct CheckRecord {
  std::string name;
  std::string ref;
  bool pass = false;
  std::size_t residual_max_terms = 0;
  std::optional<std::vector<std::size_t>> witness;
  long long wall_ms = 0;
  std::string detail;
};

struct Report {
  RunConfig config;
  std::vector<CheckRecord> checks;
  bool passed() const;
};

/// Outcome of a single check: the residual and an optional note (e.g. a factor).
struct Outcome {
  ResidualReport residual;
  std::string detail;
};

struct Check {
  std::string name;
  std::string ref;
  std::function<Outcome()> run;
};

const std::vector<std::string>& suite_names();

/// Throws ConfigError for inconsistent parameters.
void validate(const RunConfig& config);

/// The checks of the configured suite, in report order.
std::vector<Check> suite_checks(const RunConfig& config);

/// Runs the suite on up to config.jobs threads; the order of records is the suite order.
Report run(const RunConfig& config);

std::string to_json(const Report& report);

/// 0 when every check passes, 1 otherwise.
int exit_code(const Report& report);

}  // namespace ylab::cli
