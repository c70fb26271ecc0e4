#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "ylab/cli.hpp"

using namespace ylab;

namespace {

cli::RunConfig config_for(const std::string& suite) {
  cli::RunConfig c;
  c.suite = suite;
  c.timing = false;
  return c;
}

const cli::CheckRecord& record(const cli::Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::out_of_range(name);
}

}  // namespace

TEST_CASE("configuration validation") {
  cli::RunConfig c = config_for("ybe");
  CHECK_NOTHROW(cli::validate(c));

  cli::RunConfig sp_delta = c;
  sp_delta.kind = AlgebraKind::sp();
  sp_delta.basis = Basis::delta;
  CHECK_THROWS_AS(cli::validate(sp_delta), cli::ConfigError);

  cli::RunConfig sp_odd = c;
  sp_odd.kind = AlgebraKind::sp();
  sp_odd.n = 3;
  CHECK_THROWS_AS(cli::validate(sp_odd), cli::ConfigError);

  cli::RunConfig sp_degree = c;
  sp_degree.kind = AlgebraKind::sp();
  sp_degree.js_degree = 3;
  CHECK_THROWS_AS(cli::validate(sp_degree), cli::ConfigError);

  cli::RunConfig bad_suite = c;
  bad_suite.suite = "nope";
  CHECK_THROWS_AS(cli::validate(bad_suite), cli::ConfigError);

  cli::RunConfig bad_u = c;
  bad_u.u = "1/0";
  CHECK_THROWS_AS(cli::validate(bad_u), cli::ConfigError);

  cli::RunConfig pole = c;
  pole.u = "-2";
  CHECK_THROWS_AS(cli::validate(pole), cli::ConfigError);

  cli::RunConfig half_shift = c;
  half_shift.lambda = "1";
  CHECK_THROWS_AS(cli::validate(half_shift), cli::ConfigError);
}

TEST_CASE("ybe suite passes") {
  const cli::Report r = cli::run(config_for("ybe"));
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].pass);
  CHECK(cli::exit_code(r) == 0);
}

TEST_CASE("fusion suite reports the factor") {
  cli::RunConfig c = config_for("fuse-prop8");
  c.lambda = "-1/2";
  c.mu = "-1/2";
  const cli::Report r = cli::run(c);
  const auto& p = record(r, "fused-spinor-pair-proportional-to-r");
  CHECK(p.pass);
  CHECK(p.detail == "factor=1");
  CHECK(r.passed());
}

TEST_CASE("failing suite exits with 1 and records a witness") {
  const cli::Report r = cli::run(config_for("rll-quadratic"));
  CHECK(cli::exit_code(r) == 1);
  const auto& lgn = record(r, "rll-quadratic-js-lgn");
  CHECK_FALSE(lgn.pass);
  CHECK(lgn.witness.has_value());
  CHECK(lgn.residual_max_terms > 0);
  CHECK(record(r, "rll-quadratic-js-derived").pass);
}

TEST_CASE("reports are deterministic") {
  cli::RunConfig one = config_for("all");
  cli::RunConfig three = one;
  three.jobs = 3;
  const std::string a = cli::to_json(cli::run(one));
  const std::string b = cli::to_json(cli::run(three));
  CHECK(a == b);

  const auto j = nlohmann::json::parse(a);
  CHECK(j.contains("config"));
  for (const char* key : {"kind", "n", "basis", "cutoff", "js_degree", "u", "k_max", "suite"})
    CHECK(j["config"].contains(key));
  REQUIRE(j["checks"].is_array());
  for (const auto& check : j["checks"]) {
    for (const char* key : {"name", "paper_ref", "status", "residual_max_terms", "witness", "wall_ms"})
      CHECK(check.contains(key));
    CHECK((check["status"] == "pass" || check["status"] == "fail"));
    CHECK(check["wall_ms"] == 0);
  }
}
