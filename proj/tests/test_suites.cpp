#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loom/suites.hpp"

using namespace loom;

namespace {

void require_pass(const Report& rep) {
  REQUIRE_FALSE(rep.checks.empty());
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("every suite passes on A1 with m = 2") {
  SuiteConfig cfg;
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    require_pass(run_suite(name, cfg));
  }
}

TEST_CASE("normality on A2 up to the third power") {
  SuiteConfig cfg;
  cfg.rank = 2;
  cfg.m = 3;
  require_pass(run_suite("normality", cfg));
}

TEST_CASE("operator suites on C2") {
  SuiteConfig cfg;
  cfg.type = "C";
  cfg.rank = 2;
  cfg.m = 1;
  for (const char* name : {"normality", "weyl", "stretch", "concat", "xi", "energy"}) {
    CAPTURE(name);
    require_pass(run_suite(name, cfg));
  }
}

TEST_CASE("suite all prefixes names") {
  SuiteConfig cfg;
  cfg.m = 1;
  const auto rep = run_suite("all", cfg);
  CHECK(rep.checks.front().name.rfind("normality/", 0) == 0);
  CHECK(rep.ok());
}

TEST_CASE("unknown suites are rejected") {
  CHECK_THROWS_AS(run_suite("nope", SuiteConfig{}), std::invalid_argument);
}
