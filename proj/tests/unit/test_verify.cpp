#include <fstream>
#include <string>

#include "doctest.h"
#include "hitcalc/error.hpp"
#include "hitcalc/verify.hpp"

using namespace hitcalc;

TEST_CASE("quick suite passes") {
  HitEngine engine;
  std::size_t seen = 0;
  SuiteOptions o;
  o.on_check = [&](const CheckResult&) { ++seen; };
  auto report = run_suite("quick", engine, o);
  for (const auto& c : report.checks)
    if (!c.pass) FAIL_CHECK(c.name << ": expected " << c.expected << ", got " << c.actual);
  CHECK(report.passed());
  CHECK(report.checks.size() >= 20);
  CHECK(seen == report.checks.size());
}

TEST_CASE("unknown suite") {
  HitEngine engine;
  CHECK_THROWS_AS(run_suite("nightly", engine, {}), InvalidArgument);
}

TEST_CASE("published lists are readable") {
  for (const auto& pl : published_lists()) {
    auto list = read_monomial_list(std::string(HITCALC_TEST_DATA) + "/" + pl.file);
    CHECK(!list.empty());
    for (const auto& m : list) {
      REQUIRE(m.degree() == pl.degree);
      REQUIRE(weight_vector(m) == pl.weight);
    }
  }
  CHECK(printed_zeta_indices().size() == 23);
}
