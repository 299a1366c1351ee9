// SPDX-License-Identifier: Apache-2.0
#include <sstream>

#include "doctest.h"

#include "liepolar/errors.hpp"
#include "liepolar/verify.hpp"

using namespace liepolar;

TEST_CASE("suite names round-trip") {
  for (const char* name : {"all", "linalg", "so3", "lorentz", "sl2c", "pseudo"}) {
    const auto suite = suite_from_name(name);
    REQUIRE(suite.has_value());
    CHECK(std::string(suite_name(*suite)) == name);
  }
  CHECK_FALSE(suite_from_name("so4").has_value());
  CHECK_FALSE(suite_from_name("").has_value());
}

TEST_CASE("reports are a pure function of (suite, samples, seed)") {
  const SuiteReport a = run_suite(Suite::Lorentz, 25, 9);
  const SuiteReport b = run_suite(Suite::Lorentz, 25, 9);
  REQUIRE(a.properties.size() == b.properties.size());
  for (std::size_t i = 0; i < a.properties.size(); ++i) {
    CHECK(a.properties[i].name == b.properties[i].name);
    CHECK(a.properties[i].samples == b.properties[i].samples);
    CHECK(a.properties[i].max_residual == b.properties[i].max_residual);
  }

  std::ostringstream s1;
  std::ostringstream s2;
  print_report(a, s1);
  print_report(b, s2);
  CHECK(s1.str() == s2.str());
}

TEST_CASE("sweep sizes scale with the samples argument") {
  const SuiteReport small = run_suite(Suite::So3, 100, 3);
  const SuiteReport full = run_suite(Suite::So3, 1000, 3);
  REQUIRE(small.properties.size() == full.properties.size());
  // The round-trip sweep runs 1000 cases at full scale, 100 at a tenth.
  CHECK(full.properties[1].samples == 1000);
  CHECK(small.properties[1].samples == 100);
  // Exact identities stay single-shot.
  CHECK(small.properties[0].samples == 1);

  CHECK(small.all_pass());
  CHECK_THROWS_AS(run_suite(Suite::So3, 0, 1), Error);
}

TEST_CASE("the all suite contains every per-module property") {
  const SuiteReport all = run_suite(Suite::All, 10, 0);
  std::size_t total = 0;
  for (Suite s : {Suite::Linalg, Suite::So3, Suite::Lorentz, Suite::Sl2c, Suite::Pseudo}) {
    total += run_suite(s, 10, 0).properties.size();
  }
  CHECK(all.properties.size() == total);
  CHECK(all.all_pass());
}
