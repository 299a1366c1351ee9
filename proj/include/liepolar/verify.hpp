// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liepolar {

enum class Suite { All, Linalg, So3, Lorentz, Sl2c, Pseudo };

std::optional<Suite> suite_from_name(std::string_view name);
const char* suite_name(Suite s);

struct PropertyResult {
  std::string name;
  long long samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::vector<PropertyResult> properties;
  bool all_pass() const;
};

/// Run the property sweeps of one suite (or all of them). Sweep sizes
/// are specified at samples == 1000 and scale linearly with the samples
/// argument; results are a pure function of (suite, samples, seed).
SuiteReport run_suite(Suite suite, long long samples, std::uint64_t seed);

/// Fixed-width pass/fail table, one line per property.
void print_report(const SuiteReport& report, std::ostream& os);

}  // namespace liepolar
