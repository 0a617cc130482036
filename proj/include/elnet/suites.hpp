#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "elnet/rat.hpp"

namespace elnet {

struct SuiteOptions {
  Rat tau = 1;
  std::size_t trials = 100;
  std::uint64_t seed = 20240823;
  std::size_t n = 2;
};

struct Check {
  std::string name;
  bool pass;
};
using Checks = std::vector<Check>;

// The numbered verification batteries behind the `verify` suites. Each one
// is deterministic for a fixed seed.
Checks criterion(std::size_t k, const SuiteOptions& opt);

// Suite names accepted by the CLI: relations, braid, dims, stabilizer, b2,
// action, cells, efficient. Throws UnknownName.
Checks run_suite(const std::string& name, const SuiteOptions& opt);
const std::vector<std::string>& suite_names();

// One line per check; returns true iff all pass.
bool print_checks(const Checks& checks, std::ostream& out);

}  // namespace elnet
