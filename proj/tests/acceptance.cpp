// Acceptance gate: runs the twelve verification batteries with fixed seeds
// and exact arithmetic, one pass/fail line per battery.

#include <iostream>

#include "elnet/suites.hpp"

int main() {
  bool all = true;
  for (std::size_t k = 1; k <= 12; ++k) {
    elnet::SuiteOptions opt;
    opt.seed = 20240823;
    opt.trials = 100;
    opt.n = k == 2 ? 4 : 3;
    elnet::Checks checks;
    bool pass = false;
    try {
      checks = elnet::criterion(k, opt);
      pass = true;
      for (const auto& c : checks) pass = pass && c.pass;
    } catch (const elnet::Error& e) {
      checks.push_back({std::string("exception: ") + e.what(), false});
    }
    std::cout << "criterion " << k << ": " << (pass ? "PASS" : "FAIL") << "\n";
    if (!pass)
      for (const auto& c : checks)
        if (!c.pass) std::cout << "  failed: " << c.name << "\n";
    all = all && pass;
  }
  return all ? 0 : 1;
}
