#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "theoria/parallel.hpp"

namespace theoria {

struct VerifyOptions {
  std::size_t seeds = 100;      // random instances per randomized check
  std::uint64_t base_seed = 1;  // reproducibility anchor
  std::uint64_t depth = 12;     // oracle depth
  par::Mode mode = par::default_mode();
};

struct SuiteResult {
  std::string suite;
  std::size_t checks = 0;
  struct Failure {
    std::string what;
    std::uint64_t seed;
  };
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
};

std::vector<std::string> suite_names();  // closure lgs semilattice lattice distributivity boolean oracle all
/// UnknownSuite for anything else.
std::vector<SuiteResult> run_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace theoria
