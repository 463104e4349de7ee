#ifndef DWKIT_TOOLS_VERIFY_HPP
#define DWKIT_TOOLS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dwkit::cli {

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyOptions {
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
  int jobs = 1;
};

/// Known suites, in the order "all" runs them.
const std::vector<std::string>& verify_suites();

/// Throws InputError for an unknown suite name.
std::vector<Check> run_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace dwkit::cli

#endif  // DWKIT_TOOLS_VERIFY_HPP
