#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dvf {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Verbatim description of the first failing case.
  std::string first_counterexample;
  double seconds = 0;

  bool passed() const noexcept { return failures == 0 && cases > 0; }
};

struct SuiteInfo {
  std::string name;
  std::string description;
  std::function<SuiteResult(std::uint64_t seed)> run;
};

/// The invariant suites over the math modules, in a fixed order.
const std::vector<SuiteInfo>& math_suites();

/// Default location of the shipped data files (game corpus, golden files).
/// DVF_DATA_DIR overrides the build-time path.
std::string data_dir();

}  // namespace dvf
