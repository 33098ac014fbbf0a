#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cayleyqc/hypercube.hpp"
#include "cayleyqc/report.hpp"

namespace cayleyqc {

inline constexpr std::uint64_t default_seed = 0x5eed2013ULL;

struct CheckResult {
  explicit CheckResult(std::string check_name, bool info = false)
      : name(std::move(check_name)), informational(info) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// At most a handful are kept.
  std::vector<std::string> counterexamples;
  /// Informational checks are reported but never fail the suite.
  bool informational = false;

  void record(bool ok, const std::string& what);
  bool passed() const { return informational || failures == 0; }
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite for "all". Throws ValidationError for
/// unknown names.
std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed = default_seed);

/// Exact minimal t-pseudo-border for a (n, t) pair, memoized per process.
const MinimalPseudoBorder& cached_minimal_t_pseudo_border(std::size_t n, std::size_t t);

/// The (n, t) pairs for which the suites run the exact search.
const std::vector<std::pair<std::size_t, std::size_t>>& exact_hypercube_cases();

Json to_json(const std::vector<SuiteResult>& results, std::uint64_t seed);

/// One row per check in CSV and table form; JSON as-is.
std::string render_checks(const Json& report, OutputFormat format);

}  // namespace cayleyqc
