#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bfh {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::optional<std::string> space;  // built-in instance replacing the corpus, where a suite allows it
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
  nlohmann::ordered_json counterexample;  // null when none
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();
  double seconds = 0;
  std::optional<double> limit_seconds;
};

/// Names accepted by run_suite, in acceptance order.
std::vector<std::string> suite_names();

/// Runs one acceptance suite. A suite with a time limit fails when it
/// exceeds it. Throws InputError for an unknown name.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options);

} // namespace bfh
