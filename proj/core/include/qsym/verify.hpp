#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsym/io.hpp"

namespace qsym {

struct VerifyConfig {
  int max_grade = 6;
  std::vector<int> nus{2, 3};
  // Number of oracle variables; defaults to the degree of each product.
  std::optional<int> oracle_vars;
  std::uint64_t seed = 1;
  // Randomized cases per nu where a suite samples.
  int random_cases = 200;
};

struct Failure {
  std::string check;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  long cases = 0;
  long failed = 0;
  // At most kMaxReported entries; `failed` has the full count.
  std::vector<Failure> failures;
  double seconds = 0;

  static constexpr std::size_t kMaxReported = 50;
  bool ok() const { return failed == 0; }
};

const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);
// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(std::string_view name, const VerifyConfig& config);

json to_json(const SuiteResult& r);

}  // namespace qsym
