#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hcomm {

struct VerifyOptions {
  std::optional<std::string> check;  // run only this check
  unsigned max_r = 0;                // 0 keeps each check's own range
  std::uint64_t seed = 0x5eed;       // associativity sampler for large groups
  unsigned workers = 0;              // 0 picks the hardware concurrency
};

struct CheckRow {
  std::string group;
  std::string params;
  bool passed = false;
  std::string detail;
};

struct CheckSummary {
  std::string name;
  int criterion = 0;          // acceptance criterion number, 0 for auxiliary checks
  bool expected_pass = true;  // false for documented discrepancies
  std::string description;
  std::vector<CheckRow> rows;
  bool ok = false;            // outcome matches the expectation
};

struct VerifyReport {
  std::vector<CheckSummary> checks;
  bool ok() const;
};

/// Names of every check in report order.
std::vector<std::string> verify_check_names();

/// Runs the corpus checks. Throws Error(InvalidArgument) for an unknown
/// check name. Output is independent of worker scheduling.
VerifyReport verify_corpus(const VerifyOptions& options = {});

}  // namespace hcomm
