#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qtheta {

/// Outcome of one identity or congruence check.
struct Report {
  Report() = default;
  Report(std::string c, std::string r) : claim(std::move(c)), range(std::move(r)) {}

  std::string claim;
  std::string range;
  bool passed = true;
  std::optional<std::string> first_failure;
  std::vector<std::string> notes;
  /// Set on a passing report whose reference formula differs from the computed side in a
  /// way that has been pinned to one named place (e.g. a misprinted coefficient).
  std::optional<std::string> discrepancy;

  /// "pass", "pass-with-discrepancy" or "fail".
  std::string status() const {
    if (!passed) return "fail";
    return discrepancy ? "pass-with-discrepancy" : "pass";
  }

  /// Throws VerificationFailure with first_failure when the check did not pass.
  const Report& require() const;
};

}  // namespace qtheta
