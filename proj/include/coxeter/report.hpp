#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace coxeter {

// Outcome of an exhaustive verification sweep. Witnesses describe the first
// violations found (elements in one-line notation or reduced words, subsets
// of S, expected vs actual), enabling CI-style exit codes.
struct CheckReport {
  std::string suite;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
  double wall_seconds = 0.0;

  static constexpr std::size_t kMaxStoredFailures = 32;

  bool passed() const { return failures.empty(); }

  void fail(std::string witness) {
    if (failures.size() < kMaxStoredFailures)
      failures.push_back(std::move(witness));
  }

  void merge(const CheckReport& o) {
    checks += o.checks;
    for (const auto& f : o.failures) fail(f);
  }
};

}  // namespace coxeter
