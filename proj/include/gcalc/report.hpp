#pragma once

#include <string>
#include <vector>

namespace gcalc {

// One failed instance of a verification suite.
struct Failure {
  std::string key;       // canonical key (or other instance label)
  std::string expected;
  std::string actual;

  bool operator==(const Failure&) const = default;
};

// Outcome of an identity suite: counts, counterexamples, and the
// configuration that produced them.
struct VerificationReport {
  std::string suite;
  long long instance_count = 0;
  long long pass_count = 0;
  std::vector<Failure> failures;
  long long wall_ms = 0;
  std::string config;

  bool pass() const { return failures.empty(); }

  void record(bool ok, const std::string& key, const std::string& expected,
              const std::string& actual) {
    ++instance_count;
    if (ok) {
      ++pass_count;
    } else {
      failures.push_back({key, expected, actual});
    }
  }

  // Folds another suite's outcome into this one (suite/config kept from *this).
  void absorb(const VerificationReport& other) {
    instance_count += other.instance_count;
    pass_count += other.pass_count;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

std::string to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& text);

}  // namespace gcalc
