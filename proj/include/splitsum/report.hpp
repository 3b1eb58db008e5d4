#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace splitsum {

enum class CheckMode { kExhaustive, kRandom };

inline const char* to_string(CheckMode mode) {
  return mode == CheckMode::kExhaustive ? "exhaustive" : "random";
}

struct Failure {
  std::vector<std::string> inputs;  // expression syntax, re-parseable
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string theorem;
  CheckMode mode = CheckMode::kExhaustive;
  std::uint64_t cases = 0;
  std::uint64_t excluded = 0;  // inputs outside the claim's hypothesis
  std::vector<Failure> failures;
  std::optional<std::uint64_t> seed;
  std::uint64_t elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

inline nlohmann::ordered_json to_json(const Failure& f) {
  return {{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}};
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const Failure& f : r.failures) failures.push_back(to_json(f));
  return {{"theorem", r.theorem},
          {"mode", to_string(r.mode)},
          {"verdict", r.passed() ? "pass" : "fail"},
          {"cases", r.cases},
          {"excluded", r.excluded},
          {"failures", std::move(failures)},
          {"seed", r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr)},
          {"elapsed_ms", r.elapsed_ms}};
}

// Fills elapsed_ms on destruction.
class ReportTimer {
 public:
  explicit ReportTimer(VerificationReport& report)
      : report_(report), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    report_.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              start_)
            .count());
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace splitsum
