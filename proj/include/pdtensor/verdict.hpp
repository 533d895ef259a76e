#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pdtensor {

/// One machine-checked predicate with its computed value. Unasserted entries
/// record a value without affecting the outcome.
struct Assertion {
  std::string name;
  std::string expected;
  std::string computed;
  bool asserted = true;
  bool passed = true;
  /// Full computed object, filled on failure.
  std::string detail;
};

enum class Outcome { kPass, kFail, kHypothesisNotMet, kCritical, kInconclusive, kBoundExceeded };

std::string outcome_name(Outcome o);

struct Verdict {
  std::string id;
  /// "example", "theorem" or "hunt".
  std::string kind;
  std::string ring;
  Outcome outcome = Outcome::kPass;
  std::vector<Assertion> hypotheses;
  std::vector<Assertion> assertions;
  std::vector<std::pair<std::string, std::string>> certificates;
  std::vector<std::string> notes;
  std::uint64_t seed = 0;
  double seconds = 0;

  bool critical() const { return outcome == Outcome::kCritical; }
  bool hypotheses_met() const;
  bool conclusions_hold() const;

  void expect(std::string name, std::string expected, std::string computed, std::string detail = {});
  void check(std::string name, bool ok, std::string expected, std::string computed, std::string detail = {});
  /// Returns ok.
  bool hypothesis(std::string name, bool ok, std::string computed);
  void record(std::string name, std::string computed);
  void certificate(std::string name, std::string value) { certificates.emplace_back(std::move(name), std::move(value)); }
  void note(std::string text) { notes.push_back(std::move(text)); }
};

/// Verdicts flagged CRITICAL during this process, in the order recorded. Each
/// one is also appended to the file named by PDTENSOR_CRITICAL_LOG, or to
/// pdtensor-critical.log in the working directory when that is unset.
void record_critical(const Verdict& v);
std::vector<Verdict> critical_verdicts();

}  // namespace pdtensor
