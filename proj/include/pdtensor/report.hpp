#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "pdtensor/hunt.hpp"
#include "pdtensor/properties.hpp"
#include "pdtensor/resolution.hpp"
#include "pdtensor/session.hpp"
#include "pdtensor/verdict.hpp"

namespace pdtensor {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "pdtensor.report/1";
inline constexpr const char* kEngineVersion = "pdtensor 1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitBoundExceeded = 2,
  kExitCritical = 3,
  /// An example assertion failed.
  kExitExampleFailed = 4,
};

struct ExecFlags {
  /// Overrides the homological bound of betti, resolve, tor, ext and trcheck.
  std::optional<int> bound;
  int degree_cap = 12;
  bool machine = false;
  std::uint64_t seed = 0;
  int threads = 1;
  bool timing = false;
};

/// Triangular layout: columns are homological degrees, row r holds
/// beta_{i, i+r}; zeros print as "-" and every column has the same width.
std::string render_betti(const BettiTable& table);

Json verdict_json(const Verdict& v, bool timing);
Json hunt_json(const HuntReport& r, bool timing);
Json property_json(const PropertySuiteResult& r, bool timing);

/// Task record skeleton.
Json task_record(std::size_t index, const std::string& op, const std::string& input);
/// Fills status from verdict outcomes.
std::string status_of_verdicts(const Json& verdicts);

/// Adds summary and exit code to a document holding "tasks".
void finalize_report(Json& doc);
Json report_header(const std::string& command, const ExecFlags& flags);

/// Human form, a pure function of the machine document.
std::string render_text(const Json& doc);
std::string render(const Json& doc, bool machine);

}  // namespace pdtensor
