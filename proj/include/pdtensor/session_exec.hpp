#pragma once

#include <string>

#include "pdtensor/report.hpp"

namespace pdtensor {

/// Runs tasks in order; tasks whose operands are ready run together on up to
/// flags.threads workers. Records are ordered by task index.
Json execute(const Session& session, const ExecFlags& flags);

/// Every example, the shipped theorem checks, a hunt over R4 and small
/// property suites on the catalog rings, seeded from flags.seed.
Json run_paper_suite(const ExecFlags& flags);
Json run_paper_example(const std::string& id, const ExecFlags& flags);

Json run_hunt_command(const std::string& ring_id, int trials, const ExecFlags& flags);

/// Dense oracle only: Hilbert functions of declared modules and Tor
/// dimensions for tensor/tor tasks over declared modules.
Json run_oracle(const Session& session, const ExecFlags& flags);

/// Trials used by the hunt inside `paper --all`.
inline constexpr int kPaperHuntTrials = 5000;
inline constexpr int kPaperPropertyPairs = 25;

}  // namespace pdtensor
