#pragma once

#include "cyclemod/premodule/instance.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cyclemod {

/// Result of evaluating both sides of a law on one witness.
struct TrialOutcome {
  bool ok = true;
  std::string witness;
  std::string lhs;
  std::string rhs;
};

struct RelationFailure {
  std::size_t trial = 0;
  std::uint64_t trial_seed = 0;
  std::string witness;
  std::string lhs;
  std::string rhs;
};

struct RelationReport {
  std::string relation;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<RelationFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// "R0", "R1a", "R1b", "R1c", "R2a", "R2b", "R2c", "R3a", ..., "R3e",
/// "L4", ..., "L7", "FD", "C".
const std::vector<std::string>& relation_ids();

/// Seed of trial `index`; the trial is a function of this seed alone.
std::uint64_t trial_seed(std::uint64_t seed, const std::string& id, std::size_t index);

/// One trial from its own seed. Throws InputError for an unknown id.
TrialOutcome run_trial(const PremoduleInstance& inst, const std::string& id, std::uint64_t trial_seed);

RelationReport check_relation(const PremoduleInstance& inst, const std::string& id, std::size_t trials,
                              std::uint64_t seed);

struct SuiteConfig {
  std::size_t trials = 200;
  std::uint64_t seed = 42;
  /// Empty means the whole catalogue.
  std::vector<std::string> relations;
};

std::vector<RelationReport> run_relation_suite(const PremoduleInstance& inst, const SuiteConfig& config);

}  // namespace cyclemod
