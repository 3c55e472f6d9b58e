#pragma once

#include "cyclemod/premodule/relations.hpp"
#include "cyclemod/schemes/scheme.hpp"

namespace cyclemod {

/// One (FD) trial: a random class on a curve or plane model; its
/// differential must have finite support that does not change when the
/// degree window grows.
TrialOutcome fd_trial(const PremoduleInstance& inst, Rng& rng);

/// One (C) trial: d(d(c)) = 0 for a random codimension-0 class on A^2 or
/// P^2 with the standard curve table.
TrialOutcome c_trial(const PremoduleInstance& inst, Rng& rng);

/// d(d(c)) = 0 for a random codimension-0 class on X.
TrialOutcome c_trial_on(const PremoduleInstance& inst, const SchemeModel& X, Rng& rng);

/// (C) on a fixed model; trials are seeded like the relation suite.
RelationReport check_c(const PremoduleInstance& inst, const SchemeModel& X, std::size_t trials, std::uint64_t seed);

}  // namespace cyclemod
