#pragma once

#include "cyclemod/cycles/cohomology.hpp"
#include "cyclemod/cycles/morphisms.hpp"
#include "cyclemod/premodule/relations.hpp"

#include <json.hpp>

namespace cyclemod::cli {

using Json = nlohmann::ordered_json;

/// {field, degree, payload, text}. Payload by case:
///   degree 0:             {"integer": "k"}
///   degree 1 over F_q:    {"log": e, "value": "c"}
///   degree 1 over F_q(t): {"constant": "c", "factors": [{"pi", "exponent"}]}
///   degree 2 over F_q(t): {"coords": [{"place", "log", "value"}]}
///   zero otherwise:       {}
Json to_json(const KElement& x);
/// {scheme, instance, p, n, coords: [{point, kelement}], terms: [...]}.
Json to_json(const CycleClass& c);
/// {generators, invariant_factors, group, distinguished: [{generator, coordinates}]}.
Json to_json(const GroupPresentation& g);
/// {relation, trials, seed, failures: [{trial, trial_seed, witness, lhs, rhs}]}.
Json to_json(const RelationReport& r);
Json to_json(const TrialOutcome& t);
Json to_json(const TraceReport& t);

std::string integer_string(const Integer& k);

}  // namespace cyclemod::cli
