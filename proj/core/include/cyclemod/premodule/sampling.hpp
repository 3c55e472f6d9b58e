#pragma once

#include "cyclemod/milnor/milnor.hpp"
#include "cyclemod/rng.hpp"

#include <vector>

namespace cyclemod {

/// Orders of the base fields the witness generators draw from.
const std::vector<std::uint64_t>& universe_orders();

/// Largest polynomial degree sampled over `base` so residue fields stay small.
int sample_degree_bound(const FieldPtr& base);

Code random_unit_code(const FieldPtr& f, Rng& rng);
Poly random_poly(const FieldPtr& f, Rng& rng, int max_deg, bool monic = false);
RationalFunction random_nonzero(const FieldPtr& f, Rng& rng, int max_deg);
/// A unit at v (valuation zero).
RationalFunction random_unit_at(const Place& v, Rng& rng, int max_deg);
Place random_place(const FieldRef& f, Rng& rng, int max_deg, bool allow_infinite = true);

/// A random Milnor class of degree n with small support; factors of the
/// entries have degree <= bound (default sample_degree_bound).
KElement sample_milnor(const FieldRef& f, int n, Rng& rng, int bound = 0);

/// F_{q^d} for the base of order q; d drawn from [1, max_d] within the cap.
FieldPtr random_extension(const FieldPtr& base, Rng& rng, int max_d);
/// A uniformly chosen embedding.
FiniteMap random_embedding(const FieldPtr& src, const FieldPtr& dst, Rng& rng);

}  // namespace cyclemod
