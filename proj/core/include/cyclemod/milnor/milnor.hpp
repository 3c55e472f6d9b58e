#pragma once

#include "cyclemod/milnor/kelement.hpp"

#include <utility>
#include <vector>

namespace cyclemod {

/// The Steinberg symbol {a_1, ..., a_n}; entries must be nonzero (for a
/// finite field, constants). n = 0 gives 1 in K_0.
KElement symbol(const FieldRef& f, const std::vector<RationalFunction>& entries);
KElement unit_symbol(const FieldRef& f, const std::vector<FactoredUnit>& entries);
KElement finite_symbol(const FieldRef& f, const std::vector<Code>& entries);

/// Tame coordinates of {a, b} at every finite place of the joint support.
KElement::Coords tame_coordinates(const FieldRef& f, const FactoredUnit& a, const FactoredUnit& b);

/// gamma_x(y) = x.y in the Milnor ring.
KElement gamma(const KElement& x, const KElement& y);

/// Restriction along phi: K(src) -> K(dst).
KElement res_field(const FieldMap& phi, const KElement& x);

/// Corestriction along a finite phi: K(dst) -> K(src). Over rational
/// function fields degrees >= 1 need a constant extension.
KElement cor_field(const FieldMap& phi, const KElement& x);

/// Residue (tame symbol) at v, uniformizer in the first slot:
/// d{pi, u_1, ...} = {u_1-bar, ...}.
KElement residue(const Place& v, const KElement& x);

/// d_v(gamma_{-pi}(x)).
KElement specialize(const Place& v, const KElement& x);

/// Writes x in K_2(F_q(t)) as a sum of symbols {pi, u} with pi monic
/// irreducible and u a polynomial of smaller degree.
std::vector<std::pair<Poly, Poly>> k2_generators(const KElement& x);

/// Places where x can have a nonzero residue, infinity included, in Place order.
std::vector<Place> residue_support(const KElement& x);

/// Sum over all places v of cor_{kappa(v)/F_q}(d_v(x)); zero by reciprocity.
KElement reciprocity_sum(const KElement& x);

}  // namespace cyclemod
