#pragma once

#include "cyclemod/milnor/place.hpp"

#include <map>
#include <string>

namespace cyclemod {

/// A class in K^M_n of a field of the universe, in normal form:
///   n < 0                 zero
///   n = 0                 an integer
///   n = 1, F_q            discrete log of the unit, mod q-1
///   n = 1, F_q(t)         a FactoredUnit
///   n = 2, F_q(t)         tame coordinates: finite place pi -> log in
///                         kappa(pi)^x, nonzero entries only
///   otherwise             zero (K_2 of a finite field vanishes)
/// Equality of payloads is equality of classes.
class KElement {
 public:
  using Coords = std::map<Poly, std::uint64_t>;

  KElement() = default;

  static KElement zero(const FieldRef& f, int n);
  static KElement integer(const FieldRef& f, Integer k);
  static KElement finite_unit(const FieldRef& f, std::uint64_t log);
  /// Keeps the exponent as given; only for instances that deliberately
  /// carry non-normalized payloads.
  static KElement finite_unit_unreduced(const FieldRef& f, std::uint64_t log);
  static KElement unit(const FieldRef& f, FactoredUnit u);
  /// Reduces each entry and drops zeros.
  static KElement tame(const FieldRef& f, Coords coords);

  const FieldRef& field() const { return field_; }
  int degree() const { return n_; }
  bool is_zero() const;

  const Integer& k0() const { return k0_; }
  std::uint64_t log() const { return log_; }
  const FactoredUnit& unit() const { return unit_; }
  const Coords& coords() const { return coords_; }

  bool operator==(const KElement& o) const;

  std::string to_string() const;

 private:
  FieldRef field_;
  int n_ = 0;
  Integer k0_;
  std::uint64_t log_ = 0;
  FactoredUnit unit_;
  Coords coords_;
};

/// |kappa(pi)^x| for a finite place pi of F_q(t).
std::uint64_t residue_unit_order(const FieldPtr& base, const Poly& pi);

/// Throw DomainError on field or degree mismatch.
KElement k_add(const KElement& a, const KElement& b);
KElement k_neg(const KElement& a);
KElement k_sub(const KElement& a, const KElement& b);
KElement k_scale(const KElement& a, const Integer& k);
bool k_eq(const KElement& a, const KElement& b);

}  // namespace cyclemod
