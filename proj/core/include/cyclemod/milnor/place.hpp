#pragma once

#include "cyclemod/milnor/field_ref.hpp"

#include <memory>
#include <string>
#include <vector>

namespace cyclemod {

/// A place of F_q(t): a monic irreducible pi or the place at infinity
/// (uniformizer 1/t). The residue field of a finite place is the canonical
/// F_{q^deg pi}, identified with F_q[t]/(pi) by sending the constants
/// through the default embedding and t to the smallest root of pi there.
class Place {
 public:
  Place() = default;
  /// Throws DomainError unless pi is monic irreducible over the base.
  static Place finite(const FieldRef& field, const Poly& pi);
  static Place infinite(const FieldRef& field);

  const FieldRef& field() const;
  bool is_infinite() const;
  /// Empty polynomial at infinity.
  const Poly& pi() const;
  int degree() const;

  const FieldPtr& residue_field() const;
  FieldRef residue() const { return FieldRef::finite(residue_field()); }
  /// Constants F_q -> kappa.
  const FiniteMap& constants() const;
  /// Image of t in kappa (finite places).
  Code root() const;
  RationalFunction uniformizer() const;

  Integer valuation(const FactoredUnit& u) const;
  int valuation(const RationalFunction& f) const;
  /// log in kappa of the residue of u / uniformizer^{v(u)}.
  std::uint64_t unit_part_log(const FactoredUnit& u) const;
  /// Residue class of f with v(f) >= 0.
  Code reduce(const RationalFunction& f) const;
  /// The polynomial of degree < deg pi reducing to c (finite places).
  Poly lift(Code c) const;

  /// By degree; in degree 1 the finite places precede infinity.
  std::strong_ordering operator<=>(const Place& o) const;
  bool operator==(const Place& o) const { return (*this <=> o) == 0; }

  std::string to_string() const;

  struct Data;

 private:
  std::shared_ptr<const Data> d_;
};

/// All places of degree <= max_degree, in Place order.
std::vector<Place> places_up_to(const FieldRef& field, int max_degree, bool include_infinite);

/// A place w over v along a map of rational function fields, with its
/// ramification index and the induced embedding kappa(v) -> kappa(w).
struct PlaceOver {
  Place below;
  Place above;
  Integer e;
  FiniteMap iota;
};

/// The place of the source under w.
PlaceOver lying_under(const FieldMap& phi, const Place& w);
/// All places of the target over v (phi finite), in Place order.
std::vector<PlaceOver> places_over(const FieldMap& phi, const Place& v);

/// Canonical minimal polynomial over `sub` of an element of a field
/// containing it via `map`.
Poly minimal_polynomial(const FiniteMap& map, Code beta);

}  // namespace cyclemod
