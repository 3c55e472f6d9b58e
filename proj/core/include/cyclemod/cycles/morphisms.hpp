#pragma once

#include "cyclemod/cycles/cycle_class.hpp"

namespace cyclemod {

/// The maps the engine can pull back or push forward along.
struct Morphism {
  enum class Kind { OpenImmersion, BaseChange, Structural, Projection, Substitution };

  Kind kind = Kind::OpenImmersion;
  SchemeModel source;
  SchemeModel target;
  /// BaseChange: target base -> source base.
  FiniteMap constants;
  /// Substitution: t -> image(t).
  RationalFunction image;
  /// Projection: 0 for (x, y) -> x, 1 for (x, y) -> y.
  int coordinate = 0;

  std::string to_string() const;
};

/// U -> X for curve models with U(points) a subset of X(points).
Morphism open_immersion(const SchemeModel& U, const SchemeModel& X);
/// X_{ext} -> X for SPEC and curve models.
Morphism base_change(const SchemeModel& X, const FieldPtr& ext);
/// X -> SPEC of the base.
Morphism structural(const SchemeModel& X);
/// A^2 -> A^1; pullbacks are limited to what the curve table can express.
Morphism projection(const SchemeModel& plane, int coordinate);
/// P^1 -> P^1 (or A^1 -> A^1 for polynomials), t -> g(t), deg g <= 5.
Morphism substitution(const SchemeModel& X, const RationalFunction& g);

/// "t->g(t)", "GF(q)" (base change), "structural", "pr1"/"pr2".
Morphism parse_morphism(const std::string& text, const SchemeModel& X);

/// f^* on a class of the target: restriction along the induced residue
/// embeddings, with ramification multiplicities at codimension-one points.
/// Throws DomainError for classes f cannot pull back.
CycleClass flat_pullback(const PremoduleInstance& inst, const Morphism& f, const CycleClass& c);

/// i^*(a) = d_v(gamma_{pi}(a)) for the point v of a curve model cut out by
/// pi (v(pi) = 1). Throws InputError unless a lies in A^0.
KElement divisor_pullback(const PremoduleInstance& inst, const SchemeModel& X, const Place& v,
                          const RationalFunction& pi, const KElement& a);
/// The same on a plane along the declared curve `curve`, pi its equation.
KElement divisor_pullback(const PremoduleInstance& inst, const SchemeModel& X, const std::string& curve,
                          const std::vector<SurfaceTerm>& a, int n);

/// f_* for finite f (base change, substitution, P^1 -> SPEC): corestriction
/// along the residue extensions. Generic coordinates along a substitution
/// are supported in degree 0 only.
CycleClass pushforward_finite(const PremoduleInstance& inst, const Morphism& f, const CycleClass& c);

struct TraceReport {
  Integer degree;
  bool ok = false;
  /// Sum of e f over the fibers above the degree-one points of the target.
  bool fibers_ok = false;
  std::string pushed;
  std::string expected;
};

/// f_*(1) = d for the generic degree d of a finite map of curves.
TraceReport trace(const PremoduleInstance& inst, const Morphism& f);

}  // namespace cyclemod
