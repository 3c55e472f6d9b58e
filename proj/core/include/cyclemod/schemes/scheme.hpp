#pragma once

#include "cyclemod/milnor/place.hpp"
#include "cyclemod/schemes/bipoly.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cyclemod {

enum class SchemeKind { Spec, AffineLine, ProjectiveLine, PuncturedLine, DisjointUnion, AffinePlane, ProjectivePlane };

std::string kind_name(SchemeKind k);

/// A closed point of A^2 or P^2 over F_q: a Frobenius orbit of geometric
/// points, stored through its canonical residue field kappa = F_{q^d} and
/// the smallest representative there. Charts: (a, b) affine, [1 : a : 0]
/// and [0 : 1 : 0] on the line at infinity.
struct ClosedPoint {
  enum class Chart { Affine, Infinity, InfinityY };

  Chart chart = Chart::Affine;
  FieldPtr kappa;
  Code a = 0;
  Code b = 0;

  /// [kappa : F_q] for the base of order `base_order`.
  int degree(const FieldPtr& base) const { return static_cast<int>(kappa->degree() / base->degree()); }
  std::strong_ordering operator<=>(const ClosedPoint& o) const;
  bool operator==(const ClosedPoint& o) const { return (*this <=> o) == 0; }
  std::string to_string() const;
};

/// Canonical form of the orbit of (a, b) in `field` (F_q embedded by
/// `constants`), together with the embedding kappa -> field that sends the
/// stored representative to (a, b).
std::pair<ClosedPoint, FiniteMap> closed_point_of(ClosedPoint::Chart chart, const FiniteMap& constants, Code a,
                                                  Code b);

/// A rational curve on a plane model: irreducible equation h(x, y) and a
/// birational parametrization t -> (X(t), Y(t)) of its closure by the
/// projective line, which is therefore its normalization.
struct CurveDecl {
  std::string id;
  std::string description;
  BiPoly equation;
  RationalFunction x;
  RationalFunction y;
  /// The line at infinity of P^2, parametrized by u -> [1 : u : 0].
  bool at_infinity = false;
};

/// Checks h(X, Y) = 0, that the parametrization is birational and that h
/// is irreducible; throws InputError naming the curve otherwise.
void validate_curve(const CurveDecl& c);

/// The point of P^2 that the place t of the parameter line maps to, with
/// the residue embedding phi_t: kappa(y) -> kappa(t).
struct FiberPoint {
  Place place;
  FiniteMap phi;
};
std::pair<ClosedPoint, FiniteMap> curve_image(const CurveDecl& c, const Place& t);

class SchemeModel;

struct PointRef {
  enum class Kind { Generic, Place, Curve, Closed };

  std::size_t part = 0;
  Kind kind = Kind::Generic;
  int codim = 0;
  Place place;
  std::string curve;
  ClosedPoint closed;

  static PointRef generic(std::size_t part = 0) { return {part, Kind::Generic, 0, {}, {}, {}}; }
  static PointRef at_place(const Place& v, std::size_t part = 0) { return {part, Kind::Place, 1, v, {}, {}}; }
  static PointRef on_curve(const std::string& id, std::size_t part = 0) { return {part, Kind::Curve, 1, {}, id, {}}; }
  static PointRef at_closed(const ClosedPoint& y, std::size_t part = 0) {
    return {part, Kind::Closed, 2, {}, {}, y};
  }

  std::strong_ordering operator<=>(const PointRef& o) const;
  bool operator==(const PointRef& o) const { return (*this <=> o) == 0; }
  std::string to_string() const;
};

struct Specialization {
  PointRef point;
  /// Places of the normalization of the closure of x over `point`; empty
  /// for the codimension-one points of a surface.
  std::vector<FiberPoint> fiber;
};

/// A fiber the user declared for a curve over a base-rational point.
struct DeclaredFiber {
  std::string curve;
  ClosedPoint point;
  std::vector<Place> places;
};

/// Immutable desk-scale scheme: SPEC of a finite field, the affine or
/// projective line, a punctured affine line, a disjoint union, or the
/// affine or projective plane with a declared table of rational curves
/// (the projective plane adds its line at infinity, id "inf").
class SchemeModel {
 public:
  SchemeModel() = default;

  static SchemeModel spec(const FieldPtr& field);
  static SchemeModel affine_line(const FieldPtr& base);
  static SchemeModel projective_line(const FieldPtr& base);
  /// A^1 minus finitely many finite places.
  static SchemeModel punctured_line(const FieldPtr& base, std::vector<Poly> removed);
  static SchemeModel disjoint_union(std::vector<SchemeModel> parts);
  /// Validates every curve and declared fiber.
  static SchemeModel affine_plane(const FieldPtr& base, std::vector<CurveDecl> curves,
                                  std::vector<DeclaredFiber> fibers = {});
  static SchemeModel projective_plane(const FieldPtr& base, std::vector<CurveDecl> curves,
                                      std::vector<DeclaredFiber> fibers = {});

  SchemeKind kind() const;
  const std::string& name() const;
  const FieldPtr& base() const;
  int dimension() const;
  bool is_curve() const;
  bool is_surface() const;

  const std::vector<SchemeModel>& parts() const;
  /// The model a point lives on (the part of a union, or this).
  const SchemeModel& component(const PointRef& x) const;

  /// Function field of a curve model, or the field of a SPEC.
  FieldRef function_field() const;
  /// Removed places of a punctured line.
  const std::vector<Place>& removed() const;
  /// Whether the place of the function field is a point of this curve model.
  bool contains(const Place& v) const;
  bool contains(const ClosedPoint& y) const;

  /// Declared curves, the line at infinity last for P^2.
  const std::vector<CurveDecl>& curves() const;
  const CurveDecl& curve(const std::string& id) const;

  /// kappa_x; throws DomainError for the generic point of a surface.
  FieldRef residue_field(const PointRef& x) const;

  std::vector<PointRef> points(int p, int degree_bound) const;
  /// Codimension p + 1 specializations of x whose residue degree is at
  /// most degree_bound (all declared curves for a surface's generic point).
  std::vector<Specialization> specializations(const PointRef& x, int degree_bound) const;

  struct Data;

 private:
  std::shared_ptr<const Data> d_;
};

/// x = 0, y = 0, y = x, y = x^2, x + y = 1, x y = 1.
std::vector<CurveDecl> standard_curve_table(const FieldPtr& base);

/// "A1", "P1", "SPEC", "A2", "P2" (planes with the standard table),
/// case-insensitive; throws InputError otherwise.
SchemeModel builtin_scheme(const std::string& name, const FieldPtr& base);

/// Parses the JSON scheme description
///   {kind, base: {p, m}, curves: [{id, description (the equation h(x, y)),
///    parametrization: {x, y}, fibers: [{point: [x, y], places: [...]}]}],
///    removed: [...], parts: [...]}
/// Throws InputError with the byte offset for syntax errors and the JSON
/// path for invalid content.
SchemeModel load_scheme(const std::string& text);

}  // namespace cyclemod
