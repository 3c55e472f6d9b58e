#include "cyclemod/cycles/morphisms.hpp"

#include "cyclemod/cycles/cohomology.hpp"
#include "cyclemod/cycles/complex.hpp"
#include "cyclemod/errors.hpp"
#include "cyclemod/exactfield/parse.hpp"

#include <algorithm>

namespace cyclemod {

std::string Morphism::to_string() const {
  switch (kind) {
    case Kind::OpenImmersion:
      return source.name() + " -> " + target.name() + " (open)";
    case Kind::BaseChange:
      return source.name() + " -> " + target.name() + " (base change)";
    case Kind::Structural:
      return source.name() + " -> " + target.name();
    case Kind::Projection:
      return std::string(coordinate == 0 ? "(x, y) -> x" : "(x, y) -> y") + " on " + source.name();
    case Kind::Substitution:
      return "t -> " + image.to_string() + " on " + source.name();
  }
  return "?";
}

namespace {

bool curve_or_spec(const SchemeModel& X) { return X.is_curve() || X.kind() == SchemeKind::Spec; }

FieldMap generic_map(const Morphism& f) {
  switch (f.kind) {
    case Morphism::Kind::BaseChange:
      if (f.target.kind() == SchemeKind::Spec) return FieldMap::finite(f.constants);
      return FieldMap::constant_extension(f.constants);
    case Morphism::Kind::Substitution:
      return FieldMap::rational(identity_map(f.target.base()), f.image);
    default:
      throw DomainError("no generic field map for " + f.to_string());
  }
}

}  // namespace

Morphism open_immersion(const SchemeModel& U, const SchemeModel& X) {
  if (!U.is_curve() || !X.is_curve() || U.base() != X.base())
    throw DomainError("open immersions are supported between curve models over one base");
  if (U.kind() == SchemeKind::ProjectiveLine && X.kind() != SchemeKind::ProjectiveLine)
    throw DomainError(U.name() + " is not open in " + X.name());
  for (const auto& v : X.removed())
    if (U.contains(v)) throw DomainError(U.name() + " is not open in " + X.name());
  Morphism f;
  f.kind = Morphism::Kind::OpenImmersion;
  f.source = U;
  f.target = X;
  return f;
}

Morphism base_change(const SchemeModel& X, const FieldPtr& ext) {
  if (!curve_or_spec(X)) throw DomainError("base change is supported for SPEC and curve models");
  const auto maps = all_embeddings(X.base(), ext);
  if (maps.empty()) throw InputError(X.base()->name() + " does not embed in " + ext->name());
  Morphism f;
  f.kind = Morphism::Kind::BaseChange;
  f.target = X;
  f.constants = maps.front();
  switch (X.kind()) {
    case SchemeKind::Spec:
      f.source = SchemeModel::spec(ext);
      break;
    case SchemeKind::AffineLine:
      f.source = SchemeModel::affine_line(ext);
      break;
    case SchemeKind::ProjectiveLine:
      f.source = SchemeModel::projective_line(ext);
      break;
    default: {
      std::vector<Poly> removed;
      for (const auto& v : X.removed())
        for (const auto& [pi, e] : factor_poly(v.pi().mapped(f.constants)).factors) removed.push_back(pi);
      f.source = SchemeModel::punctured_line(ext, removed);
    }
  }
  return f;
}

Morphism structural(const SchemeModel& X) {
  if (X.kind() == SchemeKind::DisjointUnion) throw DomainError("structural maps of unions are taken part by part");
  Morphism f;
  f.kind = Morphism::Kind::Structural;
  f.source = X;
  f.target = SchemeModel::spec(X.base());
  return f;
}

Morphism projection(const SchemeModel& plane, int coordinate) {
  if (plane.kind() != SchemeKind::AffinePlane) throw DomainError("projections are supported from A^2");
  if (coordinate != 0 && coordinate != 1) throw InputError("projection coordinate must be 0 or 1");
  Morphism f;
  f.kind = Morphism::Kind::Projection;
  f.source = plane;
  f.target = SchemeModel::affine_line(plane.base());
  f.coordinate = coordinate;
  return f;
}

Morphism substitution(const SchemeModel& X, const RationalFunction& g) {
  if (X.kind() != SchemeKind::ProjectiveLine && X.kind() != SchemeKind::AffineLine)
    throw DomainError("substitutions are supported on A^1 and P^1");
  if (g.field() != X.base()) throw InputError("substitution over a different field");
  if (g.is_constant()) throw InputError("substitution must be non-constant");
  if (g.degree() > 5) throw DomainError("substitution degree above 5");
  if (X.kind() == SchemeKind::AffineLine && g.den().degree() != 0)
    throw DomainError("a substitution of A^1 must be a polynomial");
  Morphism f;
  f.kind = Morphism::Kind::Substitution;
  f.source = X;
  f.target = X;
  f.image = g;
  return f;
}

Morphism parse_morphism(const std::string& text, const SchemeModel& X) {
  std::string s;
  for (const char ch : text)
    if (ch != ' ') s += ch;
  if (s == "structural" || s == "X->SPEC" || s == "->SPEC") return structural(X);
  if (s == "pr1") return projection(X, 0);
  if (s == "pr2") return projection(X, 1);
  if (const auto arrow = s.find("->"); arrow != std::string::npos) {
    const std::string var = s.substr(0, arrow);
    if (var.empty()) throw InputError("map needs a variable before '->'", 0);
    try {
      return substitution(X, parse_rational(s.substr(arrow + 2), X.base(), var));
    } catch (const InputError& e) {
      const std::size_t pos = e.position() == InputError::npos ? e.position() : e.position() + arrow + 2;
      throw InputError(std::string("map: ") + e.what(), pos);
    }
  }
  if (s.rfind("GF(", 0) == 0 || s.rfind("base:", 0) == 0) {
    const std::string field = s.rfind("base:", 0) == 0 ? s.substr(5) : s;
    const FieldLiteral lit = parse_field(field);
    if (lit.var) throw InputError("base change target must be a finite field");
    return base_change(X, lit.base);
  }
  throw InputError("unrecognized map '" + text + "' (expected t->g(t), GF(q), structural, pr1 or pr2)");
}

// ---------------------------------------------------------------- pullback

namespace {

void pull_places(const PremoduleInstance& inst, const FieldMap& phi, const SchemeModel& source, const Place& v,
                 const KElement& rho, std::size_t part, CycleClass& out) {
  for (const auto& po : places_over(phi, v)) {
    if (!source.contains(po.above)) continue;
    const KElement r = inst.restriction(FieldMap::finite(po.iota), rho);
    add_coordinate(inst, out, PointRef::at_place(po.above, part), inst.scale(r, po.e));
  }
}

// The declared line {coordinate = a} of the plane, parametrized by the other coordinate.
const CurveDecl* fiber_line(const SchemeModel& plane, int coordinate, Code a) {
  const FieldPtr& base = plane.base();
  const auto t = RationalFunction::variable(base);
  const auto c = RationalFunction::constant(base, a);
  const BiPoly eq = (coordinate == 0 ? BiPoly::x(base) : BiPoly::y(base)) - BiPoly::constant(base, a);
  for (const auto& C : plane.curves()) {
    if (C.at_infinity || !(C.equation == eq)) continue;
    if (coordinate == 0 ? (C.x == c && C.y == t) : (C.y == c && C.x == t)) return &C;
  }
  return nullptr;
}

CycleClass pull_projection(const PremoduleInstance& inst, const Morphism& f, const CycleClass& c) {
  const SchemeModel& plane = f.source;
  const FieldPtr& base = plane.base();
  CycleClass out = make_class(inst, plane, c.p, c.n);
  for (const auto& [x, rho] : c.coords) {
    if (x.kind == PointRef::Kind::Place) {
      if (x.place.degree() != 1) throw DomainError("pullback of a place of degree > 1 along a projection");
      const Code a = base->neg(x.place.pi().coeff(0));
      const CurveDecl* L = fiber_line(plane, f.coordinate, a);
      if (!L) throw DomainError("the fiber over " + x.place.to_string() + " is not a declared curve");
      const KElement r = inst.restriction(FieldMap::constants(identity_map(base)), rho);
      add_coordinate(inst, out, PointRef::on_curve(L->id), r);
      continue;
    }
    // Generic: symbols in linear factors t - a whose fibers are declared lines.
    if (inst.shift != 0 || rho.degree() != inst.degree(rho) || rho.degree() > 1)
      throw DomainError("projection pullback of generic classes is limited to Milnor degrees 0 and 1");
    SurfaceTerm t;
    if (rho.degree() == 0) {
      t.m = inst.from_milnor(KElement::integer(FieldRef::finite(base), rho.k0()));
    } else {
      SurfaceUnit u;
      u.constant = rho.unit().constant();
      for (const auto& [pi, e] : rho.unit().factors()) {
        if (pi.degree() != 1) throw DomainError("projection pullback needs linear factors");
        const CurveDecl* L = fiber_line(plane, f.coordinate, base->neg(pi.coeff(0)));
        if (!L) throw DomainError("no declared line over the zero of " + pi.to_string());
        u.exponents[L->id] += static_cast<long>(e);
      }
      t.units.push_back(std::move(u));
      t.m = inst.from_milnor(KElement::integer(FieldRef::finite(base), 1));
    }
    add_surface_term(inst, out, std::move(t));
  }
  return out;
}

}  // namespace

CycleClass flat_pullback(const PremoduleInstance& inst, const Morphism& f, const CycleClass& c) {
  if (c.scheme.name() != f.target.name()) throw InputError("class does not live on the target of " + f.to_string());
  if (!c.generic_terms.empty()) throw DomainError("pullback of plane symbol terms is not supported");
  CycleClass out = make_class(inst, f.source, c.p, c.n);
  switch (f.kind) {
    case Morphism::Kind::OpenImmersion:
      for (const auto& [x, rho] : c.coords)
        if (x.kind == PointRef::Kind::Generic || f.source.contains(x.place)) add_coordinate(inst, out, x, rho);
      return out;
    case Morphism::Kind::BaseChange:
    case Morphism::Kind::Substitution: {
      const FieldMap phi = generic_map(f);
      for (const auto& [x, rho] : c.coords) {
        if (x.kind == PointRef::Kind::Generic)
          add_coordinate(inst, out, x, inst.restriction(phi, rho));
        else
          pull_places(inst, phi, f.source, x.place, rho, x.part, out);
      }
      return out;
    }
    case Morphism::Kind::Structural:
      for (const auto& [x, rho] : c.coords) {
        if (f.source.is_surface()) {
          add_surface_term(inst, out, SurfaceTerm{0, {}, rho});
        } else if (f.source.kind() == SchemeKind::Spec) {
          add_coordinate(inst, out, x, rho);
        } else {
          add_coordinate(inst, out, x, inst.restriction(FieldMap::constants(identity_map(f.source.base())), rho));
        }
      }
      return out;
    case Morphism::Kind::Projection:
      return pull_projection(inst, f, c);
  }
  return out;
}

KElement divisor_pullback(const PremoduleInstance& inst, const SchemeModel& X, const Place& v,
                          const RationalFunction& pi, const KElement& a) {
  if (!X.is_curve()) throw InputError("divisor pullback on a curve model needs a place");
  if (!X.contains(v)) throw InputError("place " + v.to_string() + " is not a point of " + X.name());
  if (pi.is_zero() || v.valuation(pi) != 1) throw InputError("pi does not cut out " + v.to_string() + " with multiplicity 1");
  if (!a0_membership(inst, X, a)) throw InputError("element is not in A^0 of " + X.name());
  return inst.residue(v, inst.multiply(symbol(X.function_field(), {pi}), a));
}

KElement divisor_pullback(const PremoduleInstance& inst, const SchemeModel& X, const std::string& curve,
                          const std::vector<SurfaceTerm>& a, int n) {
  if (!X.is_surface()) throw InputError("divisor pullback along a curve needs a plane model");
  const CurveDecl& C = X.curve(curve);
  if (C.at_infinity) throw InputError("the line at infinity is not principal");
  if (!a0_membership(inst, X, a, n)) throw InputError("element is not in A^0 of " + X.name());
  std::vector<SurfaceTerm> terms = a;
  for (auto& t : terms) {
    SurfaceUnit h;
    h.exponents[curve] = 1;
    t.units.insert(t.units.begin(), h);
  }
  return surface_residue(inst, X, terms, curve, n + 1);
}

// ---------------------------------------------------------------- pushforward

CycleClass pushforward_finite(const PremoduleInstance& inst, const Morphism& f, const CycleClass& c) {
  if (c.scheme.name() != f.source.name()) throw InputError("class does not live on the source of " + f.to_string());
  switch (f.kind) {
    case Morphism::Kind::BaseChange:
    case Morphism::Kind::Substitution: {
      const FieldMap phi = generic_map(f);
      CycleClass out = make_class(inst, f.target, c.p, c.n);
      for (const auto& [x, rho] : c.coords) {
        if (x.kind == PointRef::Kind::Generic) {
          add_coordinate(inst, out, x, inst.corestriction(phi, rho));
          continue;
        }
        const PlaceOver po = lying_under(phi, x.place);
        if (!f.target.contains(po.below)) continue;
        add_coordinate(inst, out, PointRef::at_place(po.below, x.part),
                       inst.corestriction(FieldMap::finite(po.iota), rho));
      }
      return out;
    }
    case Morphism::Kind::Structural: {
      if (f.source.kind() != SchemeKind::ProjectiveLine && f.source.kind() != SchemeKind::Spec)
        throw DomainError(f.source.name() + " is not proper over the base");
      if (f.source.kind() == SchemeKind::Spec) return c;
      if (c.p != 1) throw DomainError("pushforward from P^1 to SPEC takes codimension-one classes");
      CycleClass out = make_class(inst, f.target, 0, c.n - 1);
      for (const auto& [x, rho] : c.coords)
        add_coordinate(inst, out, PointRef::generic(), inst.corestriction(FieldMap::finite(x.place.constants()), rho));
      return out;
    }
    default:
      throw DomainError(f.to_string() + " is not finite");
  }
}

TraceReport trace(const PremoduleInstance& inst, const Morphism& f) {
  if (f.kind != Morphism::Kind::BaseChange && f.kind != Morphism::Kind::Substitution)
    throw DomainError("trace needs a finite map of curves, got " + f.to_string());
  TraceReport r;
  const FieldMap phi = generic_map(f);
  r.degree = f.kind == Morphism::Kind::Substitution ? Integer(f.image.degree()) : Integer(f.constants.degree());
  const FieldRef src = f.source.residue_field(PointRef::generic());
  const FieldRef dst = f.target.residue_field(PointRef::generic());
  CycleClass one = make_class(inst, f.source, 0, -inst.shift);
  add_coordinate(inst, one, PointRef::generic(), inst.from_milnor(KElement::integer(src, 1)));
  const CycleClass pushed = pushforward_finite(inst, f, one);
  const KElement expected = inst.scale(inst.from_milnor(KElement::integer(dst, 1)), r.degree);
  auto it = pushed.coords.find(PointRef::generic());
  const KElement got = it == pushed.coords.end() ? inst.zero(dst, -inst.shift) : it->second;
  r.ok = inst.equal(got, expected);
  r.pushed = got.to_string();
  r.expected = expected.to_string();
  r.fibers_ok = true;
  if (dst.is_rational()) {
    for (const auto& v : places_up_to(dst, 1, true)) {
      Integer sum = 0;
      for (const auto& po : places_over(phi, v))
        sum += po.e * Integer(po.above.residue_field()->degree() / po.below.residue_field()->degree());
      r.fibers_ok = r.fibers_ok && sum == r.degree;
    }
  }
  return r;
}

}  // namespace cyclemod
