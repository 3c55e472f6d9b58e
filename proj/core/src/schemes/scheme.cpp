#include "cyclemod/schemes/scheme.hpp"

#include "cyclemod/errors.hpp"
#include "cyclemod/exactfield/parse.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace cyclemod {

std::string kind_name(SchemeKind k) {
  switch (k) {
    case SchemeKind::Spec:
      return "SPEC";
    case SchemeKind::AffineLine:
      return "A1";
    case SchemeKind::ProjectiveLine:
      return "P1";
    case SchemeKind::PuncturedLine:
      return "PUNCTURED_LINE";
    case SchemeKind::DisjointUnion:
      return "DISJOINT_UNION";
    case SchemeKind::AffinePlane:
      return "A2";
    case SchemeKind::ProjectivePlane:
      return "P2";
  }
  return "?";
}

// ---------------------------------------------------------------- closed points

std::strong_ordering ClosedPoint::operator<=>(const ClosedPoint& o) const {
  const std::uint32_t da = kappa ? kappa->degree() : 0;
  const std::uint32_t db = o.kappa ? o.kappa->degree() : 0;
  if (auto c = da <=> db; c != 0) return c;
  if (auto c = static_cast<int>(chart) <=> static_cast<int>(o.chart); c != 0) return c;
  if (auto c = a <=> o.a; c != 0) return c;
  return b <=> o.b;
}

std::string ClosedPoint::to_string() const {
  std::string s;
  switch (chart) {
    case Chart::Affine:
      s = "(" + kappa->format(a) + ", " + kappa->format(b) + ")";
      break;
    case Chart::Infinity:
      s = "[1:" + kappa->format(a) + ":0]";
      break;
    case Chart::InfinityY:
      s = "[0:1:0]";
      break;
  }
  return s;
}

namespace {

std::size_t orbit_size(const FieldPtr& f, std::uint32_t q, Code a, Code b) {
  Code x = a, y = b;
  for (std::size_t d = 1;; ++d) {
    x = f->pow(x, static_cast<std::int64_t>(q));
    y = f->pow(y, static_cast<std::int64_t>(q));
    if (x == a && y == b) return d;
  }
}

bool is_orbit_min(const FieldPtr& f, std::uint32_t q, Code a, Code b) {
  Code x = a, y = b;
  for (;;) {
    x = f->pow(x, static_cast<std::int64_t>(q));
    y = f->pow(y, static_cast<std::int64_t>(q));
    if (x == a && y == b) return true;
    if (std::pair{x, y} < std::pair{a, b}) return false;
  }
}

}  // namespace

std::pair<ClosedPoint, FiniteMap> closed_point_of(ClosedPoint::Chart chart, const FiniteMap& constants, Code a,
                                                  Code b) {
  const FieldPtr& base = constants.src();
  const FieldPtr& field = constants.dst();
  const std::uint32_t q = base->order();
  const auto d = static_cast<std::uint32_t>(orbit_size(field, q, a, b));
  const FieldPtr kappa = make_field(base->characteristic(), base->degree() * d);
  const FiniteMap kb = default_embedding(base, kappa);
  const Code g = base->generator();
  const auto i = find_embedding(kappa, field, {{kb.apply(g), constants.apply(g)}});
  if (!i) throw DomainError("residue field of a closed point does not embed");
  Code x = i->preimage(a), y = i->preimage(b);
  std::pair<Code, Code> best{x, y};
  for (std::uint32_t k = 1; k < d; ++k) {
    x = kappa->pow(x, static_cast<std::int64_t>(q));
    y = kappa->pow(y, static_cast<std::int64_t>(q));
    best = std::min(best, std::pair{x, y});
  }
  const auto phi = find_embedding(kappa, field, {{best.first, a}, {best.second, b}, {kb.apply(g), constants.apply(g)}});
  if (!phi) throw DomainError("no residue embedding for a closed point");
  return {ClosedPoint{chart, kappa, best.first, best.second}, *phi};
}

// ---------------------------------------------------------------- curves

namespace {

Code value_at(const Poly& f, Code x) { return f.is_zero() ? 0 : f.eval(x); }

// Some parameter value t0 in an extension whose fiber under the
// parametrization is the single point t0.
bool birational(const RationalFunction& X, const RationalFunction& Y) {
  const FieldPtr& base = X.field();
  std::uint32_t k = 1;
  for (std::uint64_t n = base->order(); n < 64; n *= base->order()) ++k;
  const FieldPtr F = make_field(base->characteristic(), base->degree() * k);
  const FiniteMap e = default_embedding(base, F);
  const Poly nx = X.num().mapped(e), dx = X.den().mapped(e);
  const Poly ny = Y.num().mapped(e), dy = Y.den().mapped(e);
  const std::uint32_t tries = std::min<std::uint32_t>(F->order(), 512);
  for (Code t0 = 0; t0 < tries; ++t0) {
    const Code ux = value_at(dx, t0), uy = value_at(dy, t0);
    if (ux == 0 || uy == 0) continue;
    const Code x0 = F->div(value_at(nx, t0), ux);
    const Code y0 = F->div(value_at(ny, t0), uy);
    const Poly gx = nx - dx.scaled(x0);
    const Poly gy = ny - dy.scaled(y0);
    if (gcd(gx, gy).degree() == 1) return true;
  }
  return false;
}

}  // namespace

void validate_curve(const CurveDecl& c) {
  if (c.at_infinity) return;
  const std::string who = "curve '" + c.id + "': ";
  if (c.x.is_constant() && c.y.is_constant()) throw InputError(who + "constant parametrization");
  if (c.equation.is_zero() || c.equation.degree() < 1) throw InputError(who + "equation must be non-constant");
  if (!c.equation.eval(c.x, c.y).is_zero()) throw InputError(who + "parametrization does not satisfy the equation");
  if (!birational(c.x, c.y)) throw InputError(who + "parametrization is not birational");
  const Poly A = c.x.num() * c.y.den();
  const Poly B = c.y.num() * c.x.den();
  const Poly C = c.x.den() * c.y.den();
  const Poly g = gcd(gcd(A, B), C);
  const int L = std::max({A.degree(), B.degree(), C.degree()}) - g.degree();
  if (L != c.equation.degree()) throw InputError(who + "equation is not irreducible");
}

std::pair<ClosedPoint, FiniteMap> curve_image(const CurveDecl& c, const Place& t) {
  using Chart = ClosedPoint::Chart;
  const FiniteMap& k = t.constants();
  if (c.at_infinity) {
    if (t.is_infinite()) return closed_point_of(Chart::InfinityY, k, 0, 0);
    return closed_point_of(Chart::Infinity, k, t.reduce(RationalFunction::variable(c.x.field())), 0);
  }
  constexpr int kInf = 1 << 30;
  auto val = [&](const RationalFunction& f) { return f.is_zero() ? kInf : t.valuation(f); };
  const int vx = val(c.x), vy = val(c.y);
  if (vx >= 0 && vy >= 0) return closed_point_of(Chart::Affine, k, t.reduce(c.x), t.reduce(c.y));
  if (vx <= vy) return closed_point_of(Chart::Infinity, k, t.reduce(c.y / c.x), 0);
  return closed_point_of(Chart::InfinityY, k, 0, 0);
}

// ---------------------------------------------------------------- points

std::strong_ordering PointRef::operator<=>(const PointRef& o) const {
  if (auto c = part <=> o.part; c != 0) return c;
  if (auto c = codim <=> o.codim; c != 0) return c;
  if (auto c = static_cast<int>(kind) <=> static_cast<int>(o.kind); c != 0) return c;
  switch (kind) {
    case Kind::Generic:
      return std::strong_ordering::equal;
    case Kind::Place:
      return place <=> o.place;
    case Kind::Curve:
      return curve <=> o.curve;
    case Kind::Closed:
      return closed <=> o.closed;
  }
  return std::strong_ordering::equal;
}

std::string PointRef::to_string() const {
  std::string s;
  switch (kind) {
    case Kind::Generic:
      s = "generic";
      break;
    case Kind::Place:
      s = place.to_string();
      break;
    case Kind::Curve:
      s = "curve " + curve;
      break;
    case Kind::Closed:
      s = closed.to_string();
      if (closed.kappa->degree() > 1 && closed.chart != ClosedPoint::Chart::InfinityY) s += "@" + closed.kappa->name();
      break;
  }
  return part == 0 ? s : "part " + std::to_string(part) + ": " + s;
}

// ---------------------------------------------------------------- models

struct SchemeModel::Data {
  SchemeKind kind = SchemeKind::Spec;
  std::string name;
  FieldPtr base;
  int dim = 0;
  std::vector<SchemeModel> parts;
  std::vector<Place> removed;
  std::vector<CurveDecl> curves;
  std::vector<DeclaredFiber> fibers;
};

namespace {

std::shared_ptr<SchemeModel::Data> fresh(SchemeKind kind, FieldPtr base, int dim) {
  auto d = std::make_shared<SchemeModel::Data>();
  d->kind = kind;
  d->base = std::move(base);
  d->dim = dim;
  d->name = kind_name(kind) + "/" + d->base->name();
  return d;
}

// The places of the parameter line mapping to a base-rational affine point.
std::vector<Place> rational_fiber(const CurveDecl& c, const ClosedPoint& y) {
  const FieldRef ff = FieldRef::rational(c.x.field());
  std::vector<Place> out;
  const Poly gx = c.x.num() - c.x.den().scaled(y.a);
  const Poly gy = c.y.num() - c.y.den().scaled(y.b);
  const Poly g = gcd(gx, gy);
  if (g.degree() > 0)
    for (const auto& [pi, e] : factor_poly(g).factors) out.push_back(Place::finite(ff, pi));
  const Place inf = Place::infinite(ff);
  if (curve_image(c, inf).first == y) out.push_back(inf);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SchemeModel SchemeModel::spec(const FieldPtr& field) {
  SchemeModel m;
  m.d_ = fresh(SchemeKind::Spec, field, 0);
  return m;
}

SchemeModel SchemeModel::affine_line(const FieldPtr& base) {
  SchemeModel m;
  m.d_ = fresh(SchemeKind::AffineLine, base, 1);
  return m;
}

SchemeModel SchemeModel::projective_line(const FieldPtr& base) {
  SchemeModel m;
  m.d_ = fresh(SchemeKind::ProjectiveLine, base, 1);
  return m;
}

SchemeModel SchemeModel::punctured_line(const FieldPtr& base, std::vector<Poly> removed) {
  auto d = fresh(SchemeKind::PuncturedLine, base, 1);
  const FieldRef ff = FieldRef::rational(base);
  for (auto& pi : removed) {
    if (pi.field() != base) throw InputError("removed place over a different field");
    d->removed.push_back(Place::finite(ff, pi.monic()));
  }
  std::sort(d->removed.begin(), d->removed.end());
  d->removed.erase(std::unique(d->removed.begin(), d->removed.end()), d->removed.end());
  d->name = "A1";
  for (const auto& v : d->removed) d->name += " - (" + v.to_string() + ")";
  d->name += "/" + base->name();
  SchemeModel m;
  m.d_ = d;
  return m;
}

SchemeModel SchemeModel::disjoint_union(std::vector<SchemeModel> parts) {
  if (parts.empty()) throw InputError("empty disjoint union");
  std::vector<SchemeModel> flat;
  for (auto& p : parts) {
    if (!p.d_) throw InputError("uninitialized scheme in a union");
    if (p.kind() == SchemeKind::DisjointUnion)
      flat.insert(flat.end(), p.parts().begin(), p.parts().end());
    else
      flat.push_back(p);
  }
  auto d = fresh(SchemeKind::DisjointUnion, flat.front().base(), 0);
  std::string name;
  for (const auto& p : flat) {
    if (p.base()->characteristic() != d->base->characteristic())
      throw InputError("disjoint union of schemes of different characteristic");
    d->dim = std::max(d->dim, p.dimension());
    name += (name.empty() ? "" : " + ") + p.name();
  }
  d->name = name;
  d->parts = std::move(flat);
  SchemeModel m;
  m.d_ = d;
  return m;
}

namespace {

std::shared_ptr<SchemeModel::Data> plane(SchemeKind kind, const FieldPtr& base, std::vector<CurveDecl> curves,
                                         std::vector<DeclaredFiber> fibers) {
  auto d = fresh(kind, base, 2);
  std::set<std::string> ids;
  for (const auto& c : curves) {
    if (c.id.empty() || !ids.insert(c.id).second) throw InputError("duplicate or empty curve id '" + c.id + "'");
    if (c.at_infinity) throw InputError("curve '" + c.id + "': the line at infinity is implicit");
    if (c.x.field() != base || c.y.field() != base) throw InputError("curve '" + c.id + "' over a different field");
    validate_curve(c);
  }
  for (const auto& c : curves)
    for (const auto& o : curves)
      if (&c != &o && o.equation.eval(c.x, c.y).is_zero())
        throw InputError("curves '" + c.id + "' and '" + o.id + "' coincide");
  if (kind == SchemeKind::ProjectivePlane) {
    if (ids.count("inf")) throw InputError("curve id 'inf' is reserved for the line at infinity");
    CurveDecl inf;
    inf.id = "inf";
    inf.description = "z = 0";
    inf.equation = BiPoly::constant(base, 0);
    inf.x = RationalFunction::variable(base);
    inf.y = RationalFunction::constant(base, 0);
    inf.at_infinity = true;
    curves.push_back(std::move(inf));
  }
  for (const auto& f : fibers) {
    auto it = std::find_if(curves.begin(), curves.end(), [&](const CurveDecl& c) { return c.id == f.curve; });
    if (it == curves.end() || it->at_infinity) throw InputError("fiber declared for unknown curve '" + f.curve + "'");
    if (f.point.chart != ClosedPoint::Chart::Affine || f.point.kappa != base)
      throw InputError("fibers may only be declared over base-rational affine points");
    auto declared = f.places;
    std::sort(declared.begin(), declared.end());
    if (declared != rational_fiber(*it, f.point))
      throw InputError("curve '" + f.curve + "': declared fiber over " + f.point.to_string() +
                       " does not match the parametrization");
  }
  d->curves = std::move(curves);
  d->fibers = std::move(fibers);
  return d;
}

}  // namespace

SchemeModel SchemeModel::affine_plane(const FieldPtr& base, std::vector<CurveDecl> curves,
                                      std::vector<DeclaredFiber> fibers) {
  SchemeModel m;
  m.d_ = plane(SchemeKind::AffinePlane, base, std::move(curves), std::move(fibers));
  return m;
}

SchemeModel SchemeModel::projective_plane(const FieldPtr& base, std::vector<CurveDecl> curves,
                                          std::vector<DeclaredFiber> fibers) {
  SchemeModel m;
  m.d_ = plane(SchemeKind::ProjectivePlane, base, std::move(curves), std::move(fibers));
  return m;
}

SchemeKind SchemeModel::kind() const { return d_->kind; }
const std::string& SchemeModel::name() const { return d_->name; }
const FieldPtr& SchemeModel::base() const { return d_->base; }
int SchemeModel::dimension() const { return d_->dim; }

bool SchemeModel::is_curve() const {
  return d_->kind == SchemeKind::AffineLine || d_->kind == SchemeKind::ProjectiveLine ||
         d_->kind == SchemeKind::PuncturedLine;
}

bool SchemeModel::is_surface() const {
  return d_->kind == SchemeKind::AffinePlane || d_->kind == SchemeKind::ProjectivePlane;
}

const std::vector<SchemeModel>& SchemeModel::parts() const { return d_->parts; }

const SchemeModel& SchemeModel::component(const PointRef& x) const {
  if (d_->kind != SchemeKind::DisjointUnion) {
    if (x.part != 0) throw InputError("point refers to part " + std::to_string(x.part) + " of a connected model");
    return *this;
  }
  if (x.part >= d_->parts.size()) throw InputError("point refers to a missing part " + std::to_string(x.part));
  return d_->parts[x.part];
}

FieldRef SchemeModel::function_field() const {
  if (d_->kind == SchemeKind::Spec) return FieldRef::finite(d_->base);
  if (is_curve()) return FieldRef::rational(d_->base);
  throw DomainError("function field of " + d_->name + " is outside the field universe");
}

const std::vector<Place>& SchemeModel::removed() const { return d_->removed; }

bool SchemeModel::contains(const Place& v) const {
  if (!is_curve() || v.field() != function_field()) return false;
  switch (d_->kind) {
    case SchemeKind::ProjectiveLine:
      return true;
    case SchemeKind::AffineLine:
      return !v.is_infinite();
    default:
      return !v.is_infinite() && !std::binary_search(d_->removed.begin(), d_->removed.end(), v);
  }
}

bool SchemeModel::contains(const ClosedPoint& y) const {
  if (!y.kappa || y.kappa->characteristic() != d_->base->characteristic()) return false;
  if (y.kappa->degree() % d_->base->degree() != 0) return false;
  if (d_->kind == SchemeKind::ProjectivePlane) return true;
  return d_->kind == SchemeKind::AffinePlane && y.chart == ClosedPoint::Chart::Affine;
}

const std::vector<CurveDecl>& SchemeModel::curves() const { return d_->curves; }

const CurveDecl& SchemeModel::curve(const std::string& id) const {
  for (const auto& c : d_->curves)
    if (c.id == id) return c;
  throw InputError("unknown curve '" + id + "' on " + d_->name);
}

FieldRef SchemeModel::residue_field(const PointRef& x) const {
  const SchemeModel& m = component(x);
  switch (x.kind) {
    case PointRef::Kind::Generic:
      return m.function_field();
    case PointRef::Kind::Place:
      if (!m.contains(x.place)) throw InputError("place " + x.place.to_string() + " is not a point of " + m.name());
      return x.place.residue();
    case PointRef::Kind::Curve:
      return FieldRef::rational(m.base(), m.curve(x.curve).at_infinity ? "u" : "t");
    case PointRef::Kind::Closed:
      if (!m.contains(x.closed)) throw InputError("closed point " + x.closed.to_string() + " is not on " + m.name());
      return FieldRef::finite(x.closed.kappa);
  }
  throw InputError("unresolved point");
}

namespace {

constexpr std::uint64_t kClosedPointBudget = 1u << 22;

std::vector<ClosedPoint> closed_points(const FieldPtr& base, int D, bool projective) {
  std::vector<ClosedPoint> out;
  const std::uint32_t q = base->order();
  for (int d = 1; d <= D; ++d) {
    const FieldPtr K = make_field(base->characteristic(), base->degree() * static_cast<std::uint32_t>(d));
    const std::uint64_t n = K->order();
    if (n * n > kClosedPointBudget) throw DomainError("closed-point window of degree " + std::to_string(d) + " too large");
    for (Code a = 0; a < n; ++a)
      for (Code b = 0; b < n; ++b)
        if (orbit_size(K, q, a, b) == static_cast<std::size_t>(d) && is_orbit_min(K, q, a, b))
          out.push_back({ClosedPoint::Chart::Affine, K, a, b});
    if (!projective) continue;
    for (Code u = 0; u < n; ++u)
      if (orbit_size(K, q, u, 0) == static_cast<std::size_t>(d) && is_orbit_min(K, q, u, 0))
        out.push_back({ClosedPoint::Chart::Infinity, K, u, 0});
    if (d == 1) out.push_back({ClosedPoint::Chart::InfinityY, K, 0, 0});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<PointRef> SchemeModel::points(int p, int degree_bound) const {
  if (p < 0 || p > d_->dim) throw InputError("codimension " + std::to_string(p) + " out of range for " + d_->name);
  if (degree_bound < 1) throw InputError("degree bound must be at least 1");
  std::vector<PointRef> out;
  if (d_->kind == SchemeKind::DisjointUnion) {
    for (std::size_t i = 0; i < d_->parts.size(); ++i) {
      const auto& part = d_->parts[i];
      if (p > part.dimension()) continue;
      for (auto x : part.points(p, degree_bound)) {
        x.part = i;
        out.push_back(std::move(x));
      }
    }
    return out;
  }
  if (p == 0) return {PointRef::generic()};
  if (is_curve()) {
    for (const auto& v : places_up_to(function_field(), degree_bound, d_->kind == SchemeKind::ProjectiveLine))
      if (contains(v)) out.push_back(PointRef::at_place(v));
    return out;
  }
  if (p == 1) {
    for (const auto& c : d_->curves) out.push_back(PointRef::on_curve(c.id));
    return out;
  }
  for (const auto& y : closed_points(d_->base, degree_bound, d_->kind == SchemeKind::ProjectivePlane))
    out.push_back(PointRef::at_closed(y));
  return out;
}

std::vector<Specialization> SchemeModel::specializations(const PointRef& x, int degree_bound) const {
  if (d_->kind == SchemeKind::DisjointUnion) {
    PointRef local = x;
    local.part = 0;
    auto out = component(x).specializations(local, degree_bound);
    for (auto& s : out) s.point.part = x.part;
    return out;
  }
  component(x);
  std::vector<Specialization> out;
  if (x.kind == PointRef::Kind::Generic) {
    if (d_->kind == SchemeKind::Spec) return out;
    if (is_curve()) {
      for (const auto& y : points(1, degree_bound))
        out.push_back({y, {FiberPoint{y.place, identity_map(y.place.residue_field())}}});
      return out;
    }
    for (const auto& c : d_->curves) out.push_back({PointRef::on_curve(c.id), {}});
    return out;
  }
  if (x.kind != PointRef::Kind::Curve) return out;
  const CurveDecl& c = curve(x.curve);
  const FieldRef param = FieldRef::rational(d_->base, c.at_infinity ? "u" : "t");
  std::map<ClosedPoint, std::vector<FiberPoint>> fibers;
  for (const auto& t : places_up_to(param, degree_bound, true)) {
    auto [y, phi] = curve_image(c, t);
    if (contains(y)) fibers[y].push_back({t, phi});
  }
  for (auto& [y, f] : fibers) out.push_back({PointRef::at_closed(y), std::move(f)});
  return out;
}

// ---------------------------------------------------------------- tables

std::vector<CurveDecl> standard_curve_table(const FieldPtr& base) {
  const auto X = BiPoly::x(base), Y = BiPoly::y(base), one = BiPoly::constant(base, 1);
  const auto t = RationalFunction::variable(base);
  const auto c0 = RationalFunction::constant(base, 0), c1 = RationalFunction::constant(base, 1);
  return {
      {"x=0", "x = 0", X, c0, t, false},
      {"y=0", "y = 0", Y, t, c0, false},
      {"y=x", "y = x", Y - X, t, t, false},
      {"y=x^2", "y = x^2", Y - X * X, t, t * t, false},
      {"x+y=1", "x + y = 1", X + Y - one, t, c1 - t, false},
      {"xy=1", "x y = 1", X * Y - one, t, t.inverse(), false},
  };
}

namespace {

std::string upper(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

}  // namespace

SchemeModel builtin_scheme(const std::string& name, const FieldPtr& base) {
  const std::string n = upper(name);
  if (n == "SPEC") return SchemeModel::spec(base);
  if (n == "A1" || n == "AFFINE_LINE") return SchemeModel::affine_line(base);
  if (n == "P1" || n == "PROJ_LINE") return SchemeModel::projective_line(base);
  if (n == "A2" || n == "AFFINE_PLANE") return SchemeModel::affine_plane(base, standard_curve_table(base));
  if (n == "P2" || n == "PROJ_PLANE") return SchemeModel::projective_plane(base, standard_curve_table(base));
  throw InputError("unknown scheme '" + name + "' (expected SPEC, A1, P1, A2, P2 or a JSON file)");
}

// ---------------------------------------------------------------- JSON

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError((path.empty() ? std::string("/") : path) + ": " + what);
}

const json& member(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing '" + key + "'");
  return *it;
}

std::string text_of(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

template <class F>
auto guarded(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    fail(path, e.what());
  } catch (const DomainError& e) {
    fail(path, e.what());
  }
}

FieldPtr base_of(const json& j, const std::string& path) {
  const json& b = member(j, "base", path);
  const json& p = member(b, "p", path + "/base");
  const json& m = b.contains("m") ? b["m"] : json(1);
  if (!p.is_number_integer() || !m.is_number_integer() || p.get<std::int64_t>() < 1 || m.get<std::int64_t>() < 1)
    fail(path + "/base", "p and m must be positive integers");
  return guarded(path + "/base", [&] {
    return make_field(p.get<std::uint64_t>(), static_cast<std::uint32_t>(m.get<std::uint64_t>()));
  });
}

std::vector<CurveDecl> curves_of(const json& j, const FieldPtr& base, const std::string& path,
                                 std::vector<DeclaredFiber>& fibers) {
  if (!j.contains("curves")) return standard_curve_table(base);
  const json& arr = j["curves"];
  if (!arr.is_array()) fail(path + "/curves", "expected an array");
  std::vector<CurveDecl> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string cp = path + "/curves/" + std::to_string(i);
    const json& c = arr[i];
    if (c.is_string()) {
      const std::string id = c.get<std::string>();
      auto table = standard_curve_table(base);
      auto it = std::find_if(table.begin(), table.end(), [&](const CurveDecl& d) { return d.id == id; });
      if (it == table.end()) fail(cp, "unknown standard curve '" + id + "'");
      out.push_back(*it);
      continue;
    }
    CurveDecl d;
    d.id = text_of(member(c, "id", cp), cp + "/id");
    const std::string eq = text_of(member(c, "description", cp), cp + "/description");
    d.description = eq;
    d.equation = guarded(cp + "/description", [&] { return parse_bipoly(eq, base); });
    const json& par = member(c, "parametrization", cp);
    const std::string xs = text_of(member(par, "x", cp + "/parametrization"), cp + "/parametrization/x");
    const std::string ys = text_of(member(par, "y", cp + "/parametrization"), cp + "/parametrization/y");
    d.x = guarded(cp + "/parametrization/x", [&] { return parse_rational(xs, base, "t"); });
    d.y = guarded(cp + "/parametrization/y", [&] { return parse_rational(ys, base, "t"); });
    if (c.contains("fibers")) {
      const json& fs = c["fibers"];
      if (!fs.is_array()) fail(cp + "/fibers", "expected an array");
      const FieldRef param = FieldRef::rational(base);
      for (std::size_t k = 0; k < fs.size(); ++k) {
        const std::string fp = cp + "/fibers/" + std::to_string(k);
        const json& pt = member(fs[k], "point", fp);
        if (!pt.is_array() || pt.size() != 2) fail(fp + "/point", "expected [x, y]");
        DeclaredFiber f;
        f.curve = d.id;
        f.point.kappa = base;
        f.point.a = guarded(fp + "/point/0", [&] { return parse_constant(text_of(pt[0], fp + "/point/0"), base); });
        f.point.b = guarded(fp + "/point/1", [&] { return parse_constant(text_of(pt[1], fp + "/point/1"), base); });
        const json& pl = member(fs[k], "places", fp);
        if (!pl.is_array()) fail(fp + "/places", "expected an array");
        for (std::size_t r = 0; r < pl.size(); ++r) {
          const std::string pp = fp + "/places/" + std::to_string(r);
          const std::string s = text_of(pl[r], pp);
          f.places.push_back(guarded(pp, [&] {
            if (s == "inf" || s == "infinity") return Place::infinite(param);
            return Place::finite(param, parse_rational(s, base, "t").num());
          }));
        }
        fibers.push_back(std::move(f));
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

SchemeModel scheme_of(const json& j, const std::string& path) {
  const std::string kind = upper(text_of(member(j, "kind", path), path + "/kind"));
  if (kind == "DISJOINT_UNION" || kind == "UNION") {
    const json& parts = member(j, "parts", path);
    if (!parts.is_array()) fail(path + "/parts", "expected an array");
    std::vector<SchemeModel> ms;
    for (std::size_t i = 0; i < parts.size(); ++i) ms.push_back(scheme_of(parts[i], path + "/parts/" + std::to_string(i)));
    return guarded(path, [&] { return SchemeModel::disjoint_union(std::move(ms)); });
  }
  const FieldPtr base = base_of(j, path);
  if (kind == "PUNCTURED_LINE") {
    const json& rem = member(j, "removed", path);
    if (!rem.is_array()) fail(path + "/removed", "expected an array");
    std::vector<Poly> polys;
    for (std::size_t i = 0; i < rem.size(); ++i) {
      const std::string rp = path + "/removed/" + std::to_string(i);
      const std::string s = text_of(rem[i], rp);
      polys.push_back(guarded(rp, [&] {
        const auto f = parse_rational(s, base, "t");
        if (f.den().degree() != 0 || f.num().degree() < 1 || !is_irreducible(f.num()))
          throw InputError("removed place must be an irreducible polynomial");
        return f.num();
      }));
    }
    return guarded(path, [&] { return SchemeModel::punctured_line(base, std::move(polys)); });
  }
  if (kind == "AFFINE_PLANE" || kind == "A2" || kind == "PROJ_PLANE" || kind == "P2") {
    std::vector<DeclaredFiber> fibers;
    auto curves = curves_of(j, base, path, fibers);
    return guarded(path, [&] {
      return kind == "AFFINE_PLANE" || kind == "A2"
                 ? SchemeModel::affine_plane(base, std::move(curves), std::move(fibers))
                 : SchemeModel::projective_plane(base, std::move(curves), std::move(fibers));
    });
  }
  return guarded(path + "/kind", [&] { return builtin_scheme(kind, base); });
}

}  // namespace

SchemeModel load_scheme(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("scheme description: ") + e.what(), e.byte);
  }
  return scheme_of(j, "");
}

}  // namespace cyclemod
