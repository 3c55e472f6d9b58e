#include "cyclemod/cycles/complex.hpp"

#include "cyclemod/errors.hpp"
#include "cyclemod/premodule/sampling.hpp"

#include <algorithm>
#include <set>

namespace cyclemod {

namespace {

FieldRef curve_field(const SchemeModel& X, const CurveDecl& c) {
  return FieldRef::rational(X.base(), c.at_infinity ? "u" : "t");
}

// Contribution of the place t of the normalization of C: (y, phi_t^* d_t rho).
std::optional<std::pair<ClosedPoint, KElement>> fiber_term(const PremoduleInstance& inst, const SchemeModel& M,
                                                           const CurveDecl& C, const Place& t, const KElement& rho) {
  const KElement r = inst.residue(t, rho);
  if (is_zero_value(inst, r)) return std::nullopt;
  auto [y, phi] = curve_image(C, t);
  if (!M.contains(y)) return std::nullopt;
  return std::pair{y, inst.corestriction(FieldMap::finite(phi), r)};
}

int residue_degree(const SchemeModel& X, const PointRef& y) {
  switch (y.kind) {
    case PointRef::Kind::Place:
      return y.place.degree();
    case PointRef::Kind::Closed:
      return y.closed.degree(X.component(y).base());
    default:
      return 0;
  }
}

}  // namespace

KElement residue_pair(const PremoduleInstance& inst, const SchemeModel& X, const PointRef& x, const PointRef& y,
                      const KElement& rho) {
  const FieldRef ky = X.residue_field(y);
  KElement acc = inst.zero(ky, inst.degree(rho) - 1);
  if (x.part != y.part || y.codim != x.codim + 1) return acc;
  const SchemeModel& M = X.component(x);
  if (!(rho.field() == X.residue_field(x))) throw InputError("coordinate does not live over the residue field of x");
  if (M.is_curve()) {
    if (x.kind == PointRef::Kind::Generic && M.contains(y.place)) return inst.residue(y.place, rho);
    return acc;
  }
  if (!M.is_surface()) return acc;
  if (x.kind == PointRef::Kind::Generic)
    throw DomainError("the generic point of a plane carries symbol terms; use surface_residue");
  const CurveDecl& C = M.curve(x.curve);
  for (const auto& t : residue_support(rho)) {
    auto term = fiber_term(inst, M, C, t, rho);
    if (term && term->first == y.closed) acc = inst.add(acc, term->second);
  }
  return acc;
}

KElement surface_residue(const PremoduleInstance& inst, const SchemeModel& X, const std::vector<SurfaceTerm>& terms,
                         const std::string& curve, int n) {
  const CurveDecl& C = X.curve(curve);
  const FieldPtr& base = X.base();
  const FieldRef kc = curve_field(X, C);
  const FieldMap constants = FieldMap::constants(identity_map(base), kc.var);
  const RationalFunction minus_one = RationalFunction::constant(base, base->neg(1));
  KElement acc = inst.zero(kc, n - 1);
  for (const auto& term : terms) {
    const std::size_t k = term.units.size();
    if (k == 0) continue;
    if (k > 20) throw DomainError("symbol term too long");
    // u_i = pi^{a_i} w_i with w_i a unit along C; wbar_i its image in kappa_C.
    std::vector<long> a(k, 0);
    std::vector<RationalFunction> wbar;
    for (std::size_t i = 0; i < k; ++i) {
      const SurfaceUnit& u = term.units[i];
      RationalFunction w = RationalFunction::constant(base, u.constant);
      for (const auto& [id, e] : u.exponents) {
        const CurveDecl& D = X.curve(id);
        if (C.at_infinity) {
          a[i] -= e * D.equation.degree();
          w = w * RationalFunction(D.equation.top_at_infinity()).pow(e);
        } else if (id == C.id) {
          a[i] += e;
        } else {
          w = w * D.equation.eval(C.x, C.y).pow(e);
        }
      }
      wbar.push_back(std::move(w));
    }
    const KElement resm = inst.restriction(constants, term.m);
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      Integer coeff = 1;
      long inversions = 0;
      long seen = 0;
      std::vector<RationalFunction> entries;
      std::vector<RationalFunction> rest;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1) {
          coeff *= a[i];
          inversions += static_cast<long>(i) - seen;
          ++seen;
        } else {
          rest.push_back(wbar[i]);
        }
      }
      if (coeff == 0) continue;
      if (inversions % 2 != 0) coeff = -coeff;
      for (long j = 1; j < seen; ++j) entries.push_back(minus_one);
      entries.insert(entries.end(), rest.begin(), rest.end());
      const KElement z = symbol(kc, entries);
      acc = inst.add(acc, inst.scale(inst.multiply(z, resm), coeff));
    }
  }
  return acc;
}

CycleClass differential(const PremoduleInstance& inst, const CycleClass& c) {
  const SchemeModel& X = c.scheme;
  CycleClass out;
  out.scheme = X;
  out.instance = c.instance;
  out.p = c.p + 1;
  out.n = c.n;
  for (const auto& [x, rho] : c.coords) {
    const SchemeModel& M = X.component(x);
    if (M.is_curve() && x.kind == PointRef::Kind::Generic) {
      for (const auto& v : residue_support(rho))
        if (M.contains(v)) add_coordinate(inst, out, PointRef::at_place(v, x.part), inst.residue(v, rho));
    } else if (M.is_surface() && x.kind == PointRef::Kind::Curve) {
      const CurveDecl& C = M.curve(x.curve);
      for (const auto& t : residue_support(rho))
        if (auto term = fiber_term(inst, M, C, t, rho))
          add_coordinate(inst, out, PointRef::at_closed(term->first, x.part), term->second);
    }
  }
  std::map<std::size_t, std::vector<SurfaceTerm>> by_part;
  for (const auto& t : c.generic_terms) by_part[t.part].push_back(t);
  for (const auto& [part, terms] : by_part) {
    const SchemeModel& M = X.component(PointRef::generic(part));
    for (const auto& C : M.curves())
      add_coordinate(inst, out, PointRef::on_curve(C.id, part), surface_residue(inst, M, terms, C.id, c.n));
  }
  return out;
}

namespace {

SurfaceUnit random_surface_unit(const SchemeModel& M, Rng& rng) {
  SurfaceUnit u;
  u.constant = random_unit_code(M.base(), rng);
  std::vector<std::string> ids;
  for (const auto& C : M.curves())
    if (!C.at_infinity) ids.push_back(C.id);
  if (ids.empty() || rng.below(4) == 0) return u;
  const std::size_t k = 1 + rng.below(2);
  for (std::size_t i = 0; i < k; ++i) {
    static const std::vector<long> choices{1, 1, 1, -1, -1, 2, -2};
    const long e = rng.pick(choices);
    u.exponents[rng.pick(ids)] += e;
  }
  for (auto it = u.exponents.begin(); it != u.exponents.end();) it = it->second == 0 ? u.exponents.erase(it) : std::next(it);
  return u;
}

void sample_into(const PremoduleInstance& inst, CycleClass& c, const SchemeModel& M, std::size_t part, Rng& rng) {
  const int p = c.p, n = c.n;
  if (M.kind() == SchemeKind::Spec) {
    add_coordinate(inst, c, PointRef::generic(part), inst.sample(FieldRef::finite(M.base()), n, rng));
    return;
  }
  if (M.is_curve()) {
    const FieldRef ff = M.function_field();
    if (p == 0) {
      add_coordinate(inst, c, PointRef::generic(part), inst.sample(ff, n, rng));
      return;
    }
    const std::size_t k = 1 + rng.below(3);
    for (std::size_t i = 0; i < k; ++i) {
      const Place v = random_place(ff, rng, 2, M.kind() == SchemeKind::ProjectiveLine);
      if (M.contains(v)) add_coordinate(inst, c, PointRef::at_place(v, part), inst.sample(v.residue(), n - 1, rng));
    }
    return;
  }
  if (p == 0) {
    const std::size_t terms = 1 + rng.below(2);
    for (std::size_t j = 0; j < terms; ++j) {
      const int kmin = std::max(0, n - 1);
      const int kmax = std::max(kmin, std::min(n, 3));
      const int k = kmin + static_cast<int>(rng.below(static_cast<std::uint64_t>(kmax - kmin + 1)));
      SurfaceTerm t;
      t.part = part;
      for (int i = 0; i < k; ++i) t.units.push_back(random_surface_unit(M, rng));
      t.m = inst.sample(FieldRef::finite(M.base()), n - k, rng);
      if (inst.degree(t.m) == n - k) add_surface_term(inst, c, std::move(t));
    }
    return;
  }
  if (p == 1) {
    const std::size_t k = 1 + rng.below(2);
    for (std::size_t i = 0; i < k; ++i) {
      const CurveDecl& C = rng.pick(M.curves());
      add_coordinate(inst, c, PointRef::on_curve(C.id, part), inst.sample(curve_field(M, C), n - 1, rng));
    }
    return;
  }
  const auto pts = M.points(2, 1);
  const std::size_t k = 1 + rng.below(2);
  for (std::size_t i = 0; i < k; ++i) {
    PointRef y = rng.pick(pts);
    y.part = part;
    add_coordinate(inst, c, y, inst.sample(FieldRef::finite(y.closed.kappa), n - 2, rng));
  }
}

}  // namespace

CycleClass sample_class(const PremoduleInstance& inst, const SchemeModel& X, int p, int n, Rng& rng) {
  CycleClass c = make_class(inst, X, p, n);
  if (X.kind() == SchemeKind::DisjointUnion) {
    for (std::size_t i = 0; i < X.parts().size(); ++i)
      if (p <= X.parts()[i].dimension()) sample_into(inst, c, X.parts()[i], i, rng);
  } else {
    sample_into(inst, c, X, 0, rng);
  }
  return c;
}

FdReport check_fd(const PremoduleInstance& inst, const CycleClass& c, int extra) {
  FdReport report;
  const SchemeModel& X = c.scheme;
  const CycleClass d = differential(inst, c);
  for (const auto& [y, v] : d.coords) {
    report.support.push_back(y.to_string());
    report.support_degree = std::max(report.support_degree, residue_degree(X, y));
  }
  // Degrees of the places that feed d on plane curves.
  int feed = 0;
  for (const auto& [x, rho] : c.coords)
    if (X.component(x).is_surface() && x.kind == PointRef::Kind::Curve)
      for (const auto& t : residue_support(rho)) feed = std::max(feed, t.degree());
  const int top = std::max({report.support_degree, feed, 1}) + extra;

  for (int D = 1; D <= top; ++D) {
    CycleClass scan = make_class(inst, X, std::min(c.p + 1, X.dimension()), c.n);
    scan.p = c.p + 1;
    for (const auto& [x, rho] : c.coords) {
      const SchemeModel& M = X.component(x);
      if (M.is_curve() && x.kind == PointRef::Kind::Generic) {
        for (auto y : M.points(1, D)) {
          y.part = x.part;
          add_coordinate(inst, scan, y, residue_pair(inst, X, x, y, rho));
        }
      } else if (M.is_surface() && x.kind == PointRef::Kind::Curve) {
        for (const auto& s : M.specializations(PointRef::on_curve(x.curve), D)) {
          KElement acc = inst.zero(FieldRef::finite(s.point.closed.kappa), inst.degree(rho) - 1);
          for (const auto& fp : s.fiber)
            acc = inst.add(acc, inst.corestriction(FieldMap::finite(fp.phi), inst.residue(fp.place, rho)));
          PointRef y = s.point;
          y.part = x.part;
          add_coordinate(inst, scan, y, acc);
        }
      }
    }
    // Restrict the support-based result to the window.
    CycleClass window = scan;
    window.coords.clear();
    for (const auto& [y, v] : d.coords)
      if (residue_degree(X, y) <= D) window.coords.emplace(y, v);
    const bool exact_window = D >= std::max(report.support_degree, feed);
    bool ok = true;
    if (exact_window) {
      ok = class_equal(inst, scan, d);
    } else {
      // Below the feeding degree plane fibers may be incomplete; curve windows are still exact.
      bool curves_only = feed == 0;
      ok = !curves_only || class_equal(inst, scan, window);
    }
    if (!ok) {
      report.ok = false;
      report.detail = "window D=" + std::to_string(D) + ": scan gives " + to_string(scan) + ", support gives " +
                      to_string(exact_window ? d : window);
      return report;
    }
  }
  return report;
}

}  // namespace cyclemod
