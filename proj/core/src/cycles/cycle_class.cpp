#include "cyclemod/cycles/cycle_class.hpp"

#include "cyclemod/errors.hpp"

namespace cyclemod {

bool is_zero_value(const PremoduleInstance& inst, const KElement& x) {
  return inst.equal(x, inst.zero(x.field(), inst.degree(x)));
}

CycleClass make_class(const PremoduleInstance& inst, const SchemeModel& X, int p, int n) {
  if (p < 0 || p > X.dimension()) throw InputError("codimension " + std::to_string(p) + " out of range");
  CycleClass c;
  c.scheme = X;
  c.instance = inst.name;
  c.p = p;
  c.n = n;
  return c;
}

void add_coordinate(const PremoduleInstance& inst, CycleClass& c, const PointRef& x, const KElement& rho) {
  if (x.codim != c.p)
    throw InputError("point " + x.to_string() + " has codimension " + std::to_string(x.codim) + ", class has " +
                     std::to_string(c.p));
  const SchemeModel& part = c.scheme.component(x);
  if (x.kind == PointRef::Kind::Generic && part.is_surface())
    throw InputError("generic coordinates of a plane are given as symbol terms");
  const FieldRef kx = c.scheme.residue_field(x);
  if (!(rho.field() == kx))
    throw InputError("coordinate at " + x.to_string() + " lives over " + rho.field().name() + ", expected " + kx.name());
  if (inst.degree(rho) != c.n - c.p)
    throw InputError("coordinate at " + x.to_string() + " has degree " + std::to_string(inst.degree(rho)) +
                     ", expected " + std::to_string(c.n - c.p));
  auto it = c.coords.find(x);
  KElement v = it == c.coords.end() ? rho : inst.add(it->second, rho);
  if (is_zero_value(inst, v)) {
    if (it != c.coords.end()) c.coords.erase(it);
    return;
  }
  if (it == c.coords.end())
    c.coords.emplace(x, std::move(v));
  else
    it->second = std::move(v);
}

void add_surface_term(const PremoduleInstance& inst, CycleClass& c, SurfaceTerm term) {
  if (c.p != 0) throw InputError("symbol terms live in codimension 0");
  const SchemeModel& part = c.scheme.component(PointRef::generic(term.part));
  if (!part.is_surface()) throw InputError("symbol terms need a plane model");
  if (!(term.m.field() == FieldRef::finite(part.base()))) throw InputError("symbol term coefficient must be over the base");
  const int k = static_cast<int>(term.units.size());
  if (k + inst.degree(term.m) != c.n) throw InputError("symbol term has the wrong degree");
  for (const auto& u : term.units) {
    if (u.constant == 0 || u.constant >= part.base()->order()) throw InputError("symbol unit with invalid constant");
    for (const auto& [id, e] : u.exponents)
      if (part.curve(id).at_infinity) throw InputError("the line at infinity is not a unit factor");
  }
  if (is_zero_value(inst, term.m)) return;
  c.generic_terms.push_back(std::move(term));
}

CycleClass class_sum(const PremoduleInstance& inst, const CycleClass& a, const CycleClass& b) {
  if (a.p != b.p || a.n != b.n) throw DomainError("adding cycle classes of different bidegree");
  CycleClass out = a;
  for (const auto& [x, v] : b.coords) add_coordinate(inst, out, x, v);
  out.generic_terms.insert(out.generic_terms.end(), b.generic_terms.begin(), b.generic_terms.end());
  return out;
}

CycleClass class_scale(const PremoduleInstance& inst, const CycleClass& a, const Integer& k) {
  CycleClass out = make_class(inst, a.scheme, a.p, a.n);
  for (const auto& [x, v] : a.coords) add_coordinate(inst, out, x, inst.scale(v, k));
  for (auto t : a.generic_terms) {
    t.m = inst.scale(t.m, k);
    if (!is_zero_value(inst, t.m)) out.generic_terms.push_back(std::move(t));
  }
  return out;
}

bool class_equal(const PremoduleInstance& inst, const CycleClass& a, const CycleClass& b) {
  if (a.p != b.p || a.n != b.n || a.coords.size() != b.coords.size()) return false;
  if (a.generic_terms.size() != b.generic_terms.size()) return false;
  for (auto i = a.coords.begin(), j = b.coords.begin(); i != a.coords.end(); ++i, ++j)
    if (!(i->first == j->first) || !inst.equal(i->second, j->second)) return false;
  for (std::size_t i = 0; i < a.generic_terms.size(); ++i) {
    const auto& s = a.generic_terms[i];
    const auto& t = b.generic_terms[i];
    if (s.part != t.part || s.units.size() != t.units.size() || !inst.equal(s.m, t.m)) return false;
    for (std::size_t k = 0; k < s.units.size(); ++k)
      if (s.units[k].constant != t.units[k].constant || s.units[k].exponents != t.units[k].exponents) return false;
  }
  return true;
}

std::string to_string(const SurfaceTerm& t, const FieldPtr& base) {
  std::string s = "{";
  for (std::size_t i = 0; i < t.units.size(); ++i) {
    const auto& u = t.units[i];
    std::string f = u.constant == 1 && !u.exponents.empty() ? "" : base->format(u.constant);
    for (const auto& [id, e] : u.exponents) {
      if (!f.empty()) f += "*";
      f += "(" + id + ")";
      if (e != 1) f += "^" + std::to_string(e);
    }
    s += (i ? ", " : "") + f;
  }
  return s + "}." + t.m.to_string();
}

std::string to_string(const CycleClass& c) {
  std::string s;
  for (const auto& t : c.generic_terms)
    s += (s.empty() ? "" : " + ") + std::string("[generic: ") +
         to_string(t, c.scheme.component(PointRef::generic(t.part)).base()) + "]";
  for (const auto& [x, v] : c.coords) s += (s.empty() ? "" : " + ") + ("[" + x.to_string() + ": " + v.to_string() + "]");
  return s.empty() ? "0" : s;
}

}  // namespace cyclemod
