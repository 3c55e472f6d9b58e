#include "cyclemod/milnor/milnor.hpp"

#include "cyclemod/errors.hpp"

#include <algorithm>
#include <set>

namespace cyclemod {

namespace {

void require_rational(const FieldRef& f, const char* what) {
  if (!f.is_rational()) throw DomainError(std::string(what) + " needs a rational function field, got " + f.name());
}

// (-1)^{va vb} b^{va} / a^{vb} at a place, in logs.
std::uint64_t tame_log(const Place& v, const FactoredUnit& a, const FactoredUnit& b) {
  const auto& k = v.residue_field();
  const std::uint64_t order = k->order() - 1;
  const Integer va = v.valuation(a);
  const Integer vb = v.valuation(b);
  std::uint64_t acc = 0;
  if ((va * vb) % 2 != 0) acc = k->log_minus_one();
  acc = (acc + mul_mod(mod_u64(va, order), v.unit_part_log(b), order)) % order;
  acc = (acc + order - mul_mod(mod_u64(vb, order), v.unit_part_log(a), order)) % order;
  return acc;
}

}  // namespace

KElement::Coords tame_coordinates(const FieldRef& f, const FactoredUnit& a, const FactoredUnit& b) {
  std::set<Poly> support;
  for (const auto& [p, e] : a.factors()) support.insert(p);
  for (const auto& [p, e] : b.factors()) support.insert(p);
  KElement::Coords out;
  for (const auto& pi : support) {
    const std::uint64_t l = tame_log(Place::finite(f, pi), a, b);
    if (l != 0) out.emplace(pi, l);
  }
  return out;
}

KElement unit_symbol(const FieldRef& f, const std::vector<FactoredUnit>& entries) {
  require_rational(f, "unit_symbol");
  const int n = static_cast<int>(entries.size());
  for (const auto& u : entries) {
    if (u.field() != f.base) throw DomainError("symbol entry over the wrong field");
  }
  if (n == 0) return KElement::integer(f, 1);
  if (n == 1) return KElement::unit(f, entries[0]);
  if (n == 2) return KElement::tame(f, tame_coordinates(f, entries[0], entries[1]));
  return KElement::zero(f, n);
}

KElement finite_symbol(const FieldRef& f, const std::vector<Code>& entries) {
  if (!f.is_finite()) throw DomainError("finite_symbol over " + f.name());
  for (const Code c : entries) {
    if (c == 0) throw InputError("symbol entry is zero");
    if (c >= f.base->order()) throw InputError("symbol entry outside " + f.name());
  }
  const int n = static_cast<int>(entries.size());
  if (n == 0) return KElement::integer(f, 1);
  if (n == 1) return KElement::finite_unit(f, f.base->log(entries[0]));
  return KElement::zero(f, n);
}

KElement symbol(const FieldRef& f, const std::vector<RationalFunction>& entries) {
  for (const auto& e : entries) {
    if (e.is_zero()) throw InputError("symbol entry is zero");
    if (e.field() != f.base) throw DomainError("symbol entry over the wrong field");
  }
  if (f.is_finite()) {
    std::vector<Code> cs;
    for (const auto& e : entries) {
      if (!e.is_constant()) throw InputError("non-constant entry in a symbol over " + f.name());
      cs.push_back(e.constant_value());
    }
    return finite_symbol(f, cs);
  }
  std::vector<FactoredUnit> us;
  for (const auto& e : entries) us.push_back(unit_factor(e));
  return unit_symbol(f, us);
}

KElement gamma(const KElement& x, const KElement& y) {
  if (!(x.field() == y.field())) throw DomainError("gamma over different fields");
  const FieldRef& f = x.field();
  const int n = x.degree() + y.degree();
  if (x.degree() < 0 || y.degree() < 0) return KElement::zero(f, n);
  if (x.degree() == 0) return k_scale(y, x.k0());
  if (y.degree() == 0) return k_scale(x, y.k0());
  if (f.is_rational() && x.degree() == 1 && y.degree() == 1) {
    return KElement::tame(f, tame_coordinates(f, x.unit(), y.unit()));
  }
  return KElement::zero(f, n);
}

std::vector<std::pair<Poly, Poly>> k2_generators(const KElement& x) {
  require_rational(x.field(), "k2_generators");
  if (x.degree() != 2) throw DomainError("k2_generators needs a degree-2 class");
  const FieldRef& f = x.field();
  KElement rest = x;
  std::vector<std::pair<Poly, Poly>> out;
  while (!rest.coords().empty()) {
    const auto& [pi, l] = *rest.coords().rbegin();
    const Place v = Place::finite(f, pi);
    const Poly u = v.lift(v.residue_field()->exp(l));
    out.emplace_back(pi, u);
    const KElement piece = KElement::tame(f, tame_coordinates(f, unit_factor(RationalFunction(pi)),
                                                              unit_factor(RationalFunction(u))));
    rest = k_sub(rest, piece);
  }
  return out;
}

KElement residue(const Place& v, const KElement& x) {
  if (!(v.field() == x.field())) throw DomainError("residue: place and element over different fields");
  const FieldRef kappa = v.residue();
  const int n = x.degree();
  if (n == 1) return KElement::integer(kappa, v.valuation(x.unit()));
  if (n != 2) return KElement::zero(kappa, n - 1);
  if (!v.is_infinite()) {
    auto it = x.coords().find(v.pi());
    return KElement::finite_unit(kappa, it == x.coords().end() ? 0 : it->second);
  }
  // At infinity: expand into {pi, u} with u polynomial and apply the tame
  // formula there directly (pi monic, so its unit part is 1).
  const auto& k = v.residue_field();
  const std::uint64_t order = k->order() - 1;
  std::uint64_t acc = 0;
  for (const auto& [pi, u] : k2_generators(x)) {
    const auto dpi = static_cast<std::uint64_t>(pi.degree());
    const auto du = static_cast<std::uint64_t>(u.degree());
    if ((dpi * du) % 2 == 1) acc = (acc + k->log_minus_one()) % order;
    acc = (acc + order - mul_mod(dpi % order, k->log(u.lead()), order)) % order;
  }
  return KElement::finite_unit(kappa, acc);
}

KElement specialize(const Place& v, const KElement& x) {
  const RationalFunction minus_pi = -v.uniformizer();
  return residue(v, gamma(symbol(x.field(), {minus_pi}), x));
}

KElement res_field(const FieldMap& phi, const KElement& x) {
  if (!(x.field() == phi.src())) throw DomainError("res_field: element not over " + phi.src().name());
  const FieldRef& dst = phi.dst();
  const int n = x.degree();
  if (n < 0) return KElement::zero(dst, n);
  if (n == 0) return KElement::integer(dst, x.k0());
  if (n == 1) {
    if (x.field().is_finite()) {
      if (dst.is_finite()) {
        return KElement::finite_unit(dst, mul_mod(x.log(), phi.constant_map().generator_log(), dst.base->order() - 1));
      }
      return KElement::unit(dst, FactoredUnit(dst.base, phi.apply(x.field().base->exp(x.log()))));
    }
    return KElement::unit(dst, phi.apply(x.unit()));
  }
  if (n == 2 && x.field().is_rational()) {
    // Pushing symbols through phi would factor the images of every
    // generator; the residues only involve places over the support:
    // d_w(phi x) = e * iota(d_v x).
    KElement::Coords acc;
    for (const Place& v : residue_support(x)) {
      const KElement r = residue(v, x);
      if (r.is_zero()) continue;
      for (const PlaceOver& po : places_over(phi, v)) {
        if (po.above.is_infinite()) continue;
        const std::uint64_t order = po.above.residue_field()->order() - 1;
        const auto e = static_cast<std::uint64_t>(po.e % order);
        auto& slot = acc[po.above.pi()];
        slot = (slot + mul_mod(mul_mod(r.log(), po.iota.generator_log(), order), e, order)) % order;
      }
    }
    return KElement::tame(dst, std::move(acc));
  }
  return KElement::zero(dst, n);
}

KElement cor_field(const FieldMap& phi, const KElement& x) {
  if (!(x.field() == phi.dst())) throw DomainError("cor_field: element not over " + phi.dst().name());
  if (!phi.is_finite()) throw DomainError("cor_field along a transcendental extension " + phi.to_string());
  const FieldRef& src = phi.src();
  const int n = x.degree();
  if (n < 0) return KElement::zero(src, n);
  if (n == 0) return KElement::integer(src, x.k0() * phi.degree());
  if (src.is_finite()) {
    if (n != 1) return KElement::zero(src, n);
    const Code y = norm_along(phi.constant_map(), x.field().base->exp(x.log()));
    return KElement::finite_unit(src, src.base->log(y));
  }
  if (!phi.is_constant_extension()) {
    throw DomainError("cor_field in degree >= 1 needs a constant extension, got " + phi.to_string());
  }
  if (n == 1) {
    const FactoredUnit& u = x.unit();
    std::vector<FactoredUnit::Factor> fs;
    for (const auto& [pw, e] : u.factors()) {
      const PlaceOver po = lying_under(phi, Place::finite(phi.dst(), pw));
      const Integer k = po.above.residue_field()->degree() / po.below.residue_field()->degree();
      fs.emplace_back(po.below.pi(), e * k);
    }
    return KElement::unit(src, FactoredUnit(src.base, norm_along(phi.constant_map(), u.constant()), fs));
  }
  if (n == 2) {
    KElement::Coords acc;
    for (const auto& [pw, l] : x.coords()) {
      const PlaceOver po = lying_under(phi, Place::finite(phi.dst(), pw));
      const auto& kv = po.below.residue_field();
      const Code y = norm_along(po.iota, po.above.residue_field()->exp(l));
      const std::uint64_t order = kv->order() - 1;
      acc[po.below.pi()] = (acc[po.below.pi()] + kv->log(y)) % order;
    }
    return KElement::tame(src, std::move(acc));
  }
  return KElement::zero(src, n);
}

std::vector<Place> residue_support(const KElement& x) {
  require_rational(x.field(), "residue_support");
  std::vector<Place> out;
  if (x.degree() == 1) {
    for (const auto& [p, e] : x.unit().factors()) out.push_back(Place::finite(x.field(), p));
  } else if (x.degree() == 2) {
    for (const auto& [p, l] : x.coords()) out.push_back(Place::finite(x.field(), p));
  }
  out.push_back(Place::infinite(x.field()));
  std::sort(out.begin(), out.end());
  return out;
}

KElement reciprocity_sum(const KElement& x) {
  const FieldRef base = FieldRef::finite(x.field().base);
  KElement acc = KElement::zero(base, x.degree() - 1);
  for (const auto& v : residue_support(x)) {
    acc = k_add(acc, cor_field(FieldMap::finite(v.constants()), residue(v, x)));
  }
  return acc;
}

}  // namespace cyclemod
