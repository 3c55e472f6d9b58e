#include "cyclemod/premodule/instance.hpp"

#include "cyclemod/errors.hpp"
#include "cyclemod/premodule/sampling.hpp"

#include <map>

namespace cyclemod {

namespace {

FiniteGroup milnor_finite_group(const FieldRef& f, int n) {
  FiniteGroup g;
  if (n == 0) {
    g.generators.push_back(KElement::integer(f, 1));
    g.orders.push_back(0);
  } else if (n == 1) {
    g.generators.push_back(KElement::finite_unit(f, 1));
    g.orders.push_back(f.base->order() - 1);
  }
  return g;
}

std::vector<Integer> milnor_finite_coordinates(const KElement& x) {
  if (!x.field().is_finite()) throw DomainError("finite coordinates over " + x.field().name());
  if (x.degree() == 0) return {x.k0()};
  if (x.degree() == 1) return {Integer(x.log())};
  return {};
}

FiniteGroup milnor_generic_window(const FieldRef& f, int n, int bound) {
  FiniteGroup g;
  if (n == 0) {
    g.generators.push_back(KElement::integer(f, 1));
    g.orders.push_back(0);
  } else if (n == 1) {
    g.generators.push_back(KElement::unit(f, FactoredUnit(f.base, f.base->generator())));
    g.orders.push_back(f.base->order() - 1);
    for (int d = 1; d <= bound; ++d) {
      for (const auto& pi : monic_irreducibles(f.base, d)) {
        g.generators.push_back(KElement::unit(f, FactoredUnit(f.base, 1, {{pi, 1}})));
        g.orders.push_back(0);
      }
    }
  } else if (n == 2) {
    for (int d = 1; d <= bound; ++d) {
      for (const auto& pi : monic_irreducibles(f.base, d)) {
        g.generators.push_back(KElement::tame(f, {{pi, 1}}));
        g.orders.push_back(residue_unit_order(f.base, pi));
      }
    }
  }
  return g;
}

Integer gcd_int(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

KElement reduce_mod(const KElement& x, const Integer& m) {
  const FieldRef& f = x.field();
  const int n = x.degree();
  if (n < 0) return x;
  if (n == 0) return KElement::integer(f, mod_nonneg(x.k0(), m));
  if (n == 1 && f.is_finite()) {
    const auto g = static_cast<std::uint64_t>(gcd_int(m, f.base->order() - 1));
    return KElement::finite_unit(f, x.log() % g);
  }
  if (n == 1) {
    const auto& u = x.unit();
    const auto g = static_cast<std::uint64_t>(gcd_int(m, f.base->order() - 1));
    const Code c = f.base->exp(f.base->log(u.constant()) % g);
    std::vector<FactoredUnit::Factor> fs;
    for (const auto& [p, e] : u.factors()) fs.emplace_back(p, mod_nonneg(e, m));
    return KElement::unit(f, FactoredUnit(f.base, c, fs));
  }
  if (n == 2 && f.is_rational()) {
    KElement::Coords c;
    for (const auto& [pi, l] : x.coords()) {
      const auto g = static_cast<std::uint64_t>(gcd_int(m, residue_unit_order(f.base, pi)));
      c.emplace(pi, l % g);
    }
    return KElement::tame(f, std::move(c));
  }
  return KElement::zero(f, n);
}

FiniteGroup reduce_group(FiniteGroup g, const Integer& m) {
  for (auto& o : g.orders) o = o == 0 ? m : gcd_int(o, m);
  for (auto& x : g.generators) x = reduce_mod(x, m);
  return g;
}

}  // namespace

PremoduleInstance milnor_instance() {
  PremoduleInstance inst;
  inst.name = "milnor";
  inst.degree = [](const KElement& x) { return x.degree(); };
  inst.zero = [](const FieldRef& f, int n) { return KElement::zero(f, n); };
  inst.add = k_add;
  inst.neg = k_neg;
  inst.scale = k_scale;
  inst.equal = k_eq;
  inst.restriction = res_field;
  inst.corestriction = cor_field;
  inst.multiply = gamma;
  inst.multiply_right = [](const KElement& y, const KElement& x) { return gamma(y, x); };
  inst.residue = residue;
  inst.from_milnor = [](const KElement& x) { return x; };
  inst.sample = [](const FieldRef& f, int n, Rng& rng) { return sample_milnor(f, n, rng); };
  inst.finite_group = milnor_finite_group;
  inst.finite_coordinates = milnor_finite_coordinates;
  inst.generic_window = milnor_generic_window;
  return inst;
}

PremoduleInstance mod_instance(const Integer& m) {
  if (m < 2) throw InputError("mod instance needs m >= 2");
  PremoduleInstance base = milnor_instance();
  PremoduleInstance inst = base;
  inst.name = "mod" + m.str();
  auto r = [m](const KElement& x) { return reduce_mod(x, m); };
  inst.zero = [r](const FieldRef& f, int n) { return r(KElement::zero(f, n)); };
  inst.add = [r](const KElement& a, const KElement& b) { return r(k_add(a, b)); };
  inst.neg = [r](const KElement& a) { return r(k_neg(a)); };
  inst.scale = [r](const KElement& a, const Integer& k) { return r(k_scale(a, k)); };
  inst.equal = [r](const KElement& a, const KElement& b) { return k_eq(r(a), r(b)); };
  inst.restriction = [r](const FieldMap& phi, const KElement& x) { return r(res_field(phi, x)); };
  inst.corestriction = [r](const FieldMap& phi, const KElement& x) { return r(cor_field(phi, x)); };
  inst.multiply = [r](const KElement& x, const KElement& y) { return r(gamma(x, y)); };
  inst.multiply_right = [r](const KElement& y, const KElement& x) { return r(gamma(y, x)); };
  inst.residue = [r](const Place& v, const KElement& x) { return r(residue(v, x)); };
  inst.from_milnor = r;
  inst.sample = [r](const FieldRef& f, int n, Rng& rng) { return r(sample_milnor(f, n, rng)); };
  inst.finite_group = [m](const FieldRef& f, int n) { return reduce_group(milnor_finite_group(f, n), m); };
  inst.finite_coordinates = [r](const KElement& x) { return milnor_finite_coordinates(r(x)); };
  inst.generic_window = [m](const FieldRef& f, int n, int bound) {
    return reduce_group(milnor_generic_window(f, n, bound), m);
  };
  return inst;
}

PremoduleInstance twist_instance(const PremoduleInstance& inner, int r) {
  PremoduleInstance inst = inner;
  inst.name = "twist(" + inner.name + "," + std::to_string(r) + ")";
  inst.shift = inner.shift + r;
  inst.degree = [d = inner.degree, r](const KElement& x) { return d(x) - r; };
  inst.zero = [z = inner.zero, r](const FieldRef& f, int n) { return z(f, n + r); };
  inst.sample = [s = inner.sample, r](const FieldRef& f, int n, Rng& rng) { return s(f, n + r, rng); };
  inst.finite_group = [g = inner.finite_group, r](const FieldRef& f, int n) { return g(f, n + r); };
  inst.generic_window = [g = inner.generic_window, r](const FieldRef& f, int n, int bound) {
    return g(f, n + r, bound);
  };
  return inst;
}

const std::vector<std::string>& mutant_names() {
  static const std::vector<std::string> names{"r3e-sign", "r3a-ramification", "d4-slot", "r1c-conjugate",
                                              "k1-unnormalized"};
  return names;
}

namespace {

// Restriction of a unit along a substitution map, with every factor of
// the pulled-back irreducibles counted once.
FactoredUnit restrict_dropping_multiplicity(const FieldMap& phi, const FactoredUnit& u) {
  FactoredUnit out(phi.dst().base, phi.apply(u.constant()));
  for (const auto& [p, e] : u.factors()) {
    const FactoredUnit img = unit_factor(phi.apply(RationalFunction(p)));
    std::vector<FactoredUnit::Factor> fs;
    for (const auto& [rho, k] : img.factors()) fs.emplace_back(rho, k > 0 ? e : Integer(-e));
    out = out * FactoredUnit(phi.dst().base, phi.dst().base->pow(img.constant(), e), fs);
  }
  return out;
}

// Restriction of a unit along a constant extension, leaving out the last
// of the places over each factor.
FactoredUnit restrict_missing_conjugate(const FieldMap& phi, const FactoredUnit& u) {
  FactoredUnit out(phi.dst().base, phi.apply(u.constant()));
  for (const auto& [p, e] : u.factors()) {
    const auto over = places_over(phi, Place::finite(phi.src(), p));
    std::vector<FactoredUnit::Factor> fs;
    for (std::size_t i = 0; i + 1 < over.size(); ++i) fs.emplace_back(over[i].above.pi(), e);
    if (over.size() == 1) fs.emplace_back(over[0].above.pi(), e);
    out = out * FactoredUnit(phi.dst().base, 1, fs);
  }
  return out;
}

// K_2 restriction assembled from residues, as res_field does, with one of
// two defects: ramification indices ignored, or the last place over each
// v left out.
KElement transport_k2(const FieldMap& phi, const KElement& x, bool drop_index, bool skip_last) {
  KElement::Coords acc;
  for (const Place& v : residue_support(x)) {
    const KElement r = residue(v, x);
    if (r.is_zero()) continue;
    const auto over = places_over(phi, v);
    const std::size_t used = skip_last && over.size() > 1 ? over.size() - 1 : over.size();
    for (std::size_t i = 0; i < used; ++i) {
      const PlaceOver& po = over[i];
      if (po.above.is_infinite()) continue;
      const std::uint64_t order = po.above.residue_field()->order() - 1;
      const auto e = drop_index ? 1 : static_cast<std::uint64_t>(po.e % order);
      auto& slot = acc[po.above.pi()];
      slot = (slot + mul_mod(mul_mod(r.log(), po.iota.generator_log(), order), e, order)) % order;
    }
  }
  return KElement::tame(phi.dst(), std::move(acc));
}

KElement restrict_with(const FieldMap& phi, const KElement& x,
                       FactoredUnit (*unit_map)(const FieldMap&, const FactoredUnit&), bool drop_index,
                       bool skip_last) {
  if (x.degree() == 1) return KElement::unit(phi.dst(), unit_map(phi, x.unit()));
  return transport_k2(phi, x, drop_index, skip_last);
}

}  // namespace

PremoduleInstance mutant_instance(const std::string& name) {
  PremoduleInstance inst = milnor_instance();
  inst.name = "mutant:" + name;
  if (name == "r3e-sign") {
    // The residue at infinity loses its sign on classes of degree >= 2.
    inst.residue = [](const Place& v, const KElement& x) {
      KElement r = residue(v, x);
      return v.is_infinite() && x.degree() >= 2 ? k_neg(r) : r;
    };
  } else if (name == "r3a-ramification") {
    inst.restriction = [](const FieldMap& phi, const KElement& x) {
      if (!phi.image() || phi.is_constant_extension() || x.degree() < 1 || x.degree() > 2) return res_field(phi, x);
      return restrict_with(phi, x, restrict_dropping_multiplicity, true, false);
    };
  } else if (name == "d4-slot") {
    // Uniformizer read from the last slot: d' = (-1)^(n-1) d.
    inst.residue = [](const Place& v, const KElement& x) {
      KElement r = residue(v, x);
      return x.degree() % 2 == 0 ? k_neg(r) : r;
    };
  } else if (name == "r1c-conjugate") {
    inst.restriction = [](const FieldMap& phi, const KElement& x) {
      if (!phi.is_constant_extension() || phi.constant_map().degree() < 2 || x.degree() < 1 || x.degree() > 2) {
        return res_field(phi, x);
      }
      return restrict_with(phi, x, restrict_missing_conjugate, false, true);
    };
  } else if (name == "k1-unnormalized") {
    auto raw = [](const KElement& x) { return x.degree() == 1 && x.field().is_finite(); };
    inst.add = [raw](const KElement& a, const KElement& b) {
      if (raw(a) && raw(b) && a.field() == b.field()) return KElement::finite_unit_unreduced(a.field(), a.log() + b.log());
      return k_add(a, b);
    };
    inst.scale = [raw](const KElement& a, const Integer& k) {
      if (!raw(a)) return k_scale(a, k);
      const std::uint64_t order = a.field().base->order() - 1;
      const Integer e = k >= 0 ? k : Integer(k + order * (-k));
      return KElement::finite_unit_unreduced(a.field(), static_cast<std::uint64_t>(e * a.log()));
    };
    inst.neg = [scale = inst.scale](const KElement& a) { return scale(a, -1); };
    inst.equal = [](const KElement& a, const KElement& b) { return a == b; };
  } else {
    throw InputError("unknown mutant '" + name + "'");
  }
  return inst;
}

std::string mutant_target(const std::string& name) {
  static const std::map<std::string, std::string> targets{{"r3e-sign", "R3e"},
                                                          {"r3a-ramification", "R3a"},
                                                          {"d4-slot", "R3d"},
                                                          {"r1c-conjugate", "R1c"},
                                                          {"k1-unnormalized", "R3e"}};
  const auto it = targets.find(name);
  if (it == targets.end()) throw InputError("unknown mutant '" + name + "'");
  return it->second;
}

PremoduleInstance instance_by_name(const std::string& spec) {
  if (spec == "milnor") return milnor_instance();
  auto parse_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const long v = std::stol(s, &used);
      if (used != s.size()) throw InputError("bad integer in instance '" + spec + "'");
      return v;
    } catch (const std::logic_error&) {
      throw InputError("bad integer in instance '" + spec + "'");
    }
  };
  if (spec.rfind("mod:", 0) == 0) return mod_instance(parse_int(spec.substr(4)));
  if (spec.rfind("mod", 0) == 0 && spec.size() > 3) return mod_instance(parse_int(spec.substr(3)));
  if (spec.rfind("twist:", 0) == 0) {
    return twist_instance(milnor_instance(), static_cast<int>(parse_int(spec.substr(6))));
  }
  if (spec.rfind("mutant:", 0) == 0) return mutant_instance(spec.substr(7));
  throw InputError("unknown instance '" + spec + "'");
}

}  // namespace cyclemod
