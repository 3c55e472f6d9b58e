#include "cyclemod/premodule/relations.hpp"

#include "cyclemod/cycles/checks.hpp"
#include "cyclemod/errors.hpp"
#include "cyclemod/premodule/sampling.hpp"

#include <numeric>
#include <set>
#include <utility>

namespace cyclemod {

namespace {

using Trial = TrialOutcome (*)(const PremoduleInstance&, Rng&);

class Witness {
 public:
  Witness& add(const std::string& key, const std::string& value) {
    if (!text_.empty()) text_ += "; ";
    text_ += key + "=" + value;
    return *this;
  }
  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

std::string show(const KElement& x) {
  return x.to_string() + "@" + x.field().name() + ":" + std::to_string(x.degree());
}

TrialOutcome verdict(const PremoduleInstance& inst, const Witness& w, const KElement& lhs, const KElement& rhs) {
  return {inst.equal(lhs, rhs), w.str(), show(lhs), show(rhs)};
}

// Residue fields met by a witness stay below this size.
constexpr std::uint64_t kWitnessFieldBudget = 1U << 16;

Integer power(std::uint64_t q, int e) { return boost::multiprecision::pow(Integer(q), static_cast<unsigned>(e)); }

// Largest factor degree b <= 2 with q^(b * stretch) within the budget;
// 0 when even b = 1 is too large.
int bound_for(std::uint64_t q, int stretch) {
  for (int b = 2; b >= 1; --b) {
    if (power(q, b * stretch) <= kWitnessFieldBudget) return b;
  }
  return 0;
}

FieldPtr random_base(Rng& rng) { return field_of_order(rng.pick(universe_orders())); }

int between(Rng& rng, int lo, int hi) { return static_cast<int>(rng.between(lo, hi)); }

KElement sample_value(const PremoduleInstance& inst, const FieldRef& f, Rng& rng, int bound, int lo, int hi) {
  return inst.from_milnor(sample_milnor(f, between(rng, lo, hi), rng, bound));
}

// A Milnor class of degree n with a nonzero residue at w.
KElement through_place(const FieldRef& f, const Place& w, int n, Rng& rng, int bound) {
  if (n == 1) return symbol(f, {w.uniformizer() * random_unit_at(w, rng, bound)});
  if (n == 2) return symbol(f, {w.uniformizer(), random_unit_at(w, rng, bound)});
  return KElement::zero(f, n);
}

RationalFunction random_substitution(const FieldPtr& f, Rng& rng, int max_deg) {
  while (true) {
    RationalFunction g = random_nonzero(f, rng, max_deg);
    if (!g.is_constant()) return g;
  }
}

struct Step {
  FieldMap map;
  int stretch = 1;
};

// One map out of `src`: a finite field extension or the constants of a
// rational function field from a finite field; a constant extension or a
// substitution t -> g(s) from a rational function field.
Step random_step(const FieldRef& src, Rng& rng, bool finite_only, bool allow_substitution) {
  if (src.is_finite()) {
    if (finite_only || rng.coin()) {
      const FieldPtr big = random_extension(src.base, rng, 3);
      return {FieldMap::finite(random_embedding(src.base, big, rng)), 1};
    }
    const FieldPtr big = random_extension(src.base, rng, 2);
    return {FieldMap::constants(random_embedding(src.base, big, rng)), 1};
  }
  if (allow_substitution && rng.coin()) {
    const RationalFunction g = random_substitution(src.base, rng, 2);
    return {FieldMap::rational(identity_map(src.base), g, src.var, src.var), g.degree()};
  }
  const FieldPtr big = random_extension(src.base, rng, 3);
  return {FieldMap::constant_extension(random_embedding(src.base, big, rng), src.var), 1};
}

FieldRef random_field(Rng& rng) {
  const FieldPtr base = random_base(rng);
  return rng.coin() ? FieldRef::finite(base) : FieldRef::rational(base);
}

TrialOutcome r0(const PremoduleInstance& inst, Rng& rng) {
  const FieldRef f = random_field(rng);
  const int b = bound_for(f.base->order(), 1);
  const int r = between(rng, 0, 1);
  const int s = between(rng, 0, 1);
  const KElement x = sample_milnor(f, r, rng, b);
  const KElement y = sample_milnor(f, s, rng, b);
  const KElement z = sample_value(inst, f, rng, b, 0, 2 - r - s);
  Witness w;
  w.add("x", show(x)).add("y", show(y)).add("z", show(z));
  return verdict(inst, w, inst.multiply(x, inst.multiply(y, z)), inst.multiply(gamma(x, y), z));
}

TrialOutcome r1a(const PremoduleInstance& inst, Rng& rng) {
  while (true) {
    const FieldRef e = random_field(rng);
    const Step s1 = random_step(e, rng, false, true);
    const Step s2 = random_step(s1.map.dst(), rng, false, true);
    const int b = bound_for(s2.map.dst().base->order(), s1.stretch * s2.stretch);
    if (b == 0) continue;
    const KElement x = sample_value(inst, e, rng, b, 0, 2);
    Witness w;
    w.add("phi", s1.map.to_string()).add("psi", s2.map.to_string()).add("x", show(x));
    return verdict(inst, w, inst.restriction(compose(s2.map, s1.map), x),
                   inst.restriction(s2.map, inst.restriction(s1.map, x)));
  }
}

TrialOutcome r1b(const PremoduleInstance& inst, Rng& rng) {
  const int n = between(rng, 0, 2);
  while (true) {
    const FieldRef e = random_field(rng);
    const Step s1 = random_step(e, rng, true, n == 0);
    const Step s2 = random_step(s1.map.dst(), rng, true, n == 0);
    const int b = bound_for(s2.map.dst().base->order(), 1);
    if (b == 0) continue;
    const KElement x = inst.from_milnor(sample_milnor(s2.map.dst(), n, rng, b));
    Witness w;
    w.add("phi", s1.map.to_string()).add("psi", s2.map.to_string()).add("x", show(x));
    return verdict(inst, w, inst.corestriction(compose(s2.map, s1.map), x),
                   inst.corestriction(s1.map, inst.corestriction(s2.map, x)));
  }
}

// phi: K -> E and psi: K -> L, both finite, over a finite K or as constant
// extensions of K(t).
struct Square {
  FieldRef k;
  FiniteMap phi;
  FiniteMap psi;
  bool rational = false;

  FieldMap lift(const FiniteMap& m) const {
    return rational ? FieldMap::constant_extension(m, k.var) : FieldMap::finite(m);
  }
  FieldRef ref(const FieldPtr& f) const { return rational ? FieldRef::rational(f) : FieldRef::finite(f); }
};

Square random_square(Rng& rng, bool rational, bool divisible) {
  while (true) {
    const FieldPtr k = random_base(rng);
    const int a = between(rng, 1, 3);
    const int b = divisible ? a * between(rng, 1, 3) : between(rng, 1, 3);
    const std::uint32_t m = k->degree();
    const std::uint32_t l = std::lcm(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    const auto size = [&](std::uint32_t d) { return power(k->characteristic(), static_cast<int>(m * d)); };
    if (size(static_cast<std::uint32_t>(a)) > 4096 || size(static_cast<std::uint32_t>(b)) > 4096) continue;
    if (size(l) > kWitnessFieldBudget) continue;
    const FieldPtr e = make_field(k->characteristic(), m * static_cast<std::uint32_t>(a));
    const FieldPtr big = make_field(k->characteristic(), m * static_cast<std::uint32_t>(b));
    Square sq;
    sq.rational = rational;
    sq.k = rational ? FieldRef::rational(k) : FieldRef::finite(k);
    sq.phi = random_embedding(k, e, rng);
    sq.psi = random_embedding(k, big, rng);
    return sq;
  }
}

// Embeddings sigma: E -> Omega with sigma.phi = tau.psi, one per orbit under
// the Frobenius of L; these index the points of E (x)_K L.
std::vector<FiniteMap> tensor_points(const Square& sq, const FiniteMap& tau) {
  const FieldPtr& omega = tau.dst();
  const Code g = sq.phi.src()->generator();
  const Code target = tau.apply(sq.psi.apply(g));
  const std::uint64_t l = tau.src()->order();
  std::vector<FiniteMap> reps;
  std::set<Code> seen;
  for (const FiniteMap& sigma : all_embeddings(sq.phi.dst(), omega)) {
    if (sigma.apply(sq.phi.apply(g)) != target) continue;
    if (seen.count(sigma.root_image()) != 0) continue;
    reps.push_back(sigma);
    Code r = sigma.root_image();
    while (seen.insert(r).second) r = omega->pow(r, static_cast<std::int64_t>(l));
  }
  return reps;
}

TrialOutcome base_change(const PremoduleInstance& inst, Rng& rng, bool rational) {
  const Square sq = random_square(rng, rational, false);
  const FieldPtr& e = sq.phi.dst();
  const FieldPtr& l = sq.psi.dst();
  const std::uint32_t deg = std::lcm(e->degree(), l->degree());
  const FieldPtr omega = make_field(l->characteristic(), deg);
  const FiniteMap tau = default_embedding(l, omega);
  const KElement x = sample_value(inst, sq.ref(e), rng, bound_for(omega->order(), 1), 0, 2);
  const KElement lhs = inst.restriction(sq.lift(sq.psi), inst.corestriction(sq.lift(sq.phi), x));
  KElement rhs = inst.zero(sq.ref(l), inst.degree(x));
  for (const FiniteMap& sigma : tensor_points(sq, tau)) {
    rhs = inst.add(rhs, inst.corestriction(sq.lift(tau), inst.restriction(sq.lift(sigma), x)));
  }
  Witness w;
  w.add("phi", sq.lift(sq.phi).to_string()).add("psi", sq.lift(sq.psi).to_string()).add("x", show(x));
  return verdict(inst, w, lhs, rhs);
}

TrialOutcome r1c(const PremoduleInstance& inst, Rng& rng) { return base_change(inst, rng, rng.coin()); }
TrialOutcome l6(const PremoduleInstance& inst, Rng& rng) { return base_change(inst, rng, true); }

TrialOutcome l7(const PremoduleInstance& inst, Rng& rng) {
  const Square sq = random_square(rng, rng.coin(), true);
  const FieldPtr& e = sq.phi.dst();
  const FieldPtr& l = sq.psi.dst();
  const KElement x = sample_value(inst, sq.ref(e), rng, bound_for(l->order(), 1), 0, 2);
  const KElement lhs = inst.restriction(sq.lift(sq.psi), inst.corestriction(sq.lift(sq.phi), x));
  KElement rhs = inst.zero(sq.ref(l), inst.degree(x));
  const Code g = sq.phi.src()->generator();
  for (const FiniteMap& j : all_embeddings(e, l)) {
    if (j.apply(sq.phi.apply(g)) != sq.psi.apply(g)) continue;
    rhs = inst.add(rhs, inst.restriction(sq.lift(j), x));
  }
  Witness w;
  w.add("phi", sq.lift(sq.phi).to_string()).add("psi", sq.lift(sq.psi).to_string()).add("x", show(x));
  return verdict(inst, w, lhs, rhs);
}

TrialOutcome r2a(const PremoduleInstance& inst, Rng& rng) {
  while (true) {
    const FieldRef e = random_field(rng);
    const Step s = random_step(e, rng, false, true);
    const int b = bound_for(s.map.dst().base->order(), s.stretch);
    if (b == 0) continue;
    const int r = between(rng, 0, 2);
    const KElement x = sample_milnor(e, r, rng, b);
    const KElement y = sample_value(inst, e, rng, b, 0, 2 - r);
    Witness w;
    w.add("phi", s.map.to_string()).add("x", show(x)).add("y", show(y));
    return verdict(inst, w, inst.restriction(s.map, inst.multiply(x, y)),
                   inst.multiply(res_field(s.map, x), inst.restriction(s.map, y)));
  }
}

struct FiniteWitness {
  Step step;
  int bound = 1;
  int r = 0;
  int n = 0;
};

// A finite map with degrees r (Milnor side) and n (instance side);
// substitutions only when both are zero.
FiniteWitness random_finite_witness(Rng& rng) {
  while (true) {
    FiniteWitness fw;
    fw.r = between(rng, 0, 2);
    fw.n = between(rng, 0, 2 - fw.r);
    const FieldRef e = random_field(rng);
    fw.step = random_step(e, rng, true, fw.r == 0 && fw.n == 0);
    fw.bound = bound_for(fw.step.map.dst().base->order(), fw.step.stretch);
    if (fw.bound > 0) return fw;
  }
}

TrialOutcome r2b(const PremoduleInstance& inst, Rng& rng) {
  const FiniteWitness fw = random_finite_witness(rng);
  const FieldMap& phi = fw.step.map;
  const KElement x = sample_milnor(phi.src(), fw.r, rng, fw.bound);
  const KElement y = inst.from_milnor(sample_milnor(phi.dst(), fw.n, rng, fw.bound));
  Witness w;
  w.add("phi", phi.to_string()).add("x", show(x)).add("y", show(y));
  return verdict(inst, w, inst.corestriction(phi, inst.multiply(res_field(phi, x), y)),
                 inst.multiply(x, inst.corestriction(phi, y)));
}

TrialOutcome r2c(const PremoduleInstance& inst, Rng& rng) {
  const FiniteWitness fw = random_finite_witness(rng);
  const FieldMap& phi = fw.step.map;
  const KElement y = sample_milnor(phi.dst(), fw.r, rng, fw.bound);
  const KElement x = inst.from_milnor(sample_milnor(phi.src(), fw.n, rng, fw.bound));
  Witness w;
  w.add("phi", phi.to_string()).add("x", show(x)).add("y", show(y));
  return verdict(inst, w, inst.corestriction(phi, inst.multiply(y, inst.restriction(phi, x))),
                 inst.multiply(cor_field(phi, y), x));
}

TrialOutcome l4(const PremoduleInstance& inst, Rng& rng) {
  const FiniteWitness fw = random_finite_witness(rng);
  const FieldMap& phi = fw.step.map;
  const KElement x = inst.from_milnor(sample_milnor(phi.dst(), fw.n, rng, fw.bound));
  const KElement y = sample_milnor(phi.src(), fw.r, rng, fw.bound);
  Witness w;
  w.add("phi", phi.to_string()).add("x", show(x)).add("y", show(y));
  if (rng.coin()) {
    w.add("form", "x.phi(y)");
    return verdict(inst, w, inst.corestriction(phi, inst.multiply_right(x, res_field(phi, y))),
                   inst.multiply_right(inst.corestriction(phi, x), y));
  }
  w.add("form", "phi(y).x");
  return verdict(inst, w, inst.corestriction(phi, inst.multiply(res_field(phi, y), x)),
                 inst.multiply(y, inst.corestriction(phi, x)));
}

TrialOutcome l5(const PremoduleInstance& inst, Rng& rng) {
  const FiniteWitness fw = random_finite_witness(rng);
  const FieldMap& phi = fw.step.map;
  const KElement x = inst.from_milnor(sample_milnor(phi.src(), fw.n, rng, fw.bound));
  Witness w;
  w.add("phi", phi.to_string()).add("x", show(x));
  return verdict(inst, w, inst.corestriction(phi, inst.restriction(phi, x)), inst.scale(x, phi.degree()));
}

Poly linear(const FieldPtr& f, Code c) { return Poly(f, {f->neg(c), 1}); }

TrialOutcome r3a(const PremoduleInstance& inst, Rng& rng) {
  const FieldPtr base = random_base(rng);
  const FieldRef e = FieldRef::rational(base, "t");
  const FieldRef l = FieldRef::rational(base, "s");
  FieldMap phi;
  Place v;
  int stretch = 1;
  const auto kind = rng.below(4);
  if (kind == 0) {
    const FieldPtr big = random_extension(base, rng, 2);
    phi = FieldMap::constant_extension(random_embedding(base, big, rng), "t");
    v = random_place(phi.dst(), rng, bound_for(big->order(), 1));
  } else if (kind == 1) {
    const RationalFunction g = random_substitution(base, rng, 2);
    phi = FieldMap::rational(identity_map(base), g, "t", "s");
    stretch = g.degree();
    v = random_place(l, rng, 2);
  } else {
    // t -> b + u * unif_v^k, ramified of index k over t = b (or over
    // infinity for t -> u / unif_v^k).
    const int k = between(rng, 1, 3);
    const bool v_inf = rng.below(4) == 0;
    v = v_inf ? Place::infinite(l) : Place::finite(l, linear(base, static_cast<Code>(rng.below(base->order()))));
    RationalFunction u = RationalFunction::constant(base, random_unit_code(base, rng));
    if (!v_inf && k <= 2 && rng.coin()) {
      const Code c = v.pi().coeff(0);
      const Code shift = static_cast<Code>(rng.below(base->order()));
      if (base->add(base->neg(c), shift) != 0) u = RationalFunction(linear(base, base->neg(shift)));
    }
    const RationalFunction unif = v.uniformizer().pow(k);
    const RationalFunction g =
        rng.below(4) == 0 ? u / unif
                          : RationalFunction::constant(base, static_cast<Code>(rng.below(base->order()))) + u * unif;
    phi = FieldMap::rational(identity_map(base), g, "t", "s");
    stretch = g.degree();
  }
  const PlaceOver po = lying_under(phi, v);
  const int b = bound_for(base->order(), stretch);
  const int n = between(rng, 0, 2);
  KElement xm = sample_milnor(e, n, rng, b);
  if (rng.coin()) xm = k_add(xm, through_place(e, po.below, n, rng, b));
  const KElement x = inst.from_milnor(xm);
  Witness w;
  w.add("phi", phi.to_string()).add("v", v.to_string()).add("w", po.below.to_string()).add("e", po.e.str());
  w.add("x", show(x));
  const KElement lhs = inst.residue(v, inst.restriction(phi, x));
  const KElement rhs = inst.scale(inst.restriction(FieldMap::finite(po.iota), inst.residue(po.below, x)), po.e);
  return verdict(inst, w, lhs, rhs);
}

TrialOutcome r3b(const PremoduleInstance& inst, Rng& rng) {
  const FieldPtr base = random_base(rng);
  const FieldRef e = FieldRef::rational(base);
  const FieldPtr big = random_extension(base, rng, 3);
  const FieldMap phi = FieldMap::constant_extension(random_embedding(base, big, rng));
  const int b = bound_for(big->order(), 1);
  const int n = between(rng, 0, 2);
  KElement xm = sample_milnor(phi.dst(), n, rng, b);
  Place v = random_place(e, rng, b);
  if (rng.coin()) {
    const auto support = residue_support(xm);
    if (!support.empty()) {
      v = lying_under(phi, rng.pick(support)).below;
    } else {
      xm = k_add(xm, through_place(phi.dst(), places_over(phi, v).front().above, n, rng, b));
    }
  }
  const KElement x = inst.from_milnor(xm);
  const KElement lhs = inst.residue(v, inst.corestriction(phi, x));
  KElement rhs = inst.zero(v.residue(), inst.degree(x) - 1);
  for (const PlaceOver& po : places_over(phi, v)) {
    rhs = inst.add(rhs, inst.corestriction(FieldMap::finite(po.iota), inst.residue(po.above, x)));
  }
  Witness w;
  w.add("phi", phi.to_string()).add("v", v.to_string()).add("x", show(x));
  return verdict(inst, w, lhs, rhs);
}

// Constants F_q -> F_q'(t).
FieldMap random_constants(const FieldPtr& base, Rng& rng) {
  const FieldPtr big = random_extension(base, rng, 2);
  return FieldMap::constants(random_embedding(base, big, rng));
}

TrialOutcome r3c(const PremoduleInstance& inst, Rng& rng) {
  const FieldPtr base = random_base(rng);
  const FieldMap phi = random_constants(base, rng);
  const Place v = random_place(phi.dst(), rng, bound_for(phi.dst().base->order(), 1));
  const KElement x = sample_value(inst, phi.src(), rng, 1, 0, 1);
  Witness w;
  w.add("phi", phi.to_string()).add("v", v.to_string()).add("x", show(x));
  return verdict(inst, w, inst.residue(v, inst.restriction(phi, x)), inst.zero(v.residue(), inst.degree(x) - 1));
}

TrialOutcome r3d(const PremoduleInstance& inst, Rng& rng) {
  const FieldPtr base = random_base(rng);
  const FieldMap phi = random_constants(base, rng);
  const int b = bound_for(phi.dst().base->order(), 1);
  const Place v = random_place(phi.dst(), rng, b);
  RationalFunction pi = v.uniformizer();
  if (rng.coin()) pi = pi * random_unit_at(v, rng, b);
  const KElement x = sample_value(inst, phi.src(), rng, 1, 0, 1);
  const FieldMap bar = FieldMap::finite(compose(v.constants(), phi.constant_map()));
  Witness w;
  w.add("phi", phi.to_string()).add("v", v.to_string()).add("pi", pi.to_string()).add("x", show(x));
  const KElement lhs = inst.residue(v, inst.multiply(symbol(phi.dst(), {-pi}), inst.restriction(phi, x)));
  return verdict(inst, w, lhs, inst.restriction(bar, x));
}

TrialOutcome r3e(const PremoduleInstance& inst, Rng& rng) {
  const FieldPtr base = random_base(rng);
  const FieldRef f = FieldRef::rational(rng.coin() ? base : random_extension(base, rng, 2));
  const int b = bound_for(f.base->order(), 1);
  const Place v = random_place(f, rng, b);
  const RationalFunction u = random_unit_at(v, rng, b);
  const int n = rng.below(4) == 0 ? 0 : 1;
  KElement xm = sample_milnor(f, n, rng, b);
  if (rng.coin()) xm = k_add(xm, through_place(f, v, n, rng, b));
  const KElement x = inst.from_milnor(xm);
  Witness w;
  w.add("field", f.name()).add("v", v.to_string()).add("u", u.to_string()).add("x", show(x));
  const KElement lhs = inst.residue(v, inst.multiply(symbol(f, {u}), x));
  const KElement ubar = finite_symbol(v.residue(), {v.reduce(u)});
  const KElement rhs = inst.neg(inst.multiply(ubar, inst.residue(v, x)));
  return verdict(inst, w, lhs, rhs);
}

const std::vector<std::pair<std::string, Trial>>& catalogue() {
  static const std::vector<std::pair<std::string, Trial>> table{
      {"R0", r0},   {"R1a", r1a}, {"R1b", r1b}, {"R1c", r1c}, {"R2a", r2a},       {"R2b", r2b},
      {"R2c", r2c}, {"R3a", r3a}, {"R3b", r3b}, {"R3c", r3c}, {"R3d", r3d},       {"R3e", r3e},
      {"L4", l4},   {"L5", l5},   {"L6", l6},   {"L7", l7},   {"FD", fd_trial}, {"C", c_trial},
  };
  return table;
}

Trial find_trial(const std::string& id) {
  for (const auto& [name, fn] : catalogue()) {
    if (name == id) return fn;
  }
  throw InputError("unknown relation '" + id + "'");
}

}  // namespace

const std::vector<std::string>& relation_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& entry : catalogue()) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

std::uint64_t trial_seed(std::uint64_t seed, const std::string& id, std::size_t index) {
  return derive_seed(seed, id, index);
}

TrialOutcome run_trial(const PremoduleInstance& inst, const std::string& id, std::uint64_t seed) {
  const Trial fn = find_trial(id);
  Rng rng(seed);
  try {
    return fn(inst, rng);
  } catch (const std::exception& e) {
    TrialOutcome out;
    out.ok = false;
    out.witness = "trial seed " + std::to_string(seed);
    out.lhs = std::string("error: ") + e.what();
    return out;
  }
}

RelationReport check_relation(const PremoduleInstance& inst, const std::string& id, std::size_t trials,
                              std::uint64_t seed) {
  find_trial(id);
  RelationReport report;
  report.relation = id;
  report.trials = trials;
  report.seed = seed;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t ts = trial_seed(seed, id, i);
    TrialOutcome out = run_trial(inst, id, ts);
    if (!out.ok) report.failures.push_back({i, ts, std::move(out.witness), std::move(out.lhs), std::move(out.rhs)});
  }
  return report;
}

std::vector<RelationReport> run_relation_suite(const PremoduleInstance& inst, const SuiteConfig& config) {
  const auto& ids = config.relations.empty() ? relation_ids() : config.relations;
  std::vector<RelationReport> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(check_relation(inst, id, config.trials, config.seed));
  return out;
}

}  // namespace cyclemod
