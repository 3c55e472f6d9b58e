#include "cyclemod/premodule/sampling.hpp"

#include "cyclemod/errors.hpp"

namespace cyclemod {

const std::vector<std::uint64_t>& universe_orders() {
  static const std::vector<std::uint64_t> orders{2, 3, 4, 5, 9};
  return orders;
}

int sample_degree_bound(const FieldPtr& base) {
  // Keeps q^(2 * bound) well inside the field cap, since substitutions of
  // degree 2 double the degrees of sampled factors.
  return base->order() <= 25 ? 2 : 1;
}

Code random_unit_code(const FieldPtr& f, Rng& rng) { return 1 + static_cast<Code>(rng.below(f->order() - 1)); }

Poly random_poly(const FieldPtr& f, Rng& rng, int max_deg, bool monic) {
  const auto deg = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(max_deg) + 1));
  std::vector<Code> c(deg + 1);
  for (auto& x : c) x = static_cast<Code>(rng.below(f->order()));
  c.back() = monic ? 1 : random_unit_code(f, rng);
  return Poly(f, std::move(c));
}

RationalFunction random_nonzero(const FieldPtr& f, Rng& rng, int max_deg) {
  return RationalFunction(random_poly(f, rng, max_deg), random_poly(f, rng, max_deg, true));
}

RationalFunction random_unit_at(const Place& v, Rng& rng, int max_deg) {
  while (true) {
    RationalFunction u = random_nonzero(v.field().base, rng, max_deg);
    const int k = v.valuation(u);
    if (k == 0) return u;
    // Strip the uniformizer once; usually lands on a unit.
    u = u / v.uniformizer().pow(k);
    if (v.valuation(u) == 0 && u.degree() <= 2 * max_deg) return u;
  }
}

Place random_place(const FieldRef& f, Rng& rng, int max_deg, bool allow_infinite) {
  if (allow_infinite && rng.below(4) == 0) return Place::infinite(f);
  const int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg)));
  return Place::finite(f, rng.pick(monic_irreducibles(f.base, d)));
}

KElement sample_milnor(const FieldRef& f, int n, Rng& rng, int bound) {
  if (n < 0) return KElement::zero(f, n);
  if (n == 0) return KElement::integer(f, rng.between(-6, 6));
  if (f.is_finite()) {
    if (n >= 2) return KElement::zero(f, n);
    return KElement::finite_unit(f, rng.below(f.base->order() - 1));
  }
  if (n >= 3) return KElement::zero(f, n);
  const int deg = bound > 0 ? bound : sample_degree_bound(f.base);
  KElement acc = KElement::zero(f, n);
  const int terms = 1 + static_cast<int>(rng.below(2));
  for (int i = 0; i < terms; ++i) {
    std::vector<RationalFunction> es;
    for (int j = 0; j < n; ++j) es.push_back(random_nonzero(f.base, rng, deg));
    acc = k_add(acc, symbol(f, es));
  }
  return acc;
}

FieldPtr random_extension(const FieldPtr& base, Rng& rng, int max_d) {
  std::vector<int> ok;
  std::uint64_t size = base->order();
  for (int d = 1; d <= max_d; ++d) {
    if (size <= 4096) ok.push_back(d);
    size *= base->order();
  }
  const int d = rng.pick(ok);
  return make_field(base->characteristic(), base->degree() * static_cast<std::uint32_t>(d));
}

FiniteMap random_embedding(const FieldPtr& src, const FieldPtr& dst, Rng& rng) {
  auto all = all_embeddings(src, dst);
  if (all.empty()) throw DomainError(src->name() + " does not embed in " + dst->name());
  return rng.pick(all);
}

}  // namespace cyclemod
