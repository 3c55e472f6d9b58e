#include "cyclemod/milnor/place.hpp"

#include "cyclemod/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace cyclemod {

struct Place::Data {
  FieldRef field;
  bool infinite = false;
  Poly pi;
  FieldPtr kappa;
  FiniteMap constants;
  Code root = 0;
  mutable std::once_flag lift_once;
  // Inverse over F_p of the matrix sending the F_p-coordinates of
  // sum c_i t^i (deg < deg pi) to the digits of its residue.
  mutable std::vector<std::vector<std::uint32_t>> lift_inverse;
};

namespace {

std::shared_ptr<const Place::Data> intern(const FieldRef& field, const Poly* pi) {
  static std::mutex mu;
  static std::map<std::pair<const FiniteField*, std::vector<Code>>, std::shared_ptr<const Place::Data>> finite_cache;
  static std::map<const FiniteField*, std::shared_ptr<const Place::Data>> infinite_cache;

  const FieldPtr& base = field.base;
  {
    std::lock_guard lock(mu);
    if (pi == nullptr) {
      if (auto it = infinite_cache.find(base.get()); it != infinite_cache.end()) return it->second;
    } else if (auto it = finite_cache.find({base.get(), pi->coeffs()}); it != finite_cache.end()) {
      return it->second;
    }
  }
  auto d = std::make_shared<Place::Data>();
  d->field = FieldRef::rational(base);
  if (pi == nullptr) {
    d->infinite = true;
    d->pi = Poly(base);
    d->kappa = base;
    d->constants = identity_map(base);
  } else {
    if (pi->field() != base || !pi->is_monic() || !is_irreducible(*pi)) {
      throw DomainError(pi->to_string() + " is not a monic irreducible over " + base->name());
    }
    d->pi = *pi;
    d->kappa = make_field(base->characteristic(), base->degree() * static_cast<std::uint32_t>(pi->degree()));
    d->constants = default_embedding(base, d->kappa);
    d->root = roots(pi->mapped(d->constants)).front();
  }
  std::lock_guard lock(mu);
  if (pi == nullptr) return infinite_cache.emplace(base.get(), d).first->second;
  return finite_cache.emplace(std::make_pair(base.get(), pi->coeffs()), d).first->second;
}

}  // namespace

Place Place::finite(const FieldRef& field, const Poly& pi) {
  if (!field.is_rational()) throw DomainError("places live on rational function fields");
  Place p;
  p.d_ = intern(field, &pi);
  return p;
}

Place Place::infinite(const FieldRef& field) {
  if (!field.is_rational()) throw DomainError("places live on rational function fields");
  Place p;
  p.d_ = intern(field, nullptr);
  return p;
}

const FieldRef& Place::field() const { return d_->field; }
bool Place::is_infinite() const { return d_->infinite; }
const Poly& Place::pi() const { return d_->pi; }
int Place::degree() const { return d_->infinite ? 1 : d_->pi.degree(); }
const FieldPtr& Place::residue_field() const { return d_->kappa; }
const FiniteMap& Place::constants() const { return d_->constants; }
Code Place::root() const { return d_->root; }

RationalFunction Place::uniformizer() const {
  if (d_->infinite) return RationalFunction::variable(field().base).inverse();
  return RationalFunction(d_->pi);
}

Integer Place::valuation(const FactoredUnit& u) const {
  if (u.field() != field().base) throw DomainError("unit and place over different fields");
  if (d_->infinite) return -u.degree();
  return u.exponent(d_->pi);
}

int Place::valuation(const RationalFunction& f) const {
  if (f.is_zero()) throw DomainError("valuation of zero");
  if (d_->infinite) return f.den().degree() - f.num().degree();
  return cyclemod::valuation(f.num(), d_->pi) - cyclemod::valuation(f.den(), d_->pi);
}

std::uint64_t Place::unit_part_log(const FactoredUnit& u) const {
  const auto& k = d_->kappa;
  const std::uint64_t order = k->order() - 1;
  std::uint64_t acc = k->log(d_->constants.apply(u.constant()));
  if (d_->infinite) return acc;
  for (const auto& [p, e] : u.factors()) {
    if (p == d_->pi) continue;
    const Code val = p.eval_mapped(d_->constants, d_->root);
    acc = (acc + mul_mod(k->log(val), mod_u64(e, order), order)) % order;
  }
  return acc;
}

Code Place::reduce(const RationalFunction& f) const {
  if (f.is_zero()) return 0;
  const int v = valuation(f);
  if (v < 0) throw DomainError("reduction of a function with a pole at " + to_string());
  if (v > 0) return 0;
  if (d_->infinite) {
    const auto& k = d_->kappa;
    return k->div(f.num().lead(), f.den().lead());
  }
  const auto& k = d_->kappa;
  return k->div(f.num().eval_mapped(d_->constants, d_->root), f.den().eval_mapped(d_->constants, d_->root));
}

namespace {

std::vector<std::uint32_t> digits(Code c, std::uint32_t p, std::size_t n) {
  std::vector<std::uint32_t> out(n);
  for (auto& d : out) {
    d = c % p;
    c /= p;
  }
  return out;
}

// Inverse of a square matrix over F_p by Gauss-Jordan.
std::vector<std::vector<std::uint32_t>> invert_mod_p(std::vector<std::vector<std::uint32_t>> a, std::uint32_t p) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::uint32_t>> inv(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a[r][c] == 0) ++r;
    if (r == n) throw DomainError("singular residue basis");
    std::swap(a[r], a[c]);
    std::swap(inv[r], inv[c]);
    const auto k = static_cast<std::uint32_t>(inverse_mod(a[c][c], p));
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] = static_cast<std::uint32_t>((std::uint64_t{a[c][j]} * k) % p);
      inv[c][j] = static_cast<std::uint32_t>((std::uint64_t{inv[c][j]} * k) % p);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = static_cast<std::uint32_t>((a[i][j] + (p - f) * a[c][j]) % p);
        inv[i][j] = static_cast<std::uint32_t>((inv[i][j] + (p - f) * inv[c][j]) % p);
      }
    }
  }
  return inv;
}

}  // namespace

Poly Place::lift(Code c) const {
  if (d_->infinite) return Poly::constant(field().base, c);
  const Data& d = *d_;
  const auto& base = d.field.base;
  const std::uint32_t p = base->characteristic();
  const std::size_t m = base->degree();
  const std::size_t deg = static_cast<std::size_t>(d.pi.degree());
  const std::size_t n = m * deg;
  std::call_once(d.lift_once, [&] {
    // Column (i, j) is the residue of a^j t^i.
    std::vector<std::vector<std::uint32_t>> mat(n, std::vector<std::uint32_t>(n, 0));
    Code a_pow = 1;
    for (std::size_t j = 0; j < m; ++j) {
      Code img = d.constants.apply(a_pow);
      for (std::size_t i = 0; i < deg; ++i) {
        const auto col = digits(img, p, n);
        for (std::size_t r = 0; r < n; ++r) mat[r][i * m + j] = col[r];
        img = d.kappa->mul(img, d.root);
      }
      a_pow = base->mul(a_pow, base->root() == 0 ? 1 : base->root());
    }
    d.lift_inverse = invert_mod_p(std::move(mat), p);
  });
  const auto rhs = digits(c, p, n);
  std::vector<Code> coeffs(deg, 0);
  for (std::size_t i = 0; i < deg; ++i) {
    Code acc = 0;
    Code scale = 1;
    for (std::size_t j = 0; j < m; ++j) {
      std::uint64_t v = 0;
      for (std::size_t r = 0; r < n; ++r) v += std::uint64_t{d.lift_inverse[i * m + j][r]} * rhs[r];
      acc += static_cast<Code>(v % p) * scale;
      scale *= p;
    }
    coeffs[i] = acc;
  }
  return Poly(base, std::move(coeffs));
}

std::strong_ordering Place::operator<=>(const Place& o) const {
  if (auto c = field().base.get() <=> o.field().base.get(); c != 0) return c;
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  if (is_infinite() != o.is_infinite()) return is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  return pi() <=> o.pi();
}

std::string Place::to_string() const {
  if (d_->infinite) return "inf";
  return d_->pi.to_string(field().var);
}

std::vector<Place> places_up_to(const FieldRef& field, int max_degree, bool include_infinite) {
  std::vector<Place> out;
  for (int d = 1; d <= max_degree; ++d) {
    for (const auto& pi : monic_irreducibles(field.base, d)) out.push_back(Place::finite(field, pi));
    if (d == 1 && include_infinite) out.push_back(Place::infinite(field));
  }
  return out;
}

Poly minimal_polynomial(const FiniteMap& map, Code beta) {
  const auto& big = map.dst();
  const std::uint64_t q = map.src()->order();
  std::vector<Code> conj{beta};
  for (Code c = big->pow(beta, static_cast<std::int64_t>(q)); c != beta; c = big->pow(c, static_cast<std::int64_t>(q))) {
    conj.push_back(c);
  }
  Poly acc = Poly::constant(big, 1);
  for (const Code c : conj) acc = acc * Poly(big, {big->neg(c), 1});
  std::vector<Code> down(acc.coeffs().size());
  for (std::size_t i = 0; i < down.size(); ++i) down[i] = map.preimage(acc.coeffs()[i]);
  return Poly(map.src(), std::move(down));
}

namespace {

// Induced embedding kappa(v) -> kappa(w) sending constants along
// w.constants ∘ m and the class of t to beta.
FiniteMap induced(const Place& v, const Place& w, const FiniteMap& m, Code beta) {
  const auto& kv = v.residue_field();
  const auto& kw = w.residue_field();
  const Code g = m.src()->generator();
  std::vector<std::pair<Code, Code>> constraints{{v.constants().apply(g), w.constants().apply(m.apply(g))}};
  if (!v.is_infinite()) constraints.emplace_back(v.root(), beta);
  auto found = find_embedding(kv, kw, constraints);
  if (!found) throw DomainError("no residue embedding from " + v.to_string() + " to " + w.to_string());
  return *found;
}

}  // namespace

PlaceOver lying_under(const FieldMap& phi, const Place& w) {
  if (!phi.src().is_rational() || !phi.dst().is_rational() || !phi.image()) {
    throw DomainError("places can only be pulled back along maps of rational function fields");
  }
  if (!(w.field() == phi.dst())) throw DomainError("place not on the target field");
  const FiniteMap& m = phi.constant_map();
  const RationalFunction& g = *phi.image();
  // Value of g at w, as an element of kappa(w) or infinity.
  bool at_infinity = false;
  Code beta = 0;
  if (w.valuation(g) < 0) {
    at_infinity = true;
  } else {
    beta = w.reduce(g);
  }
  PlaceOver out;
  out.above = w;
  if (at_infinity) {
    out.below = Place::infinite(phi.src());
    out.e = w.valuation(g.inverse());
    out.iota = compose(w.constants(), m);
    return out;
  }
  const FiniteMap into_kw = compose(w.constants(), m);
  Poly pi_v = minimal_polynomial(into_kw, beta);
  out.below = Place::finite(phi.src(), pi_v);
  out.e = w.valuation(phi.apply(RationalFunction(pi_v)));
  out.iota = induced(out.below, w, m, beta);
  return out;
}

std::vector<PlaceOver> places_over(const FieldMap& phi, const Place& v) {
  if (!phi.image()) throw DomainError("places can only be pushed along maps of rational function fields");
  if (!(v.field() == phi.src())) throw DomainError("place not on the source field");
  const RationalFunction pulled = phi.apply(v.uniformizer());
  std::vector<Place> candidates;
  for (const auto& [p, e] : factor_poly(pulled.num()).factors) candidates.push_back(Place::finite(phi.dst(), p));
  Place inf = Place::infinite(phi.dst());
  if (inf.valuation(pulled) > 0) candidates.push_back(inf);
  std::sort(candidates.begin(), candidates.end());
  std::vector<PlaceOver> out;
  for (const auto& w : candidates) {
    PlaceOver po = lying_under(phi, w);
    if (!(po.below == v)) throw DomainError("inconsistent place over " + v.to_string());
    out.push_back(std::move(po));
  }
  return out;
}

}  // namespace cyclemod
