#include "cyclemod/exactfield/poly.hpp"

#include "cyclemod/errors.hpp"
#include "cyclemod/rng.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace cyclemod {

namespace {

void check_same(const Poly& a, const Poly& b) {
  if (a.field() != b.field()) throw DomainError("polynomials over different fields");
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<Code> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(FieldPtr field, Code c) { return Poly(std::move(field), std::vector<Code>{c}); }

Poly Poly::monomial(FieldPtr field, Code c, std::size_t k) {
  std::vector<Code> v(k + 1, 0);
  v[k] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  return scaled(field_->inv(lead()));
}

Poly Poly::scaled(Code c) const {
  std::vector<Code> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], c);
  return Poly(field_, std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Code> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(i)));
  }
  return Poly(field_, std::move(v));
}

Poly Poly::mapped(const FiniteMap& map) const {
  if (map.src() != field_) throw DomainError("coefficient map does not start at " + field_->name());
  std::vector<Code> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = map.apply(c_[i]);
  return Poly(map.dst(), std::move(v));
}

Code Poly::eval(Code x) const {
  Code acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

Code Poly::eval_mapped(const FiniteMap& map, Code x) const {
  const auto& k = map.dst();
  Code acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = k->add(k->mul(acc, x), map.apply(c_[i]));
  return acc;
}

Poly Poly::compose(const Poly& g) const {
  check_same(*this, g);
  Poly acc(field_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(field_, c_[i]);
  return acc;
}

Poly Poly::reversed() const {
  std::vector<Code> v(c_.rbegin(), c_.rend());
  return Poly(field_, std::move(v));
}

Poly Poly::operator-() const {
  std::vector<Code> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->neg(c_[i]);
  return Poly(field_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same(a, b);
  const auto& f = a.field_;
  std::vector<Code> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f->add(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  check_same(a, b);
  const auto& f = a.field_;
  std::vector<Code> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f->sub(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const auto& f = a.field_;
  std::vector<Code> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      v[i + j] = f->add(v[i + j], f->mul(a.c_[i], b.c_[j]));
    }
  }
  return Poly(f, std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  check_same(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const auto& f = a.field_;
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Code> r = a.c_;
  std::vector<Code> q(a.c_.size() - b.c_.size() + 1, 0);
  const Code inv_lead = f->inv(b.lead());
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    const Code c = f->mul(r[k + db], inv_lead);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) r[k + i] = f->sub(r[k + i], f->mul(c, b.c_[i]));
  }
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

std::strong_ordering Poly::operator<=>(const Poly& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (auto c = c_[i] <=> o.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Code c = c_[i];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    std::string cs = field_->format(c);
    const bool compound = cs.find('+') != std::string::npos;
    if (i == 0) {
      os << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (c != 1) os << (compound ? "(" + cs + ")" : cs) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly powmod(Poly base, const Integer& e, const Poly& mod) {
  Poly r = Poly::constant(mod.field(), 1) % mod;
  base = base % mod;
  Integer k = e;
  while (k > 0) {
    if ((k & 1) != 0) r = (r * base) % mod;
    base = (base * base) % mod;
    k >>= 1;
  }
  return r;
}

int valuation(const Poly& f, const Poly& pi) {
  if (f.is_zero()) throw DomainError("valuation of the zero polynomial");
  int k = 0;
  Poly g = f;
  while (true) {
    auto [q, r] = divmod(g, pi);
    if (!r.is_zero()) return k;
    g = std::move(q);
    ++k;
  }
}

Poly strip(const Poly& f, const Poly& pi, int k) {
  Poly g = f;
  for (int i = 0; i < k; ++i) g = g / pi;
  return g;
}

namespace {

Integer field_order_power(const FieldPtr& f, int d) {
  Integer q = f->order();
  Integer r = 1;
  for (int i = 0; i < d; ++i) r *= q;
  return r;
}

// x^{q^k} mod f.
Poly frobenius_power(const Poly& f, int k) {
  Poly h = Poly::variable(f.field()) % f;
  for (int i = 0; i < k; ++i) h = powmod(h, Integer(f.field()->order()), f);
  return h;
}

// p-th root of a polynomial whose derivative vanishes.
Poly pth_root(const Poly& f) {
  const auto& k = f.field();
  const std::uint32_t p = k->characteristic();
  // c -> c^{p^{m-1}} inverts the Frobenius on F_{p^m}.
  Integer e = 1;
  for (std::uint32_t i = 1; i < k->degree(); ++i) e *= p;
  std::vector<Code> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(k->pow(f.coeffs()[i], e));
  return Poly(k, std::move(v));
}

void squarefree(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
  if (f.degree() <= 0) return;
  const Poly df = f.derivative();
  if (df.is_zero()) {
    squarefree(pth_root(f), mult * static_cast<int>(f.field()->characteristic()), out);
    return;
  }
  Poly c = gcd(f, df);
  Poly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree(pth_root(c), mult * static_cast<int>(f.field()->characteristic()), out);
}

// Splits a monic squarefree f all of whose factors have degree d.
void equal_degree(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const auto& k = f.field();
  const int n = f.degree();
  while (true) {
    std::vector<Code> a(static_cast<std::size_t>(n));
    for (auto& c : a) c = static_cast<Code>(rng.below(k->order()));
    Poly ap(k, a);
    if (ap.degree() <= 0) continue;
    Poly b(k);
    if (k->characteristic() == 2) {
      // Trace map to F_2.
      const std::uint32_t steps = k->degree() * static_cast<std::uint32_t>(d);
      Poly term = ap % f;
      b = term;
      for (std::uint32_t i = 1; i < steps; ++i) {
        term = (term * term) % f;
        b = b + term;
      }
    } else {
      const Integer e = (field_order_power(k, d) - 1) / 2;
      b = powmod(ap, e, f) - Poly::constant(k, 1);
    }
    Poly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree(g, d, rng, out);
      equal_degree((f / g).monic(), d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const Poly g = f.monic();
  const Poly x = Poly::variable(g.field());
  if (!((frobenius_power(g, n) - x) % g).is_zero()) return false;
  for (const auto l : prime_divisors(static_cast<std::uint64_t>(n))) {
    if (gcd(g, frobenius_power(g, n / static_cast<int>(l)) - x).degree() > 0) return false;
  }
  return true;
}

Factorization factor_poly(const Poly& f) {
  if (f.is_zero()) throw InputError("cannot factor the zero polynomial");
  Factorization out;
  out.unit = f.lead();
  if (f.degree() == 0) return out;
  std::vector<std::pair<Poly, int>> sqf;
  squarefree(f.monic(), 1, sqf);
  std::uint64_t seed = 0x5eed;
  for (const Code c : f.coeffs()) seed = mix_seed(seed ^ c);
  Rng rng(seed);
  std::map<Poly, int> acc;
  for (const auto& [g, mult] : sqf) {
    Poly rest = g;
    Poly h = Poly::variable(g.field()) % rest;
    const Poly x = Poly::variable(g.field());
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
      h = powmod(h, Integer(g.field()->order()), rest);
      Poly part = gcd(h - x, rest);
      if (part.degree() > 0) {
        std::vector<Poly> pieces;
        equal_degree(part, d, rng, pieces);
        for (auto& p : pieces) acc[p] += mult;
        rest = (rest / part).monic();
        h = h % rest;
      }
    }
    if (rest.degree() > 0) acc[rest] += mult;
  }
  for (auto& [p, m] : acc) out.factors.emplace_back(p, m);
  return out;
}

std::vector<Code> roots(const Poly& f) {
  if (f.is_zero()) throw InputError("roots of the zero polynomial");
  std::vector<Code> out;
  for (const auto& [p, m] : factor_poly(f).factors) {
    if (p.degree() == 1) out.push_back(f.field()->neg(p.coeff(0)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Poly> monic_irreducibles(const FieldPtr& field, int degree) {
  std::vector<Poly> out;
  if (degree < 1) return out;
  static std::mutex mu;
  static std::map<std::pair<const FiniteField*, int>, std::vector<Poly>> cache;
  const auto key = std::make_pair(field.get(), degree);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const std::uint64_t q = field->order();
  Integer total = field_order_power(field, degree);
  if (total > Integer(50'000'000)) throw DomainError("irreducible enumeration too large");
  const auto count = static_cast<std::uint64_t>(total);
  for (std::uint64_t n = 0; n < count; ++n) {
    std::vector<Code> c(static_cast<std::size_t>(degree) + 1, 0);
    c[static_cast<std::size_t>(degree)] = 1;
    std::uint64_t rest = n;
    for (int i = 0; i < degree; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<Code>(rest % q);
      rest /= q;
    }
    if (degree > 1 && c[0] == 0) continue;
    Poly p(field, std::move(c));
    if (is_irreducible(p)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  std::lock_guard lock(mu);
  cache.emplace(key, out);
  return out;
}

}  // namespace cyclemod
