#include "cyclemod/exactfield/finite_field.hpp"

#include "cyclemod/errors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>

namespace cyclemod {

namespace {

using Vec = std::vector<std::uint32_t>;

// Dense polynomial helpers over F_p, used only while choosing moduli
// (the general Poly type needs an already constructed field).
void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec polymod(Vec a, const Vec& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t inv_lead = static_cast<std::uint32_t>(inverse_mod(f.back(), p));
  while (a.size() > df) {
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * inv_lead % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * f[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Vec polymulmod(const Vec& a, const Vec& b, const Vec& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return polymod(std::move(r), f, p);
}

Vec polypowmod(Vec base, std::uint64_t e, const Vec& f, std::uint32_t p) {
  Vec r{1};
  base = polymod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1U) r = polymulmod(r, base, f, p);
    base = polymulmod(base, base, f, p);
    e >>= 1U;
  }
  return r;
}

Vec polygcd(Vec a, Vec b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec r = polymod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Vec polysub(Vec a, const Vec& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// Rabin's test over F_p.
bool irreducible_over_prime(const Vec& f, std::uint32_t p) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
  const Vec x{0, 1};
  auto frob_power = [&](std::uint32_t k) {
    Vec r = x;
    for (std::uint32_t i = 0; i < k; ++i) r = polypowmod(r, p, f, p);
    return r;
  };
  if (!polymod(polysub(frob_power(n), x, p), f, p).empty()) return false;
  for (const auto l : prime_divisors(n)) {
    Vec g = polygcd(f, polysub(frob_power(n / static_cast<std::uint32_t>(l)), x, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::uint64_t upow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= b;
  return r;
}

std::atomic<std::uint64_t>& cap_ref() {
  static std::atomic<std::uint64_t> cap{1ULL << 20};
  return cap;
}

}  // namespace

std::uint64_t field_size_cap() { return cap_ref().load(); }
void set_field_size_cap(std::uint64_t cap) { cap_ref().store(cap); }

FiniteField::FiniteField(Token, std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(static_cast<std::uint32_t>(upow(p, m))), modulus_(std::move(modulus)) {
  const auto factors = prime_divisors(q_ - 1);
  generator_ = 1;
  if (q_ > 2) {
    for (Code c = 1; c < q_; ++c) {
      bool full = true;
      for (const auto l : factors) {
        if (slow_pow(c, (q_ - 1) / l) == 1) {
          full = false;
          break;
        }
      }
      if (full) {
        generator_ = c;
        break;
      }
    }
  }
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Code x = 1;
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = slow_mul(x, generator_);
  }
}

Code FiniteField::slow_mul(Code a, Code b) const {
  Vec va(m_, 0);
  Vec vb(m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    va[i] = a % p_;
    a /= p_;
    vb[i] = b % p_;
    b /= p_;
  }
  trim(va);
  trim(vb);
  const Vec r = polymulmod(va, vb, modulus_, p_);
  Code out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
  return out;
}

Code FiniteField::slow_pow(Code a, std::uint64_t e) const {
  Code r = 1;
  while (e > 0) {
    if (e & 1U) r = slow_mul(r, a);
    a = slow_mul(a, a);
    e >>= 1U;
  }
  return r;
}

Code FiniteField::add(Code a, Code b) const {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) return (a + b) % p_;
  Code out = 0;
  Code place = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

Code FiniteField::neg(Code a) const {
  if (p_ == 2) return a;
  if (m_ == 1) return (p_ - a) % p_;
  Code out = 0;
  Code place = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

Code FiniteField::sub(Code a, Code b) const { return add(a, neg(b)); }

Code FiniteField::inv(Code a) const {
  if (a == 0) throw DomainError("division by zero in " + name());
  const std::uint32_t k = log_[a];
  return exp_[k == 0 ? 0 : q_ - 1 - k];
}

Code FiniteField::pow(Code a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw DomainError("division by zero in " + name());
    return e == 0 ? 1 : 0;
  }
  return exp_[mul_mod(log_[a], mod_u64(e, q_ - 1), q_ - 1)];
}

Code FiniteField::pow(Code a, const Integer& e) const {
  if (a == 0) {
    if (e < 0) throw DomainError("division by zero in " + name());
    return e == 0 ? 1 : 0;
  }
  return exp_[mul_mod(log_[a], mod_u64(e, q_ - 1), q_ - 1)];
}

std::uint64_t FiniteField::log(Code a) const {
  if (a == 0 || a >= q_) throw DomainError("logarithm of zero in " + name());
  return log_[a];
}

std::uint64_t FiniteField::multiplicative_order(Code a) const {
  const std::uint64_t n = q_ - 1;
  return n / gcd_u64(log(a), n);
}

std::string FiniteField::format(Code c) const {
  if (m_ == 1) return std::to_string(c);
  if (c == 0) return "0";
  std::ostringstream os;
  bool first = true;
  std::vector<std::uint32_t> digits(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    digits[i] = c % p_;
    c /= p_;
  }
  for (std::uint32_t i = m_; i-- > 0;) {
    const auto d = digits[i];
    if (d == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << d;
      continue;
    }
    if (d != 1) os << d << "*";
    os << "a";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::string FiniteField::name() const { return "GF(" + std::to_string(q_) + ")"; }

FieldPtr make_field(std::uint64_t p, std::uint32_t m) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw InputError("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > field_size_cap()) {
      throw DomainError("field of order " + std::to_string(p) + "^" + std::to_string(m) +
                        " exceeds the size cap " + std::to_string(field_size_cap()));
    }
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::uint32_t>, FieldPtr> registry;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = registry.find({p, m}); it != registry.end()) return it->second;
  }
  const auto pp = static_cast<std::uint32_t>(p);
  Vec modulus;
  if (m == 1) {
    modulus = {0, 1};
  } else {
    // Lower coefficients enumerated with c_{m-1} most significant.
    const std::uint64_t count = q;
    for (std::uint64_t n = 0; n < count; ++n) {
      Vec f(m + 1, 0);
      f[m] = 1;
      std::uint64_t rest = n;
      for (std::uint32_t i = 0; i < m; ++i) {
        f[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (f[0] == 0) continue;
      if (irreducible_over_prime(f, pp)) {
        modulus = f;
        break;
      }
    }
  }
  auto field = std::make_shared<const FiniteField>(FiniteField::Token{}, pp, m, modulus);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = registry.emplace(std::make_pair(p, m), field);
  return it->second;
}

FieldPtr field_of_order(std::uint64_t q) {
  if (q < 2) throw InputError("field order must be a prime power >= 2");
  const auto primes = prime_divisors(q);
  if (primes.size() != 1) throw InputError("field order " + std::to_string(q) + " is not a prime power");
  std::uint32_t m = 0;
  std::uint64_t r = q;
  while (r > 1) {
    r /= primes[0];
    ++m;
  }
  return make_field(primes[0], m);
}

// ---------------------------------------------------------------- maps

namespace {

Code eval_root_poly(const FieldPtr& src, const FieldPtr& dst, Code x, Code root_image) {
  // x = sum d_i a^i over F_p  ->  sum d_i root_image^i in dst.
  const std::uint32_t p = src->characteristic();
  std::vector<std::uint32_t> digits(src->degree());
  for (auto& d : digits) {
    d = x % p;
    x /= p;
  }
  Code acc = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    acc = dst->add(dst->mul(acc, root_image), dst->from_int(digits[i]));
  }
  return acc;
}

Code eval_modulus(const FieldPtr& src, const FieldPtr& dst, Code y) {
  const auto& f = src->modulus();
  Code acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = dst->add(dst->mul(acc, y), dst->from_int(f[i]));
  return acc;
}

}  // namespace

FiniteMap::FiniteMap(FieldPtr src, FieldPtr dst, Code root_image)
    : src_(std::move(src)), dst_(std::move(dst)), root_image_(root_image) {
  if (src_->characteristic() != dst_->characteristic() || dst_->degree() % src_->degree() != 0) {
    throw DomainError("no embedding " + src_->name() + " -> " + dst_->name());
  }
  if (eval_modulus(src_, dst_, root_image_) != 0) {
    throw DomainError("root image is not a root of the modulus of " + src_->name());
  }
  gen_log_ = dst_->log(eval_root_poly(src_, dst_, src_->generator(), root_image_));
}

bool FiniteMap::in_image(Code y) const {
  if (y == 0) return true;
  const std::uint64_t n = (dst_->order() - 1ULL) / (src_->order() - 1ULL);
  return dst_->log(y) % n == 0;
}

std::uint64_t FiniteMap::twist() const {
  const std::uint64_t n = (dst_->order() - 1ULL) / (src_->order() - 1ULL);
  return gen_log_ / n;
}

Code FiniteMap::preimage(Code y) const {
  if (y == 0) return 0;
  const std::uint64_t n = (dst_->order() - 1ULL) / (src_->order() - 1ULL);
  const std::uint64_t l = dst_->log(y);
  if (l % n != 0) throw DomainError("element is not in the image of " + src_->name());
  const std::uint64_t qs = src_->order() - 1ULL;
  const std::uint64_t k = mul_mod((l / n) % qs, inverse_mod(twist() % qs, qs), qs);
  return src_->exp(k);
}

FiniteMap compose(const FiniteMap& second, const FiniteMap& first) {
  if (first.dst() != second.src()) throw DomainError("cannot compose field maps with mismatched fields");
  return FiniteMap(first.src(), second.dst(), second.apply(first.root_image()));
}

FiniteMap identity_map(const FieldPtr& f) { return FiniteMap(f, f, f->root()); }

std::vector<FiniteMap> all_embeddings(const FieldPtr& src, const FieldPtr& dst) {
  std::vector<FiniteMap> out;
  if (src->characteristic() != dst->characteristic() || dst->degree() % src->degree() != 0) return out;
  if (src->degree() == 1) {
    out.emplace_back(src, dst, 0);
    return out;
  }
  // Roots lie in the subfield of order |src|: g_dst^{N k}.
  const std::uint64_t n = (dst->order() - 1ULL) / (src->order() - 1ULL);
  std::vector<Code> roots;
  for (std::uint64_t k = 0; k + 1 < src->order(); ++k) {
    const Code y = dst->exp(n * k);
    if (eval_modulus(src, dst, y) == 0) roots.push_back(y);
  }
  std::sort(roots.begin(), roots.end());
  for (const Code r : roots) out.emplace_back(src, dst, r);
  return out;
}

FiniteMap default_embedding(const FieldPtr& src, const FieldPtr& dst) {
  static std::mutex mu;
  static std::map<std::pair<const FiniteField*, const FiniteField*>, FiniteMap> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find({src.get(), dst.get()}); it != cache.end()) return it->second;
  }
  auto all = all_embeddings(src, dst);
  if (all.empty()) throw DomainError("no embedding " + src->name() + " -> " + dst->name());
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(src.get(), dst.get()), all.front()).first->second;
}

std::optional<FiniteMap> find_embedding(const FieldPtr& src, const FieldPtr& dst,
                                        const std::vector<std::pair<Code, Code>>& constraints) {
  for (const auto& map : all_embeddings(src, dst)) {
    bool ok = true;
    for (const auto& [x, y] : constraints) {
      if (map.apply(x) != y) {
        ok = false;
        break;
      }
    }
    if (ok) return map;
  }
  return std::nullopt;
}

Code norm_along(const FiniteMap& map, Code x) {
  const auto& ext = map.dst();
  const auto& sub = map.src();
  if (x == 0) return 0;
  const std::uint64_t n = (ext->order() - 1ULL) / (sub->order() - 1ULL);
  return map.preimage(ext->exp(mul_mod(ext->log(x), n, ext->order() - 1ULL)));
}

FFElem norm_ff(const FieldPtr& sub, const FieldPtr& ext, const FFElem& x) {
  if (x.field != ext) throw DomainError("norm_ff: element does not belong to " + ext->name());
  const auto map = default_embedding(sub, ext);
  return FFElem{sub, norm_along(map, x.code)};
}

}  // namespace cyclemod
