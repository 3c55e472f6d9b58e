#include "cyclemod/milnor/kelement.hpp"

#include "cyclemod/errors.hpp"

namespace cyclemod {

std::uint64_t residue_unit_order(const FieldPtr& base, const Poly& pi) {
  std::uint64_t r = 1;
  for (int i = 0; i < pi.degree(); ++i) {
    r *= base->order();
    if (r > field_size_cap()) throw DomainError("residue field of " + pi.to_string() + " exceeds the field size cap");
  }
  return r - 1;
}

KElement KElement::zero(const FieldRef& f, int n) {
  KElement x;
  x.field_ = f;
  x.n_ = n;
  if (n == 1 && f.is_rational()) x.unit_ = FactoredUnit(f.base);
  return x;
}

KElement KElement::integer(const FieldRef& f, Integer k) {
  KElement x = zero(f, 0);
  x.k0_ = std::move(k);
  return x;
}

KElement KElement::finite_unit(const FieldRef& f, std::uint64_t log) {
  if (!f.is_finite()) throw DomainError("finite unit over " + f.name());
  KElement x = zero(f, 1);
  x.log_ = log % (f.base->order() - 1);
  return x;
}

KElement KElement::finite_unit_unreduced(const FieldRef& f, std::uint64_t log) {
  if (!f.is_finite()) throw DomainError("finite unit over " + f.name());
  KElement x = zero(f, 1);
  x.log_ = log;
  return x;
}

KElement KElement::unit(const FieldRef& f, FactoredUnit u) {
  if (!f.is_rational() || u.field() != f.base) throw DomainError("factored unit over the wrong field");
  KElement x = zero(f, 1);
  x.unit_ = std::move(u);
  return x;
}

KElement KElement::tame(const FieldRef& f, Coords coords) {
  if (!f.is_rational()) throw DomainError("tame coordinates over " + f.name());
  KElement x = zero(f, 2);
  for (auto& [pi, l] : coords) {
    const std::uint64_t r = l % residue_unit_order(f.base, pi);
    if (r != 0) x.coords_.emplace(pi, r);
  }
  return x;
}

bool KElement::is_zero() const {
  if (n_ < 0) return true;
  if (n_ == 0) return k0_ == 0;
  if (n_ == 1) return field_.is_finite() ? log_ == 0 : unit_.is_one();
  if (n_ == 2 && field_.is_rational()) return coords_.empty();
  return true;
}

bool KElement::operator==(const KElement& o) const {
  return field_ == o.field_ && n_ == o.n_ && k0_ == o.k0_ && log_ == o.log_ && unit_ == o.unit_ &&
         coords_ == o.coords_;
}

std::string KElement::to_string() const {
  if (is_zero()) return "0";
  if (n_ == 0) return k0_.str();
  if (n_ == 1 && field_.is_finite()) return "{" + field_.base->format(field_.base->exp(log_)) + "}";
  if (n_ == 1) {
    bool small = true;
    for (const auto& [p, e] : unit_.factors()) small = small && e < 64 && e > -64;
    return "{" + (small ? unit_.expand().to_string(field_.var) : unit_.to_string(field_.var)) + "}";
  }
  std::string s = "[";
  bool first = true;
  for (const auto& [pi, l] : coords_) {
    if (!first) s += ", ";
    first = false;
    const Place v = Place::finite(field_, pi);
    s += pi.to_string(field_.var) + ": {" + v.residue_field()->format(v.residue_field()->exp(l)) + "}";
  }
  return s + "]";
}

namespace {

void check_compatible(const KElement& a, const KElement& b) {
  if (!(a.field() == b.field())) throw DomainError("K-elements over " + a.field().name() + " and " + b.field().name());
  if (a.degree() != b.degree()) throw DomainError("K-elements of degrees " + std::to_string(a.degree()) + " and " +
                                                  std::to_string(b.degree()));
}

}  // namespace

KElement k_add(const KElement& a, const KElement& b) {
  check_compatible(a, b);
  const FieldRef& f = a.field();
  const int n = a.degree();
  if (n < 0) return a;
  if (n == 0) return KElement::integer(f, a.k0() + b.k0());
  if (n == 1 && f.is_finite()) return KElement::finite_unit(f, a.log() + b.log());
  if (n == 1) return KElement::unit(f, a.unit() * b.unit());
  if (n == 2 && f.is_rational()) {
    KElement::Coords c = a.coords();
    for (const auto& [pi, l] : b.coords()) {
      const std::uint64_t order = residue_unit_order(f.base, pi);
      c[pi] = (c[pi] + l) % order;
    }
    return KElement::tame(f, std::move(c));
  }
  return KElement::zero(f, n);
}

KElement k_neg(const KElement& a) { return k_scale(a, -1); }

KElement k_sub(const KElement& a, const KElement& b) { return k_add(a, k_neg(b)); }

KElement k_scale(const KElement& a, const Integer& k) {
  const FieldRef& f = a.field();
  const int n = a.degree();
  if (n < 0) return a;
  if (n == 0) return KElement::integer(f, a.k0() * k);
  if (n == 1 && f.is_finite()) {
    const std::uint64_t order = f.base->order() - 1;
    return KElement::finite_unit(f, mul_mod(a.log(), mod_u64(k, order), order));
  }
  if (n == 1) return KElement::unit(f, a.unit().pow(k));
  if (n == 2 && f.is_rational()) {
    KElement::Coords c;
    for (const auto& [pi, l] : a.coords()) {
      const std::uint64_t order = residue_unit_order(f.base, pi);
      c[pi] = mul_mod(l, mod_u64(k, order), order);
    }
    return KElement::tame(f, std::move(c));
  }
  return KElement::zero(f, n);
}

bool k_eq(const KElement& a, const KElement& b) {
  check_compatible(a, b);
  return a == b;
}

}  // namespace cyclemod
