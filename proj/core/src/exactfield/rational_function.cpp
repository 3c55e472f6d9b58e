#include "cyclemod/exactfield/rational_function.hpp"

#include "cyclemod/errors.hpp"

#include <algorithm>
#include <map>

namespace cyclemod {

RationalFunction::RationalFunction(FieldPtr field) : num_(field), den_(Poly::constant(field, 1)) {}

RationalFunction::RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}

RationalFunction::RationalFunction(Poly num, Poly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly(den.field());
    den_ = Poly::constant(den.field(), 1);
    return;
  }
  Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = num / g;
    den = den / g;
  }
  const Code lc = den.lead();
  if (lc != 1) {
    const Code inv = den.field()->inv(lc);
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction RationalFunction::constant(FieldPtr field, Code c) {
  return RationalFunction(Poly::constant(std::move(field), c));
}

RationalFunction RationalFunction::variable(FieldPtr field) { return RationalFunction(Poly::variable(std::move(field))); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
  RationalFunction base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  RationalFunction r = constant(field(), 1);
  while (k > 0) {
    if (k & 1U) r = r * base;
    base = base * base;
    k >>= 1U;
  }
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DomainError("division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

namespace {

// sum_i c_i a^i b^{n-i} for p = sum c_i t^i of degree <= n.
Poly homogenize(const Poly& p, const Poly& a, const Poly& b, int n) {
  const auto& f = a.field();
  Poly acc(f);
  std::vector<Poly> bpow(static_cast<std::size_t>(n) + 1, Poly::constant(f, 1));
  for (int i = 1; i <= n; ++i) bpow[static_cast<std::size_t>(i)] = bpow[static_cast<std::size_t>(i) - 1] * b;
  Poly apow = Poly::constant(f, 1);
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(static_cast<std::size_t>(i)) != 0) {
      acc = acc + (apow * bpow[static_cast<std::size_t>(n - i)]).scaled(p.coeff(static_cast<std::size_t>(i)));
    }
    apow = apow * a;
  }
  return acc;
}

}  // namespace

RationalFunction RationalFunction::compose(const RationalFunction& g) const {
  if (field() != g.field()) throw DomainError("composition over different fields");
  if (is_constant()) return *this;
  const int n = std::max(num_.degree(), den_.degree());
  Poly top = homogenize(num_, g.num_, g.den_, n);
  Poly bottom = homogenize(den_, g.num_, g.den_, n);
  return RationalFunction(top, bottom);
}

RationalFunction RationalFunction::mapped(const FiniteMap& map) const {
  return RationalFunction(num_.mapped(map), den_.mapped(map));
}

Code RationalFunction::eval(Code x) const {
  const Code d = den_.eval(x);
  if (d == 0) throw DomainError("evaluation at a pole");
  return field()->div(num_.eval(x), d);
}

std::string RationalFunction::to_string(std::string_view var) const {
  if (den_.is_one()) return num_.to_string(var);
  auto wrap = [&](const Poly& p) {
    std::string s = p.to_string(var);
    const bool simple = p.degree() <= 0 || s.find('+') == std::string::npos;
    return simple ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

FactoredUnit::FactoredUnit(FieldPtr field, Code constant) : field_(std::move(field)), constant_(constant) {
  if (constant_ == 0) throw DomainError("factored unit with zero constant");
}

FactoredUnit::FactoredUnit(FieldPtr field, Code constant, std::vector<Factor> factors)
    : FactoredUnit(std::move(field), constant) {
  std::map<Poly, Integer> acc;
  for (auto& [p, e] : factors) {
    if (p.field() != field_ || !p.is_monic() || p.degree() < 1) {
      throw DomainError("factored unit needs monic nonconstant factors over " + field_->name());
    }
    acc[p] += e;
  }
  for (auto& [p, e] : acc) {
    if (e != 0) factors_.emplace_back(p, e);
  }
}

Integer FactoredUnit::exponent(const Poly& pi) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), pi,
                             [](const Factor& f, const Poly& p) { return f.first < p; });
  if (it != factors_.end() && it->first == pi) return it->second;
  return 0;
}

Integer FactoredUnit::degree() const {
  Integer d = 0;
  for (const auto& [p, e] : factors_) d += e * p.degree();
  return d;
}

FactoredUnit FactoredUnit::operator*(const FactoredUnit& o) const {
  if (field_ != o.field_) throw DomainError("product of units over different fields");
  std::vector<Factor> all = factors_;
  all.insert(all.end(), o.factors_.begin(), o.factors_.end());
  return FactoredUnit(field_, field_->mul(constant_, o.constant_), std::move(all));
}

FactoredUnit FactoredUnit::inverse() const { return pow(-1); }

FactoredUnit FactoredUnit::pow(const Integer& e) const {
  std::vector<Factor> fs;
  fs.reserve(factors_.size());
  for (const auto& [p, k] : factors_) fs.emplace_back(p, k * e);
  return FactoredUnit(field_, field_->pow(constant_, e), std::move(fs));
}

RationalFunction FactoredUnit::expand() const {
  Poly num = Poly::constant(field_, constant_);
  Poly den = Poly::constant(field_, 1);
  for (const auto& [p, e] : factors_) {
    if (e > 4096 || e < -4096) throw DomainError("exponent too large to expand");
    Poly& side = e > 0 ? num : den;
    const long k = static_cast<long>(e > 0 ? e : Integer(-e));
    for (long i = 0; i < k; ++i) side = side * p;
  }
  return RationalFunction(num, den);
}

std::string FactoredUnit::to_string(std::string_view var) const {
  std::string out = field_->format(constant_);
  for (const auto& [p, e] : factors_) {
    out += "*(" + p.to_string(var) + ")";
    if (e != 1) out += "^" + (e < 0 ? "(" + e.str() + ")" : e.str());
  }
  return out;
}

FactoredUnit unit_factor(const RationalFunction& x) {
  if (x.is_zero()) throw InputError("unit_factor of zero");
  auto fn = factor_poly(x.num());
  auto fd = factor_poly(x.den());
  std::vector<FactoredUnit::Factor> fs;
  for (auto& [p, e] : fn.factors) fs.emplace_back(p, e);
  for (auto& [p, e] : fd.factors) fs.emplace_back(p, -e);
  return FactoredUnit(x.field(), x.field()->div(fn.unit, fd.unit), std::move(fs));
}

}  // namespace cyclemod
