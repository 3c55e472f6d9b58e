#include "cyclemod/schemes/bipoly.hpp"

#include "cyclemod/errors.hpp"
#include "cyclemod/exactfield/parse.hpp"

namespace cyclemod {

BiPoly::BiPoly(FieldPtr field, Terms terms) : field_(std::move(field)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

BiPoly BiPoly::constant(FieldPtr field, Code c) { return BiPoly(field, {{{0, 0}, c}}); }
BiPoly BiPoly::x(FieldPtr field) { return BiPoly(field, {{{1, 0}, 1}}); }
BiPoly BiPoly::y(FieldPtr field) { return BiPoly(field, {{{0, 1}, 1}}); }

int BiPoly::degree() const {
  int d = -1;
  for (const auto& [ij, c] : terms_) d = std::max(d, ij.first + ij.second);
  return d;
}

BiPoly BiPoly::operator-() const {
  Terms t;
  for (const auto& [ij, c] : terms_) t[ij] = field_->neg(c);
  return BiPoly(field_, std::move(t));
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly::Terms t = a.terms_;
  for (const auto& [ij, c] : b.terms_) t[ij] = a.field_->add(t[ij], c);
  return BiPoly(a.field_, std::move(t));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly::Terms t;
  for (const auto& [i, c] : a.terms_) {
    for (const auto& [j, d] : b.terms_) {
      auto& slot = t[{i.first + j.first, i.second + j.second}];
      slot = a.field_->add(slot, a.field_->mul(c, d));
    }
  }
  return BiPoly(a.field_, std::move(t));
}

BiPoly BiPoly::pow(long e) const {
  BiPoly out = constant(field_, 1);
  for (long i = 0; i < e; ++i) out = out * *this;
  return out;
}

RationalFunction BiPoly::eval(const RationalFunction& x, const RationalFunction& y) const {
  RationalFunction acc(field_);
  for (const auto& [ij, c] : terms_) {
    acc = acc + RationalFunction::constant(field_, c) * x.pow(ij.first) * y.pow(ij.second);
  }
  return acc;
}

Poly BiPoly::top_at_infinity() const {
  const int d = degree();
  std::vector<Code> coeffs(static_cast<std::size_t>(std::max(d, 0)) + 1, 0);
  for (const auto& [ij, c] : terms_) {
    if (ij.first + ij.second == d) coeffs[static_cast<std::size_t>(ij.second)] = c;
  }
  return Poly(field_, std::move(coeffs));
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest total degree first, then by the power of x.
  std::vector<std::pair<std::pair<int, int>, Code>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    return da != db ? da > db : a.first.first > b.first.first;
  });
  for (const auto& [ij, c] : sorted) {
    std::string mono;
    auto var = [&](const char* v, int k) {
      if (k == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (k > 1) mono += "^" + std::to_string(k);
    };
    var("x", ij.first);
    var("y", ij.second);
    std::string coef = field_->format(c);
    const bool composite = coef.find_first_of("+*") != std::string::npos;
    if (composite) coef = "(" + coef + ")";
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (c == 1) {
      term = mono;
    } else {
      term = coef + "*" + mono;
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out;
}

namespace {

struct BiOps {
  FieldPtr field;

  BiPoly integer(const Integer& v, std::size_t) const {
    return BiPoly::constant(field, static_cast<Code>(mod_u64(v, field->characteristic())));
  }
  BiPoly symbol(const std::string& name, std::size_t pos) const {
    if (name == "x") return BiPoly::x(field);
    if (name == "y") return BiPoly::y(field);
    if (name == "a" && field->degree() > 1) return BiPoly::constant(field, field->root());
    throw InputError("unknown symbol '" + name + "'", pos);
  }
  BiPoly divide(const BiPoly&, const BiPoly&, std::size_t pos) const {
    throw InputError("division in a polynomial", pos);
  }
  BiPoly power(const BiPoly& b, long e, std::size_t pos) const {
    if (e < 0) throw InputError("negative power in a polynomial", pos);
    return b.pow(e);
  }
};

}  // namespace

BiPoly parse_bipoly(std::string_view text, const FieldPtr& field) {
  return evaluate<BiPoly>(parse_expr(text), BiOps{field});
}

}  // namespace cyclemod
