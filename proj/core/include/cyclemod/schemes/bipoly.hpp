#pragma once

#include "cyclemod/exactfield/rational_function.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace cyclemod {

/// Polynomial in x and y over a finite field: (i, j) -> coefficient of
/// x^i y^j, nonzero entries only.
class BiPoly {
 public:
  using Terms = std::map<std::pair<int, int>, Code>;

  BiPoly() = default;
  BiPoly(FieldPtr field, Terms terms);

  static BiPoly constant(FieldPtr field, Code c);
  static BiPoly x(FieldPtr field);
  static BiPoly y(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for zero.
  int degree() const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly pow(long e) const;
  bool operator==(const BiPoly& o) const { return field_ == o.field_ && terms_ == o.terms_; }

  /// h(X(t), Y(t)).
  RationalFunction eval(const RationalFunction& x, const RationalFunction& y) const;
  /// The top-degree part at (1, u): h_top(1, u) as a polynomial in u.
  Poly top_at_infinity() const;

  std::string to_string() const;

 private:
  FieldPtr field_;
  Terms terms_;
};

/// Polynomial literal in x and y ("y - x^2", "x*y - 1"); negative powers
/// and division are rejected.
BiPoly parse_bipoly(std::string_view text, const FieldPtr& field);

}  // namespace cyclemod
