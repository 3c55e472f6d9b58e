#pragma once

#include "cyclemod/exactfield/poly.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclemod {

/// Element of F_q(t): num/den with den monic and gcd(num, den) = 1.
/// Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(FieldPtr field);
  explicit RationalFunction(Poly num);
  /// Normalizes; throws DomainError on a zero denominator.
  RationalFunction(Poly num, Poly den);

  static RationalFunction constant(FieldPtr field, Code c);
  static RationalFunction variable(FieldPtr field);

  const FieldPtr& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Constant value; requires is_constant().
  Code constant_value() const { return num_.is_zero() ? 0 : num_.coeff(0); }
  /// max(deg num, deg den): the degree of t -> f(t) as a map P^1 -> P^1.
  int degree() const { return std::max(num_.degree(), den_.degree()); }

  RationalFunction inverse() const;
  RationalFunction pow(long e) const;
  RationalFunction operator-() const { return RationalFunction(-num_, den_); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// f(g); g must not be constant unless f is.
  RationalFunction compose(const RationalFunction& g) const;
  RationalFunction mapped(const FiniteMap& map) const;
  /// Value at a point of the coefficient field; throws DomainError at a pole.
  Code eval(Code x) const;

  std::string to_string(std::string_view var = "t") const;

 private:
  Poly num_;
  Poly den_;
};

/// c * prod pi_i^{e_i}: nonzero constant times distinct monic irreducibles
/// with nonzero exponents, sorted by pi.
class FactoredUnit {
 public:
  using Factor = std::pair<Poly, Integer>;

  FactoredUnit() = default;
  explicit FactoredUnit(FieldPtr field, Code constant = 1);
  /// Merges equal factors and drops zero exponents; factors must be monic irreducible.
  FactoredUnit(FieldPtr field, Code constant, std::vector<Factor> factors);

  const FieldPtr& field() const { return field_; }
  Code constant() const { return constant_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return constant_ == 1 && factors_.empty(); }
  /// Exponent of pi (0 if absent).
  Integer exponent(const Poly& pi) const;
  /// Sum of e_i deg pi_i; minus the valuation at infinity.
  Integer degree() const;

  FactoredUnit operator*(const FactoredUnit& o) const;
  FactoredUnit inverse() const;
  FactoredUnit pow(const Integer& e) const;
  bool operator==(const FactoredUnit& o) const {
    return field_ == o.field_ && constant_ == o.constant_ && factors_ == o.factors_;
  }

  RationalFunction expand() const;
  std::string to_string(std::string_view var = "t") const;

 private:
  FieldPtr field_;
  Code constant_ = 1;
  std::vector<Factor> factors_;
};

/// Canonical factored form of a nonzero rational function.
FactoredUnit unit_factor(const RationalFunction& x);

}  // namespace cyclemod
