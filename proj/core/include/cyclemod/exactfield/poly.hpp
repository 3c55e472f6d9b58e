#pragma once

#include "cyclemod/exactfield/finite_field.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclemod {

/// Dense univariate polynomial over a finite field, coefficients low
/// degree first with no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Code> coeffs);

  static Poly constant(FieldPtr field, Code c);
  static Poly monomial(FieldPtr field, Code c, std::size_t k);
  static Poly variable(FieldPtr field) { return monomial(std::move(field), 1, 1); }

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Code lead() const { return c_.empty() ? 0 : c_.back(); }
  Code coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Code>& coeffs() const { return c_; }

  Poly monic() const;
  Poly scaled(Code c) const;
  Poly derivative() const;
  /// Coefficients pushed through an embedding of the coefficient field.
  Poly mapped(const FiniteMap& map) const;
  Code eval(Code x) const;
  /// Evaluate with coefficients mapped through `map` at x in map.dst().
  Code eval_mapped(const FiniteMap& map, Code x) const;
  /// f(g).
  Poly compose(const Poly& g) const;
  /// t^deg f(1/t); the reciprocal polynomial.
  Poly reversed() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);

  /// Quotient and remainder; b nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }
  /// Graded-lexicographic: degree first, then coefficient codes from the top.
  std::strong_ordering operator<=>(const Poly& o) const;

  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<Code> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly powmod(Poly base, const Integer& e, const Poly& mod);
/// Multiplicity of `pi` in f (f nonzero).
int valuation(const Poly& f, const Poly& pi);
/// Exact division f / pi^k for the k returned by valuation.
Poly strip(const Poly& f, const Poly& pi, int k);

bool is_irreducible(const Poly& f);

struct Factorization {
  Code unit = 1;  // leading coefficient
  std::vector<std::pair<Poly, int>> factors;  // monic irreducible, multiplicity; ascending
};

/// Squarefree decomposition, distinct-degree split and Cantor-Zassenhaus
/// equal-degree split (seeded, output sorted so it does not depend on the
/// random draws). Throws InputError on the zero polynomial.
Factorization factor_poly(const Poly& f);

/// Distinct roots in the coefficient field, ascending by code.
std::vector<Code> roots(const Poly& f);

/// All monic irreducibles of the given degree, ascending.
std::vector<Poly> monic_irreducibles(const FieldPtr& field, int degree);

}  // namespace cyclemod
