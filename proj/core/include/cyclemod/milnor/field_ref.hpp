#pragma once

#include "cyclemod/exactfield/rational_function.hpp"

#include <optional>
#include <string>

namespace cyclemod {

/// A field of the universe: F_q or F_q(var). The variable name is only a
/// label for printing and does not take part in equality. Residue fields
/// of places are represented by their canonical finite field (see Place).
struct FieldRef {
  enum class Kind { Finite, Rational };

  Kind kind = Kind::Finite;
  FieldPtr base;
  std::string var = "t";

  static FieldRef finite(FieldPtr f) { return {Kind::Finite, std::move(f), "t"}; }
  static FieldRef rational(FieldPtr f, std::string var = "t") { return {Kind::Rational, std::move(f), std::move(var)}; }

  bool is_finite() const { return kind == Kind::Finite; }
  bool is_rational() const { return kind == Kind::Rational; }
  /// "GF(q)" or "GF(q)(t)".
  std::string name() const;

  bool operator==(const FieldRef& o) const { return kind == o.kind && base == o.base; }
};

/// A morphism of the universe, always carried explicitly:
///   F_q -> F_q'          (a FiniteMap),
///   F_q -> F_q'(t)       (constants, transcendental),
///   F_q(t) -> F_q'(s)    (constants along a FiniteMap, t -> image(s)).
/// The last kind is finite whenever the image is non-constant; it is a
/// constant extension when the image is s itself.
class FieldMap {
 public:
  FieldMap() = default;

  static FieldMap finite(FiniteMap m);
  static FieldMap constants(FiniteMap m, std::string var = "t");
  /// Throws DomainError if `image` is constant or not over m.dst().
  static FieldMap rational(FiniteMap m, RationalFunction image, std::string src_var = "t",
                           std::string dst_var = "t");
  static FieldMap constant_extension(FiniteMap m, std::string var = "t");
  static FieldMap identity(const FieldRef& f);

  const FieldRef& src() const { return src_; }
  const FieldRef& dst() const { return dst_; }
  const FiniteMap& constant_map() const { return m_; }
  /// Image of the source variable; set iff src is rational.
  const std::optional<RationalFunction>& image() const { return image_; }

  /// Finite as an extension of fields.
  bool is_finite() const { return src_.kind == dst_.kind; }
  bool is_constant_extension() const;
  /// [dst : src]; throws DomainError for transcendental maps.
  Integer degree() const;

  Code apply(Code c) const { return m_.apply(c); }
  RationalFunction apply(const RationalFunction& f) const;
  FactoredUnit apply(const FactoredUnit& u) const;

  std::string to_string() const;

  bool operator==(const FieldMap& o) const {
    return src_ == o.src_ && dst_ == o.dst_ && m_ == o.m_ && image_ == o.image_;
  }

 private:
  FieldRef src_;
  FieldRef dst_;
  FiniteMap m_;
  std::optional<RationalFunction> image_;
};

/// second ∘ first.
FieldMap compose(const FieldMap& second, const FieldMap& first);

}  // namespace cyclemod
