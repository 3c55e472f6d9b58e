#pragma once

#include "cyclemod/errors.hpp"
#include "cyclemod/exactfield/rational_function.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cyclemod {

/// Arithmetic expression over integers and named symbols, as written in
/// literals like "t^2+2*t+1", "(x+1)/(x-a)" or "2t(t+1)^-1".
struct Expr {
  enum class Kind { Integer, Symbol, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind = Kind::Integer;
  Integer value;       // Integer
  std::string name;    // Symbol
  long exponent = 0;   // Pow
  std::vector<Expr> kids;
  std::size_t pos = 0;
};

/// Throws InputError with the offending position.
Expr parse_expr(std::string_view text);

/// Folds an expression. Ops provides integer(Integer, pos), symbol(name, pos),
/// divide(T, T, pos) and power(T, long, pos); T supplies +, - and *.
template <class T, class Ops>
T evaluate(const Expr& e, const Ops& ops) {
  switch (e.kind) {
    case Expr::Kind::Integer:
      return ops.integer(e.value, e.pos);
    case Expr::Kind::Symbol:
      return ops.symbol(e.name, e.pos);
    case Expr::Kind::Neg:
      return -evaluate<T>(e.kids[0], ops);
    case Expr::Kind::Add:
      return evaluate<T>(e.kids[0], ops) + evaluate<T>(e.kids[1], ops);
    case Expr::Kind::Sub:
      return evaluate<T>(e.kids[0], ops) - evaluate<T>(e.kids[1], ops);
    case Expr::Kind::Mul:
      return evaluate<T>(e.kids[0], ops) * evaluate<T>(e.kids[1], ops);
    case Expr::Kind::Div:
      return ops.divide(evaluate<T>(e.kids[0], ops), evaluate<T>(e.kids[1], ops), e.pos);
    case Expr::Kind::Pow:
      return ops.power(evaluate<T>(e.kids[0], ops), e.exponent, e.pos);
  }
  throw InputError("bad expression node", e.pos);
}

/// Symbols other than `var` and `a` (the root of the field's modulus,
/// only for non-prime fields) are rejected.
RationalFunction parse_rational(std::string_view text, const FieldPtr& field, std::string_view var = "t");
Code parse_constant(std::string_view text, const FieldPtr& field);

struct FieldLiteral {
  FieldPtr base;
  std::optional<std::string> var;  // set for "GF(q)(t)"
};

/// "GF(q)" or "GF(q)(var)".
FieldLiteral parse_field(std::string_view text);

}  // namespace cyclemod
