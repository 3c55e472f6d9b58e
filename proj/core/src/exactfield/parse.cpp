#include "cyclemod/exactfield/parse.hpp"

#include <cctype>

namespace cyclemod {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected character '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw InputError(msg, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  static Expr node(Expr::Kind k, std::size_t pos, std::vector<Expr> kids) {
    Expr e;
    e.kind = k;
    e.pos = pos;
    e.kids = std::move(kids);
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (true) {
      skip();
      const std::size_t pos = i_;
      if (eat('+')) {
        lhs = node(Expr::Kind::Add, pos, {std::move(lhs), term()});
      } else if (eat('-')) {
        lhs = node(Expr::Kind::Sub, pos, {std::move(lhs), term()});
      } else {
        return lhs;
      }
    }
  }

  bool starts_implicit() {
    skip();
    if (i_ >= s_.size()) return false;
    const char c = s_[i_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Expr term() {
    Expr lhs = unary();
    while (true) {
      skip();
      const std::size_t pos = i_;
      if (eat('*')) {
        lhs = node(Expr::Kind::Mul, pos, {std::move(lhs), unary()});
      } else if (eat('/')) {
        lhs = node(Expr::Kind::Div, pos, {std::move(lhs), unary()});
      } else if (starts_implicit()) {
        lhs = node(Expr::Kind::Mul, pos, {std::move(lhs), power()});
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    skip();
    const std::size_t pos = i_;
    if (eat('-')) return node(Expr::Kind::Neg, pos, {unary()});
    if (eat('+')) return unary();
    return power();
  }

  long exponent() {
    skip();
    const bool paren = eat('(');
    bool neg = eat('-');
    skip();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected integer exponent");
    long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_] - '0');
      if (v > 1'000'000) fail("exponent too large");
      ++i_;
    }
    if (paren && !eat(')')) fail("expected ')'");
    return neg ? -v : v;
  }

  Expr power() {
    Expr base = atom();
    skip();
    const std::size_t pos = i_;
    if (eat('^')) {
      Expr e = node(Expr::Kind::Pow, pos, {std::move(base)});
      e.exponent = exponent();
      return e;
    }
    return base;
  }

  Expr atom() {
    skip();
    const std::size_t pos = i_;
    if (i_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[i_];
    if (eat('(')) {
      Expr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e;
      e.kind = Expr::Kind::Integer;
      e.pos = pos;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        e.value = e.value * 10 + (s_[i_] - '0');
        ++i_;
      }
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      Expr e;
      e.kind = Expr::Kind::Symbol;
      e.pos = pos;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
        e.name.push_back(s_[i_]);
        ++i_;
      }
      return e;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

struct RationalOps {
  FieldPtr field;
  std::string_view var;

  RationalFunction integer(const Integer& v, std::size_t) const {
    return RationalFunction::constant(field, static_cast<Code>(mod_u64(v, field->characteristic())));
  }
  RationalFunction symbol(const std::string& name, std::size_t pos) const {
    if (!var.empty() && name == var) return RationalFunction::variable(field);
    if (name == "a" && field->degree() > 1) return RationalFunction::constant(field, field->root());
    throw InputError("unknown symbol '" + name + "'", pos);
  }
  RationalFunction divide(const RationalFunction& x, const RationalFunction& y, std::size_t pos) const {
    if (y.is_zero()) throw InputError("division by zero", pos);
    return x / y;
  }
  RationalFunction power(const RationalFunction& x, long e, std::size_t pos) const {
    if (e < 0 && x.is_zero()) throw InputError("negative power of zero", pos);
    return x.pow(e);
  }
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

RationalFunction parse_rational(std::string_view text, const FieldPtr& field, std::string_view var) {
  return evaluate<RationalFunction>(parse_expr(text), RationalOps{field, var});
}

Code parse_constant(std::string_view text, const FieldPtr& field) {
  RationalFunction r = evaluate<RationalFunction>(parse_expr(text), RationalOps{field, ""});
  return r.constant_value();
}

FieldLiteral parse_field(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](std::string_view tok) {
    skip();
    if (text.substr(i, tok.size()) != tok) throw InputError("expected '" + std::string(tok) + "'", i);
    i += tok.size();
  };
  expect("GF(");
  skip();
  const std::size_t qpos = i;
  std::uint64_t q = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    q = q * 10 + static_cast<std::uint64_t>(text[i] - '0');
    if (q > (1ULL << 40)) throw InputError("field order too large", qpos);
    ++i;
  }
  if (i == qpos) throw InputError("expected field order", qpos);
  expect(")");
  FieldLiteral out;
  try {
    out.base = field_of_order(q);
  } catch (const InputError& e) {
    throw InputError(e.what(), qpos);
  }
  skip();
  if (i < text.size()) {
    expect("(");
    skip();
    const std::size_t vpos = i;
    std::string var;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) var.push_back(text[i++]);
    if (var.empty() || !std::isalpha(static_cast<unsigned char>(var[0]))) throw InputError("expected variable name", vpos);
    if (var == "a") throw InputError("'a' is reserved for the field generator root", vpos);
    expect(")");
    skip();
    if (i != text.size()) throw InputError("trailing characters in field literal", i);
    out.var = var;
  }
  return out;
}

}  // namespace cyclemod
