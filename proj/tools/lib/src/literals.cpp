#include "cyclemod_cli/literals.hpp"

#include "cyclemod/errors.hpp"
#include "cyclemod/milnor/milnor.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace cyclemod::cli {

namespace {

std::size_t skip_space(const std::string& s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

struct Piece {
  std::string text;
  std::size_t pos;
};

// Splits on `sep` outside (), [] and {}; offsets are kept.
std::vector<Piece> split_top(const std::string& s, std::size_t begin, std::size_t end, char sep) {
  std::vector<Piece> out;
  int depth = 0;
  std::size_t start = begin;
  for (std::size_t i = begin; i < end; ++i) {
    const char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back({s.substr(start, i - start), start});
      start = i + 1;
    }
  }
  out.push_back({s.substr(start, end - start), start});
  return out;
}

// Re-raises an InputError from a sub-literal with the offset added.
template <class F>
auto at_offset(std::size_t offset, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    const std::size_t p = e.position() == InputError::npos ? offset : offset + e.position();
    throw InputError(e.what(), p);
  }
}

std::string trimmed(const Piece& p, std::size_t& pos) {
  std::size_t a = 0, b = p.text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(p.text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(p.text[b - 1]))) --b;
  pos = p.pos + a;
  return p.text.substr(a, b - a);
}

long parse_long(const std::string& s, std::size_t pos) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw InputError("expected an integer, got '" + s + "'", pos);
}

}  // namespace

FieldRef parse_field_ref(const std::string& text) {
  const FieldLiteral lit = parse_field(text);
  return lit.var ? FieldRef::rational(lit.base, *lit.var) : FieldRef::finite(lit.base);
}

KElement parse_symbol(const std::string& text, const std::optional<FieldRef>& fallback) {
  // Suffixes: "@field" then ":n", both outside braces.
  std::size_t body_end = text.size();
  std::size_t at = std::string::npos, colon = std::string::npos;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '{' || c == '(') ++depth;
    if (c == '}' || c == ')') --depth;
    if (depth != 0) continue;
    if (c == '@' && at == std::string::npos) at = i;
    if (c == ':') colon = i;
  }
  if (at != std::string::npos) body_end = at;
  else if (colon != std::string::npos) body_end = colon;

  std::optional<FieldRef> field = fallback;
  if (at != std::string::npos) {
    const std::size_t fend = colon != std::string::npos && colon > at ? colon : text.size();
    field = at_offset(at + 1, [&] { return parse_field_ref(text.substr(at + 1, fend - at - 1)); });
  }
  if (!field) throw InputError("symbol needs a field: append @GF(q)(t) or pass --field", text.size());

  std::optional<long> degree;
  if (colon != std::string::npos && (at == std::string::npos || colon > at)) {
    std::size_t p = 0;
    const std::string d = trimmed({text.substr(colon + 1), colon + 1}, p);
    degree = parse_long(d, p);
  }

  std::size_t pos = 0;
  const std::string body = trimmed({text.substr(0, body_end), 0}, pos);
  if (body.empty()) throw InputError("empty symbol literal", pos);

  KElement x;
  if (body.front() != '{') {
    const Integer k = at_offset(pos, [&] { return Integer(parse_long(body, 0)); });
    x = KElement::integer(*field, k);
  } else {
    if (body.back() != '}') throw InputError("unterminated symbol: expected '}'", pos + body.size());
    const std::size_t inner = pos + 1;
    std::vector<Piece> parts;
    if (skip_space(text, inner) < pos + body.size() - 1) parts = split_top(text, inner, pos + body.size() - 1, ',');
    if (field->is_rational()) {
      std::vector<RationalFunction> es;
      for (const auto& piece : parts) {
        std::size_t p = 0;
        const std::string e = trimmed(piece, p);
        if (e.empty()) throw InputError("empty symbol entry", p);
        RationalFunction f = at_offset(p, [&] { return parse_rational(e, field->base, field->var); });
        if (f.is_zero()) throw InputError("symbol entries must be nonzero", p);
        es.push_back(std::move(f));
      }
      x = symbol(*field, es);
    } else {
      std::vector<Code> es;
      for (const auto& piece : parts) {
        std::size_t p = 0;
        const std::string e = trimmed(piece, p);
        if (e.empty()) throw InputError("empty symbol entry", p);
        const Code c = at_offset(p, [&] { return parse_constant(e, field->base); });
        if (c == 0) throw InputError("symbol entries must be nonzero", p);
        es.push_back(c);
      }
      x = finite_symbol(*field, es);
    }
  }
  if (degree && *degree != x.degree()) {
    throw InputError("declared degree " + std::to_string(*degree) + " but the symbol has degree " +
                         std::to_string(x.degree()),
                     colon + 1);
  }
  return x;
}

Place parse_place(const std::string& text, const FieldRef& field) {
  if (!field.is_rational()) throw InputError("places need a rational function field such as GF(5)(t)");
  std::size_t pos = 0;
  const std::string s = trimmed({text, 0}, pos);
  if (s == "inf" || s == "infinity" || s == "oo") return Place::infinite(field);
  const RationalFunction f = at_offset(pos, [&] { return parse_rational(s, field.base, field.var); });
  if (!f.den().is_one()) throw InputError("a place is given by a polynomial", pos);
  try {
    return Place::finite(field, f.num());
  } catch (const DomainError& e) {
    throw InputError(std::string("'") + s + "' is not monic irreducible", pos);
  }
}

SurfaceTerm parse_surface_symbol(const std::string& text, const SchemeModel& X) {
  std::size_t pos = 0;
  const std::string body = trimmed({text, 0}, pos);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}')
    throw InputError("expected a symbol such as {[x=0], 2*[y=0]^-1}", pos);
  SurfaceTerm term;
  term.m = KElement::integer(FieldRef::finite(X.base()), 1);
  if (skip_space(text, pos + 1) >= pos + body.size() - 1) return term;
  for (const auto& piece : split_top(text, pos + 1, pos + body.size() - 1, ',')) {
    std::size_t p = 0;
    const std::string e = trimmed(piece, p);
    SurfaceUnit u{1, {}};
    for (const auto& f : split_top(e, 0, e.size(), '*')) {
      std::size_t q = 0;
      const std::string factor = trimmed(f, q);
      q += p;
      if (factor.empty()) throw InputError("empty factor", q);
      if (factor.front() != '[') {
        const Code c = at_offset(q, [&] { return parse_constant(factor, X.base()); });
        if (c == 0) throw InputError("symbol entries must be nonzero", q);
        u.constant = X.base()->mul(u.constant, c);
        continue;
      }
      const std::size_t close = factor.find(']');
      if (close == std::string::npos) throw InputError("expected ']'", q + factor.size());
      const std::string id = factor.substr(1, close - 1);
      bool known = false;
      for (const auto& C : X.curves()) known = known || (C.id == id && !C.at_infinity);
      if (!known) throw InputError("unknown curve '" + id + "'", q + 1);
      long e_ = 1;
      const std::string rest = factor.substr(close + 1);
      if (!rest.empty()) {
        if (rest.front() != '^') throw InputError("expected '^' after the curve", q + close + 1);
        e_ = parse_long(rest.substr(1), q + close + 2);
      }
      u.exponents[id] += e_;
    }
    term.units.push_back(std::move(u));
  }
  return term;
}

SchemeModel resolve_scheme(const std::string& text, const std::optional<FieldRef>& field) {
  if (text.find(".json") != std::string::npos || std::filesystem::is_regular_file(text)) {
    std::ifstream in(text);
    if (!in) throw InputError("cannot read scheme file '" + text + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_scheme(ss.str());
  }
  if (!field) throw InputError("--field is required for builtin schemes");
  return builtin_scheme(text, field->base);
}

}  // namespace cyclemod::cli
