#include "cyclemod/errors.hpp"
#include "cyclemod/milnor/milnor.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace cyclemod;
using namespace testing_support;

namespace {

FieldRef rat(std::uint64_t q) { return FieldRef::rational(field_of_order(q)); }
FieldRef fin(std::uint64_t q) { return FieldRef::finite(field_of_order(q)); }
RationalFunction R(const char* s, std::uint64_t q) { return parse_rational(s, field_of_order(q)); }
Place at(const char* pi, std::uint64_t q) { return Place::finite(rat(q), R(pi, q).num()); }

// Tame symbol at a finite place straight from rational functions, with the
// uniformizer c*pi: a = (c pi)^{va} a', b = (c pi)^{vb} b'.
Code oracle_tame(const Place& v, const RationalFunction& a, const RationalFunction& b, Code c) {
  const auto& k = v.residue_field();
  const RationalFunction unif = RationalFunction::constant(a.field(), c) * v.uniformizer();
  const int va = v.valuation(a), vb = v.valuation(b);
  const Code ua = v.reduce(a / unif.pow(va));
  const Code ub = v.reduce(b / unif.pow(vb));
  Code r = k->div(k->pow(ub, static_cast<std::int64_t>(va)), k->pow(ua, static_cast<std::int64_t>(vb)));
  if ((va * vb) % 2 != 0) r = k->neg(r);
  return r;
}

// Every place where a or b has a zero or pole.
std::set<Poly> joint_support(const RationalFunction& a, const RationalFunction& b) {
  std::set<Poly> s;
  for (const auto* p : {&a.num(), &a.den(), &b.num(), &b.den()})
    if (p->degree() > 0)
      for (const auto& [f, e] : factor_poly(*p).factors) s.insert(f);
  return s;
}

}  // namespace

TEST(Symbol, SteinbergAndSquares) {
  EXPECT_TRUE(symbol(rat(5), {R("t", 5), R("1-t", 5)}).is_zero());
  EXPECT_TRUE(k_eq(symbol(rat(5), {R("t", 5), R("t", 5)}), symbol(rat(5), {R("t", 5), R("-1", 5)})));
  auto x = symbol(rat(2), {R("t", 2), R("t+1", 2), R("t^2+t+1", 2)});
  EXPECT_EQ(x.degree(), 3);
  EXPECT_TRUE(x.is_zero());
  EXPECT_THROW(symbol(rat(5), {R("t", 5), R("0", 5)}), InputError);
}

TEST(Symbol, K2OfFiniteFieldsVanishesByPresentation) {
  // F_q^x (x) F_q^x = Z/(q-1) on g(x)g; Steinberg kills i*j for g^i + g^j = 1.
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    auto f = field_of_order(q);
    Integer order = q - 1;
    Integer g = order;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
      const Code a = f->exp(i);
      const Code b = f->sub(1, a);
      if (b == 0) continue;
      g = gcd(g, Integer(i) * f->log(b));
    }
    EXPECT_EQ(g, 1) << q;
    EXPECT_TRUE(finite_symbol(fin(q), {f->generator(), f->generator()}).is_zero());
  }
}

TEST(KGroup, AdditionExamples) {
  auto f = rat(3);
  auto x = symbol(f, {R("t", 3)});
  EXPECT_EQ(k_add(x, KElement::zero(f, 1)), x);
  EXPECT_EQ(k_add(x, symbol(f, {R("t+1", 3)})), symbol(f, {R("t^2+t", 3)}));
  auto two = finite_symbol(fin(3), {2});
  EXPECT_TRUE(k_add(two, two).is_zero());
  EXPECT_THROW(k_add(two, x), DomainError);
  EXPECT_THROW(k_add(x, symbol(f, {R("t", 3), R("t+1", 3)})), DomainError);
}

TEST(Gamma, Examples) {
  auto f = rat(5);
  EXPECT_TRUE(gamma(symbol(f, {R("2", 5)}), KElement::zero(f, 1)).is_zero());
  // {2}.{t} = {2, t} = -{t, 2}: the coordinate at (t) is 2^{-1} = 3.
  auto x = gamma(symbol(f, {R("2", 5)}), symbol(f, {R("t", 5)}));
  ASSERT_EQ(x.coords().size(), 1u);
  EXPECT_EQ(x.coords().begin()->first, R("t", 5).num());
  EXPECT_EQ(field_of_order(5)->exp(x.coords().begin()->second), 3u);
  EXPECT_EQ(residue(at("t", 5), x), finite_symbol(fin(5), {3}));
  auto f9 = fin(9);
  auto g = finite_symbol(f9, {field_of_order(9)->generator()});
  EXPECT_TRUE(gamma(g, g).is_zero());
}

TEST(Gamma, GradedCommutative) {
  Rng rng(41);
  for (std::uint64_t q : {2, 3, 5, 9}) {
    for (int i = 0; i < 125; ++i) {
      auto a = random_k(rat(q), 1, rng), b = random_k(rat(q), 1, rng);
      ASSERT_TRUE(k_add(gamma(a, b), gamma(b, a)).is_zero());
    }
  }
}

TEST(Symbol, NormalFormMatchesDirectTameSymbols) {
  Rng rng(5);
  for (std::uint64_t q : {2, 3, 5}) {
    auto f = rat(q);
    for (int i = 0; i < 300; ++i) {
      auto a = random_nonzero(f.base, rng), b = random_nonzero(f.base, rng);
      auto x = symbol(f, {a, b});
      for (const auto& pi : joint_support(a, b)) {
        const Place v = Place::finite(f, pi);
        EXPECT_EQ(v.residue_field()->exp(residue(v, x).log()), oracle_tame(v, a, b, 1));
      }
      for (const auto& [pi, l] : x.coords()) EXPECT_TRUE(joint_support(a, b).count(pi));
      // A second presentation of the same class: {a, b} = {a, -ab}.
      EXPECT_TRUE(k_eq(x, symbol(f, {a, -(a * b)})));
      EXPECT_TRUE(symbol(f, {a, b, random_nonzero(f.base, rng)}).is_zero());
    }
  }
}

TEST(Residue, UniformizerIndependent) {
  Rng rng(8);
  auto f = rat(5);
  for (int i = 0; i < 300; ++i) {
    auto a = random_nonzero(f.base, rng), b = random_nonzero(f.base, rng);
    const Code c = random_unit_code(f.base, rng);
    for (const auto& pi : joint_support(a, b)) {
      const Place v = Place::finite(f, pi);
      ASSERT_EQ(oracle_tame(v, a, b, c), oracle_tame(v, a, b, 1));
      ASSERT_EQ(v.residue_field()->exp(residue(v, symbol(f, {a, b})).log()), oracle_tame(v, a, b, c));
    }
  }
}

TEST(Residue, Examples) {
  EXPECT_EQ(residue(at("t", 3), symbol(rat(3), {R("t", 3)})), KElement::integer(fin(3), 1));
  EXPECT_TRUE(residue(at("t", 3), symbol(rat(3), {R("t+1", 3)})).is_zero());
  EXPECT_EQ(residue(at("t", 5), symbol(rat(5), {R("t", 5), R("2", 5)})), finite_symbol(fin(5), {2}));
  EXPECT_EQ(residue(at("t", 5), symbol(rat(5), {R("2", 5), R("t", 5)})), finite_symbol(fin(5), {3}));
}

TEST(Residue, InfinityViaSubstitution) {
  // d_inf on F_q(t) equals d_(s) on F_q(s) after t = 1/s.
  Rng rng(12);
  for (std::uint64_t q : {2, 3, 5}) {
    auto f = rat(q);
    auto inv = FieldMap::rational(identity_map(f.base), RationalFunction::variable(f.base).inverse());
    for (int i = 0; i < 100; ++i) {
      auto a = random_nonzero(f.base, rng), b = random_nonzero(f.base, rng);
      auto x = symbol(f, {a, b});
      auto y = symbol(f, {inv.apply(a), inv.apply(b)});
      ASSERT_EQ(residue(Place::infinite(f), x).log(), residue(at("t", q), y).log());
      ASSERT_EQ(residue(Place::infinite(f), symbol(f, {a})), residue(at("t", q), symbol(f, {inv.apply(a)})));
    }
  }
}

TEST(Residue, R3eSignLaw) {
  Rng rng(13);
  for (std::uint64_t q : {3, 5, 9}) {
    auto f = rat(q);
    for (int i = 0; i < 170; ++i) {
      const auto places = places_up_to(f, 2, true);
      const Place v = rng.pick(places);
      RationalFunction u = random_nonzero(f.base, rng);
      if (v.valuation(u) != 0) continue;
      auto x = random_k(f, 1, rng);
      auto lhs = residue(v, gamma(symbol(f, {u}), x));
      auto rhs = k_neg(gamma(finite_symbol(v.residue(), {v.reduce(u)}), residue(v, x)));
      ASSERT_EQ(lhs, rhs);
    }
  }
}

TEST(Specialize, Examples) {
  EXPECT_EQ(specialize(at("t", 5), symbol(rat(5), {R("t+2", 5)})), finite_symbol(fin(5), {2}));
  for (Code c = 1; c < 9; ++c) {
    auto f = rat(9);
    auto x = finite_symbol(fin(9), {c});
    auto lifted = res_field(FieldMap::constants(identity_map(f.base)), x);
    EXPECT_EQ(specialize(Place::finite(f, Poly::variable(f.base)), lifted), x);
  }
  EXPECT_TRUE(specialize(at("t", 5), KElement::zero(rat(5), 1)).is_zero());
}

TEST(ResField, Examples) {
  auto f3 = field_of_order(3), f9 = field_of_order(9);
  auto x = res_field(FieldMap::finite(default_embedding(f3, f9)), finite_symbol(fin(3), {2}));
  EXPECT_EQ(x.log(), 4u);
  EXPECT_EQ(res_field(FieldMap::constants(identity_map(f3)), KElement::integer(fin(3), 7)).k0(), 7);

  auto f2 = field_of_order(2), f4 = field_of_order(4);
  auto ext = FieldMap::constant_extension(default_embedding(f2, f4));
  auto y = res_field(ext, symbol(rat(2), {R("t^2+t+1", 2)}));
  ASSERT_EQ(y.unit().factors().size(), 2u);
  for (const auto& [p, e] : y.unit().factors()) {
    EXPECT_EQ(p.degree(), 1);
    EXPECT_EQ(e, 1);
  }
  EXPECT_EQ(y.unit().expand(), R("t^2+t+1", 4));
}

TEST(CorField, Examples) {
  auto f3 = field_of_order(3), f9 = field_of_order(9);
  auto phi = FieldMap::finite(default_embedding(f3, f9));
  auto two = finite_symbol(fin(3), {2});
  EXPECT_EQ(cor_field(phi, res_field(phi, two)), k_scale(two, 2));
  EXPECT_TRUE(cor_field(phi, res_field(phi, two)).is_zero());
  EXPECT_EQ(cor_field(phi, KElement::integer(fin(9), 1)).k0(), 2);
  EXPECT_THROW(cor_field(FieldMap::constants(identity_map(f3)), KElement::integer(rat(3), 1)), DomainError);
}

TEST(CorField, ProjectionFormulaFinite) {
  Rng rng(21);
  auto f3 = field_of_order(3), f9 = field_of_order(9);
  auto phi = FieldMap::finite(default_embedding(f3, f9));
  for (int i = 0; i < 100; ++i) {
    int n = static_cast<int>(rng.below(2)), r = static_cast<int>(rng.below(2));
    auto x = random_k(fin(9), n, rng);
    auto y = random_k(fin(3), r, rng);
    EXPECT_EQ(cor_field(phi, gamma(x, res_field(phi, y))), gamma(cor_field(phi, x), y));
  }
}

namespace {

// Resultant of the modulus mu(y) of F_{p^m} with Pi(t0, y), where the
// coefficients of pi are read as polynomials in y; over F_{p^k}.
Code sylvester_det(std::vector<std::vector<Code>> m, const FieldPtr& f) {
  const std::size_t n = m.size();
  Code det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m[r][c] == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      std::swap(m[r], m[c]);
      det = f->neg(det);
    }
    det = f->mul(det, m[c][c]);
    const Code inv = f->inv(m[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      const Code k = f->mul(m[i][c], inv);
      if (k == 0) continue;
      for (std::size_t j = c; j < n; ++j) m[i][j] = f->sub(m[i][j], f->mul(k, m[c][j]));
    }
  }
  return det;
}

Code resultant(const std::vector<Code>& a, const std::vector<Code>& b, const FieldPtr& f) {
  // a, b low-first, deg a = da, deg b = db.
  const std::size_t da = a.size() - 1, db = b.size() - 1, n = da + db;
  if (n == 0) return 1;
  std::vector<std::vector<Code>> m(n, std::vector<Code>(n, 0));
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j <= da; ++j) m[i][i + j] = a[da - j];
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j <= db; ++j) m[db + i][i + j] = b[db - j];
  return sylvester_det(m, f);
}

}  // namespace

TEST(CorField, K1NormMatchesResultant) {
  Rng rng(33);
  for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u}, {3u, 3u}}) {
    auto base = make_field(p, 1);
    auto ext = make_field(p, m);
    auto phi = FieldMap::constant_extension(default_embedding(base, ext));
    auto mu = ext->modulus();
    for (int trial = 0; trial < 40; ++trial) {
      const int d = 1 + static_cast<int>(rng.below(3));
      Poly pi = rng.pick(monic_irreducibles(ext, d));
      auto norm = cor_field(phi, symbol(phi.dst(), {RationalFunction(pi)})).unit().expand();
      ASSERT_TRUE(norm.den().is_one());
      // Evaluate at points of a large extension F_{p^k}.
      const std::uint32_t k = 7;
      auto big = make_field(p, k);
      auto emb = default_embedding(base, big);
      Rng pts(trial);
      for (int s = 0; s < 10; ++s) {
        const Code t0 = static_cast<Code>(pts.below(big->order()));
        // Pi(t0, y) = sum_i digits_j(c_i) y^j t0^i.
        std::vector<Code> py(m, 0);
        Code tp = 1;
        for (std::size_t i = 0; i < pi.coeffs().size(); ++i) {
          Code c = pi.coeffs()[i];
          for (std::uint32_t j = 0; j < m; ++j) {
            py[j] = big->add(py[j], big->mul(emb.apply(c % p), tp));
            c /= p;
          }
          tp = big->mul(tp, t0);
        }
        while (py.size() > 1 && py.back() == 0) py.pop_back();
        std::vector<Code> mub;
        for (auto c : mu) mub.push_back(emb.apply(c));
        Code want = resultant(mub, py, big);
        Code got = norm.num().mapped(emb).eval(t0);
        ASSERT_EQ(got, want) << pi.to_string();
      }
    }
  }
}

TEST(CorField, ProjectionFormulaConstantExtension) {
  Rng rng(34);
  auto f3 = field_of_order(3), f9 = field_of_order(9);
  auto phi = FieldMap::constant_extension(default_embedding(f3, f9));
  for (int i = 0; i < 60; ++i) {
    auto x = random_k(phi.dst(), 1, rng, 2);
    auto y = random_k(phi.src(), 1, rng, 2);
    EXPECT_EQ(cor_field(phi, gamma(x, res_field(phi, y))), gamma(cor_field(phi, x), y));
    EXPECT_EQ(cor_field(phi, gamma(res_field(phi, y), x)), gamma(y, cor_field(phi, x)));
    auto z = random_k(phi.src(), 2, rng, 2);
    EXPECT_EQ(cor_field(phi, res_field(phi, z)), k_scale(z, 2));
  }
}

TEST(Reciprocity, SumOfResiduesVanishes) {
  Rng rng(55);
  for (std::uint64_t q : {2, 3, 5}) {
    auto f = rat(q);
    for (int i = 0; i < 170; ++i) {
      auto x = random_k(f, 2, rng);
      ASSERT_TRUE(reciprocity_sum(x).is_zero()) << x.to_string();
      ASSERT_TRUE(reciprocity_sum(random_k(f, 1, rng)).is_zero());
    }
  }
}

TEST(Places, OrderAndLift) {
  auto ps = places_up_to(rat(2), 2, true);
  std::vector<std::string> names;
  for (const auto& p : ps) names.push_back(p.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"t", "t+1", "inf", "t^2+t+1"}));
  auto v = Place::finite(rat(3), R("t^2+1", 3).num());
  for (Code c = 0; c < 9; ++c) EXPECT_EQ(v.reduce(RationalFunction(v.lift(c))), c);
}

TEST(Places, LiftOverExtensionConstants) {
  for (std::uint64_t q : {4, 9}) {
    auto f = rat(q);
    for (int d = 1; d <= 2; ++d) {
      for (const auto& pi : monic_irreducibles(f.base, d)) {
        auto v = Place::finite(f, pi);
        for (Code c = 0; c < v.residue_field()->order(); c += 7) {
          auto u = v.lift(c);
          EXPECT_LT(u.degree(), d);
          EXPECT_EQ(v.reduce(RationalFunction(u)), c);
        }
      }
    }
  }
}
