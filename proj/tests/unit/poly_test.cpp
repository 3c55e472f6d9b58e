#include "cyclemod/errors.hpp"
#include "cyclemod/exactfield/poly.hpp"
#include "cyclemod/rng.hpp"

#include <gtest/gtest.h>

using namespace cyclemod;

namespace {

Poly P(const FieldPtr& f, std::vector<Code> c) { return Poly(f, std::move(c)); }

// Trial division by every monic polynomial of degree <= deg/2.
bool trial_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  const auto q = f.field()->order();
  for (int d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (std::uint64_t k = 0; k < count; ++k) {
      std::vector<Code> c(static_cast<std::size_t>(d) + 1, 0);
      c[static_cast<std::size_t>(d)] = 1;
      std::uint64_t r = k;
      for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<Code>(r % q);
        r /= q;
      }
      if ((f % Poly(f.field(), c)).is_zero()) return false;
    }
  }
  return true;
}

Poly expand(const Factorization& fac, const FieldPtr& f) {
  Poly acc = Poly::constant(f, fac.unit);
  for (const auto& [p, e] : fac.factors)
    for (int i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

}  // namespace

TEST(Poly, FactorExamples) {
  auto f2 = make_field(2, 1);
  auto f3 = make_field(3, 1);
  auto fac = factor_poly(P(f2, {0, 1, 1}));
  ASSERT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(fac.factors[0].first, P(f2, {0, 1}));
  EXPECT_EQ(fac.factors[1].first, P(f2, {1, 1}));

  fac = factor_poly(P(f3, {1, 0, 1}));
  ASSERT_EQ(fac.factors.size(), 1u);
  EXPECT_EQ(fac.factors[0].first, P(f3, {1, 0, 1}));

  fac = factor_poly(P(f2, {0, 1, 0, 0, 1}));
  ASSERT_EQ(fac.factors.size(), 3u);
  EXPECT_EQ(fac.factors[0].first, P(f2, {0, 1}));
  EXPECT_EQ(fac.factors[1].first, P(f2, {1, 1}));
  EXPECT_EQ(fac.factors[2].first, P(f2, {1, 1, 1}));
  for (const auto& [p, e] : fac.factors) EXPECT_EQ(e, 1);

  EXPECT_THROW(factor_poly(Poly(f2)), InputError);
}

TEST(Poly, FactorRoundTripRandom) {
  Rng rng(17);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 9}) {
    auto f = field_of_order(q);
    for (int i = 0; i < 150; ++i) {
      // Products of random factors exercise multiplicities, including p-th powers.
      Poly g = Poly::constant(f, 1 + static_cast<Code>(rng.below(q - 1)));
      const int parts = 1 + static_cast<int>(rng.below(3));
      for (int k = 0; k < parts; ++k) {
        std::vector<Code> c(1 + rng.below(4));
        for (auto& x : c) x = static_cast<Code>(rng.below(q));
        c.push_back(1);
        Poly h(f, c);
        const int e = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(f->characteristic()) + 1));
        for (int j = 0; j < e; ++j) g = g * h;
      }
      auto fac = factor_poly(g);
      ASSERT_EQ(expand(fac, f), g) << g.to_string();
      for (std::size_t j = 0; j < fac.factors.size(); ++j) {
        const auto& [p, e] = fac.factors[j];
        EXPECT_TRUE(p.is_monic());
        EXPECT_GT(e, 0);
        if (p.degree() <= 4) EXPECT_TRUE(trial_irreducible(p)) << p.to_string();
        if (j > 0) EXPECT_LT(fac.factors[j - 1].first, p);
      }
    }
  }
}

TEST(Poly, IrreducibleAgreesWithTrialDivision) {
  for (std::uint64_t q : {2, 3, 4}) {
    auto f = field_of_order(q);
    for (int d = 1; d <= 4; ++d) {
      auto irr = monic_irreducibles(f, d);
      std::uint64_t count = 0;
      std::uint64_t total = 1;
      for (int i = 0; i < d; ++i) total *= q;
      for (std::uint64_t k = 0; k < total; ++k) {
        std::vector<Code> c(static_cast<std::size_t>(d) + 1, 0);
        c[static_cast<std::size_t>(d)] = 1;
        std::uint64_t r = k;
        for (int i = 0; i < d; ++i) {
          c[static_cast<std::size_t>(i)] = static_cast<Code>(r % q);
          r /= q;
        }
        Poly p(f, c);
        ASSERT_EQ(is_irreducible(p), trial_irreducible(p)) << p.to_string();
        if (trial_irreducible(p)) ++count;
      }
      EXPECT_EQ(irr.size(), count);
    }
  }
}

TEST(Poly, RootsAndFormatting) {
  auto f5 = make_field(5, 1);
  Poly g = P(f5, {4, 0, 1});  // t^2 - 1
  EXPECT_EQ(roots(g), (std::vector<Code>{1, 4}));
  EXPECT_EQ(g.to_string(), "t^2+4");
  EXPECT_EQ(P(f5, {1, 2, 1}).to_string("s"), "s^2+2*s+1");
  EXPECT_EQ(Poly(f5).to_string(), "0");
}

TEST(Poly, DivmodIdentity) {
  auto f = make_field(3, 2);
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    std::vector<Code> a(1 + rng.below(7)), b(1 + rng.below(4));
    for (auto& x : a) x = static_cast<Code>(rng.below(9));
    for (auto& x : b) x = static_cast<Code>(rng.below(9));
    Poly pa(f, a), pb(f, b);
    if (pb.is_zero()) continue;
    auto [qq, r] = divmod(pa, pb);
    EXPECT_EQ(qq * pb + r, pa);
    EXPECT_LT(r.degree(), pb.degree());
  }
}
