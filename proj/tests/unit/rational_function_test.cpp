#include "cyclemod/errors.hpp"
#include "cyclemod/exactfield/parse.hpp"
#include "cyclemod/exactfield/rational_function.hpp"
#include "cyclemod/rng.hpp"

#include <gtest/gtest.h>

using namespace cyclemod;

namespace {

RationalFunction R(const char* s, std::uint64_t q) { return parse_rational(s, field_of_order(q)); }

FactoredUnit random_unit(const FieldPtr& f, Rng& rng) {
  std::vector<FactoredUnit::Factor> fs;
  const int n = static_cast<int>(rng.below(4));
  for (int i = 0; i < n; ++i) {
    auto irr = monic_irreducibles(f, 1 + static_cast<int>(rng.below(3)));
    fs.emplace_back(rng.pick(irr), Integer(rng.between(-3, 3)));
  }
  return FactoredUnit(f, 1 + static_cast<Code>(rng.below(f->order() - 1)), fs);
}

}  // namespace

TEST(RationalFunction, NormalizesFractions) {
  auto x = R("(t^2-1)/(2*t-2)", 5);
  EXPECT_EQ(x.den().to_string(), "1");
  EXPECT_EQ(x.num().to_string(), "3*t+3");
  EXPECT_TRUE(R("0/(t+1)", 3).is_zero());
  EXPECT_EQ(R("0/(t+1)", 3).den().to_string(), "1");
  EXPECT_EQ(R("t/(2*t+2)", 3).to_string(), "2*t/(t+1)");
}

TEST(RationalFunction, ComposeMatchesEvaluation) {
  auto f = field_of_order(7);
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    auto a = random_unit(f, rng).expand();
    auto g = random_unit(f, rng).expand();
    if (g.is_constant()) continue;
    auto h = a.compose(g);
    for (Code x = 0; x < 7; ++x) {
      Code gx;
      try {
        gx = g.eval(x);
        const Code want = a.eval(gx);
        EXPECT_EQ(h.eval(x), want);
      } catch (const DomainError&) {
      }
    }
  }
}

TEST(FactoredUnit, UnitFactorExamples) {
  auto u = unit_factor(R("t/(t+1)", 3));
  EXPECT_EQ(u.constant(), 1u);
  ASSERT_EQ(u.factors().size(), 2u);
  EXPECT_EQ(u.factors()[0].first.to_string(), "t");
  EXPECT_EQ(u.factors()[0].second, 1);
  EXPECT_EQ(u.factors()[1].first.to_string(), "t+1");
  EXPECT_EQ(u.factors()[1].second, -1);

  u = unit_factor(R("2*t^2+2*t", 3));
  EXPECT_EQ(u.constant(), 2u);
  ASSERT_EQ(u.factors().size(), 2u);
  EXPECT_EQ(u.factors()[1].second, 1);

  u = unit_factor(R("2", 5));
  EXPECT_EQ(u.constant(), 2u);
  EXPECT_TRUE(u.factors().empty());

  EXPECT_THROW(unit_factor(R("0", 5)), InputError);
}

TEST(FactoredUnit, RoundTrip) {
  Rng rng(2);
  for (std::uint64_t q : {2, 3, 4, 5, 9}) {
    auto f = field_of_order(q);
    for (int i = 0; i < 100; ++i) {
      auto u = random_unit(f, rng);
      EXPECT_EQ(unit_factor(u.expand()), u) << u.to_string();
      auto v = random_unit(f, rng);
      EXPECT_EQ((u * v).expand(), u.expand() * v.expand());
    }
  }
}

TEST(Parse, ErrorsCarryPositions) {
  auto f = field_of_order(3);
  try {
    parse_rational("t + x", f);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_rational("t/(t-t)", f), InputError);
  EXPECT_THROW(parse_rational("(t+1", f), InputError);
  EXPECT_THROW(parse_rational("a", f), InputError);
  EXPECT_EQ(parse_constant("a^2", field_of_order(9)),
            field_of_order(9)->mul(field_of_order(9)->root(), field_of_order(9)->root()));
  EXPECT_EQ(parse_rational("2t(t+1)", f), parse_rational("2*t^2+2*t", f));
  EXPECT_EQ(parse_rational("t^-1", f), parse_rational("1/t", f));
}

TEST(Parse, FieldLiterals) {
  auto lit = parse_field("GF(9)");
  EXPECT_EQ(lit.base, make_field(3, 2));
  EXPECT_FALSE(lit.var.has_value());
  lit = parse_field("GF(3)(s)");
  EXPECT_EQ(*lit.var, "s");
  EXPECT_THROW(parse_field("GF(6)"), InputError);
  EXPECT_THROW(parse_field("F(3)"), InputError);
  EXPECT_THROW(parse_field("GF(3)(a)"), InputError);
}
