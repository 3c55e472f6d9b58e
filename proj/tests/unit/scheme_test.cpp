#include "cyclemod/errors.hpp"
#include "cyclemod/exactfield/parse.hpp"
#include "cyclemod/schemes/scheme.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace cyclemod;

namespace {

FieldRef rat(std::uint64_t q) { return FieldRef::rational(field_of_order(q)); }
RationalFunction R(const char* s, std::uint64_t q) { return parse_rational(s, field_of_order(q)); }

std::vector<std::string> names(const std::vector<PointRef>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

CurveDecl decl(const char* id, const char* eq, const char* x, const char* y, std::uint64_t q) {
  const auto f = field_of_order(q);
  return {id, eq, parse_bipoly(eq, f), R(x, q), R(y, q), false};
}

}  // namespace

TEST(Scheme, LinePoints) {
  const auto f2 = field_of_order(2);
  EXPECT_EQ(names(SchemeModel::projective_line(f2).points(1, 2)),
            (std::vector<std::string>{"t", "t+1", "inf", "t^2+t+1"}));
  EXPECT_EQ(names(SchemeModel::affine_line(f2).points(1, 1)), (std::vector<std::string>{"t", "t+1"}));
  EXPECT_TRUE(SchemeModel::spec(field_of_order(3)).points(0, 1).size() == 1);
  EXPECT_THROW(SchemeModel::spec(field_of_order(3)).points(1, 3), InputError);
  EXPECT_THROW(SchemeModel::affine_line(f2).points(0, 0), InputError);

  const auto punct = SchemeModel::punctured_line(field_of_order(3), {R("t", 3).num()});
  EXPECT_EQ(names(punct.points(1, 1)), (std::vector<std::string>{"t+1", "t+2"}));
}

TEST(Scheme, WindowsAreMonotone) {
  for (const auto& m : {builtin_scheme("P1", field_of_order(3)), builtin_scheme("A2", field_of_order(2))}) {
    for (int p = 0; p <= m.dimension(); ++p) {
      std::set<PointRef> prev;
      for (int D = 1; D <= 3; ++D) {
        const auto pts = m.points(p, D);
        const std::set<PointRef> cur(pts.begin(), pts.end());
        EXPECT_EQ(cur.size(), pts.size());
        for (const auto& x : prev) EXPECT_TRUE(cur.count(x));
        prev = cur;
      }
    }
  }
}

TEST(Scheme, ClosedPointCounts) {
  // Closed points of degree d on A^2/F_q number (1/d) sum_{e|d} mu(d/e) q^{2e}.
  const auto a2 = builtin_scheme("A2", field_of_order(3));
  EXPECT_EQ(a2.points(2, 1).size(), 9u);
  EXPECT_EQ(a2.points(2, 2).size(), 9u + (81 - 9) / 2);
  const auto p2 = builtin_scheme("P2", field_of_order(2));
  EXPECT_EQ(p2.points(2, 1).size(), 7u);
  EXPECT_EQ(p2.points(2, 2).size(), 7u + (16 - 4) / 2 + (4 - 2) / 2);
  EXPECT_EQ(p2.points(1, 1).back().curve, "inf");
}

TEST(Scheme, StandardTableValidates) {
  for (std::uint64_t q : {2, 3, 4, 5})
    for (const auto& c : standard_curve_table(field_of_order(q))) EXPECT_NO_THROW(validate_curve(c)) << c.id;
}

TEST(Scheme, RejectsBadCurves) {
  EXPECT_THROW(validate_curve(decl("c", "y - x", "t^2", "t^2", 3)), InputError);
  EXPECT_THROW(validate_curve(decl("c", "y - x^2 - 1", "t", "t^2", 3)), InputError);
  EXPECT_THROW(validate_curve(decl("c", "(y - x)^2", "t", "t", 3)), InputError);
  EXPECT_THROW(validate_curve(decl("c", "y^2 - x^3", "t^4", "t^6", 3)), InputError);
  EXPECT_NO_THROW(validate_curve(decl("cusp", "y^2 - x^3", "t^2", "t^3", 3)));
  EXPECT_NO_THROW(validate_curve(decl("node", "y^2 - x^2 - x^3", "t^2-1", "t^3-t", 5)));
}

TEST(Scheme, CurveImagesAndFibers) {
  const auto f3 = field_of_order(3);
  const auto a2 = builtin_scheme("A2", f3);
  // y = x^2 through the origin: a single place t over it, kappa = F_3.
  const auto sp = a2.specializations(PointRef::on_curve("y=x^2"), 1);
  ASSERT_FALSE(sp.empty());
  EXPECT_EQ(sp.front().point.to_string(), "(0, 0)");
  ASSERT_EQ(sp.front().fiber.size(), 1u);
  EXPECT_EQ(sp.front().fiber.front().place.to_string(), "t");
  // x y = 1 never meets the axes and goes to infinity at t = 0 and t = inf.
  for (const auto& s : a2.specializations(PointRef::on_curve("xy=1"), 2)) {
    EXPECT_NE(s.point.closed.a, 0u);
    for (const auto& fp : s.fiber) EXPECT_FALSE(fp.place.is_infinite() || fp.place.to_string() == "t");
  }
  // On P^2 the place t = 0 of xy = 1 lands on [0:1:0], t = inf on [1:0:0].
  const auto p2 = builtin_scheme("P2", f3);
  std::set<std::string> at_inf;
  for (const auto& s : p2.specializations(PointRef::on_curve("xy=1"), 1))
    if (s.point.closed.chart != ClosedPoint::Chart::Affine) at_inf.insert(s.point.to_string());
  EXPECT_EQ(at_inf, (std::set<std::string>{"[1:0:0]", "[0:1:0]"}));
}

TEST(Scheme, ConjugateFiberPoints) {
  // y = x^2 over F_2 meets the point (a, a+1) of degree 2 over F_2 at one
  // place of degree 2; the residue embedding sends the stored point there.
  const auto f2 = field_of_order(2);
  const auto a2 = builtin_scheme("A2", f2);
  const auto c = a2.curve("y=x^2");
  const Place t = Place::finite(rat(2), R("t^2+t+1", 2).num());
  auto [y, phi] = curve_image(c, t);
  EXPECT_EQ(y.degree(f2), 2);
  EXPECT_EQ(phi.apply(y.a), t.reduce(c.x));
  EXPECT_EQ(phi.apply(y.b), t.reduce(c.y));
  // The representative is the smaller of the two conjugates.
  const auto k = y.kappa;
  EXPECT_LE(y.a, k->pow(y.a, 2));
}

TEST(Scheme, Unions) {
  const auto f3 = field_of_order(3);
  const auto u = SchemeModel::disjoint_union({SchemeModel::spec(f3), SchemeModel::affine_line(f3)});
  EXPECT_EQ(u.dimension(), 1);
  EXPECT_EQ(u.points(0, 1).size(), 2u);
  const auto codim1 = u.points(1, 1);
  ASSERT_EQ(codim1.size(), 3u);
  EXPECT_EQ(codim1.front().part, 1u);
  EXPECT_EQ(u.specializations(PointRef::generic(1), 1).size(), 3u);
  EXPECT_TRUE(u.specializations(PointRef::generic(0), 1).empty());
}

TEST(Scheme, LoadJson) {
  const char* ok = R"({"kind": "AFFINE_PLANE", "base": {"p": 3, "m": 1},
    "curves": [
      {"id": "x=0", "description": "x", "parametrization": {"x": "0", "y": "t"},
       "fibers": [{"point": ["0", "0"], "places": ["t"]}]},
      {"id": "y=0", "description": "y", "parametrization": {"x": "t", "y": "0"}},
      {"id": "y=x", "description": "y - x", "parametrization": {"x": "t", "y": "t"},
       "fibers": [{"point": ["0", "0"], "places": ["t"]}]}]})";
  const auto m = load_scheme(ok);
  EXPECT_EQ(m.kind(), SchemeKind::AffinePlane);
  EXPECT_EQ(m.curves().size(), 3u);

  try {
    load_scheme(R"({"kind": "A1", "base": {"p": 3})");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(e.position(), InputError::npos);
  }
  try {
    load_scheme(R"({"kind": "A2", "base": {"p": 3}, "curves": [{"id": "c", "description": "y - x",
      "parametrization": {"x": "t", "y": "t"}, "fibers": [{"point": ["0", "0"], "places": ["t+1"]}]}]})");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("curve 'c'"), std::string::npos) << e.what();
  }
  EXPECT_THROW(load_scheme(R"({"kind": "A2", "base": {"p": 3}, "curves": [{"id": "c", "description": "y - x",
      "parametrization": {"x": "t^2", "y": "t^2"}}]})"),
               InputError);
  const auto pl = load_scheme(R"({"kind": "PUNCTURED_LINE", "base": {"p": 5}, "removed": ["t+2"]})");
  EXPECT_FALSE(pl.contains(Place::finite(rat(5), R("t+2", 5).num())));
  const auto un = load_scheme(R"({"kind": "DISJOINT_UNION", "parts": [{"kind": "SPEC", "base": {"p": 2, "m": 2}},
      {"kind": "P1", "base": {"p": 2}}]})");
  EXPECT_EQ(un.parts().size(), 2u);
}
