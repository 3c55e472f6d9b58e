#include "cyclemod/errors.hpp"
#include "cyclemod/exactfield/finite_field.hpp"
#include "cyclemod/rng.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace cyclemod;

namespace {

// Brute-force: a monic polynomial over F_p (low first) is irreducible iff it
// has no factor of degree <= deg/2, checked by trial multiplication.
std::vector<std::uint32_t> mul_fp(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                  std::uint32_t p) {
  std::vector<std::uint32_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

std::vector<std::vector<std::uint32_t>> monics(std::uint32_t p, std::uint32_t d) {
  std::vector<std::vector<std::uint32_t>> out;
  std::uint32_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i) count *= p;
  for (std::uint32_t n = 0; n < count; ++n) {
    std::vector<std::uint32_t> c(d + 1, 0);
    c[d] = 1;
    std::uint32_t r = n;
    for (std::uint32_t i = 0; i < d; ++i) {
      c[i] = r % p;
      r /= p;
    }
    out.push_back(c);
  }
  return out;
}

bool brute_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size()) - 1;
  for (std::uint32_t d = 1; d <= n / 2; ++d)
    for (const auto& a : monics(p, d))
      for (const auto& b : monics(p, n - d))
        if (mul_fp(a, b, p) == f) return false;
  return true;
}

}  // namespace

TEST(FiniteField, PrimeFieldGenerator) {
  auto f = make_field(3, 1);
  EXPECT_EQ(f->order(), 3u);
  EXPECT_EQ(f->generator(), 2u);
  EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(FiniteField, F4Modulus) {
  auto f = make_field(2, 2);
  EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(FiniteField, F9MatchesBruteForce) {
  auto f = make_field(3, 2);
  // Smallest irreducible monic quadratic in (c1, c0) order.
  std::vector<std::uint32_t> expected;
  for (std::uint32_t c1 = 0; c1 < 3 && expected.empty(); ++c1)
    for (std::uint32_t c0 = 1; c0 < 3 && expected.empty(); ++c0)
      if (brute_irreducible({c0, c1, 1}, 3)) expected = {c0, c1, 1};
  EXPECT_EQ(f->modulus(), expected);
  EXPECT_EQ(f->multiplicative_order(f->generator()), 8u);
  for (Code c = 1; c < f->generator(); ++c) EXPECT_LT(f->multiplicative_order(c), 8u);
}

TEST(FiniteField, InterningAndModuliIrreducible) {
  EXPECT_EQ(make_field(5, 2), make_field(5, 2));
  for (auto [p, m] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 3u}, {5u, 2u}, {7u, 2u}}) {
    auto f = make_field(p, m);
    EXPECT_TRUE(brute_irreducible(f->modulus(), p)) << f->name();
    EXPECT_EQ(f->multiplicative_order(f->generator()), f->order() - 1);
  }
}

TEST(FiniteField, Errors) {
  EXPECT_THROW(make_field(4, 1), InputError);
  EXPECT_THROW(make_field(3, 0), InputError);
  EXPECT_THROW(make_field(2, 21), DomainError);
  EXPECT_THROW(field_of_order(6), InputError);
  EXPECT_EQ(field_of_order(9), make_field(3, 2));
}

TEST(FiniteField, RingAxioms) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 25, 27}) {
    auto f = field_of_order(q);
    Rng rng(q);
    for (int i = 0; i < 1000; ++i) {
      Code a = static_cast<Code>(rng.below(q)), b = static_cast<Code>(rng.below(q)),
           c = static_cast<Code>(rng.below(q));
      ASSERT_EQ(f->add(a, f->add(b, c)), f->add(f->add(a, b), c));
      ASSERT_EQ(f->mul(a, f->mul(b, c)), f->mul(f->mul(a, b), c));
      ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
      ASSERT_EQ(f->add(a, f->neg(a)), 0u);
      ASSERT_EQ(f->sub(a, b), f->add(a, f->neg(b)));
      if (a != 0) ASSERT_EQ(f->mul(a, f->inv(a)), 1u);
    }
  }
}

TEST(FiniteField, NormExamples) {
  auto f3 = make_field(3, 1);
  auto f9 = make_field(3, 2);
  const Code g = f9->generator();
  EXPECT_EQ(norm_ff(f3, f9, {f9, g}).code, 2u);
  EXPECT_EQ(norm_ff(f3, f9, {f9, 2}).code, 1u);
  auto f2 = make_field(2, 1);
  auto f4 = make_field(2, 2);
  for (Code x = 1; x < 4; ++x) EXPECT_EQ(norm_ff(f2, f4, {f4, x}).code, 1u);
}

TEST(FiniteField, NormMultiplicative) {
  auto sub = make_field(3, 1);
  auto ext = make_field(3, 4);
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    Code x = 1 + static_cast<Code>(rng.below(ext->order() - 1));
    Code y = 1 + static_cast<Code>(rng.below(ext->order() - 1));
    auto nx = norm_ff(sub, ext, {ext, x}).code;
    auto ny = norm_ff(sub, ext, {ext, y}).code;
    ASSERT_EQ(norm_ff(sub, ext, {ext, ext->mul(x, y)}).code, sub->mul(nx, ny));
  }
}

TEST(FiniteMap, EmbeddingsAreRingMaps) {
  auto f4 = make_field(2, 2);
  auto f16 = make_field(2, 4);
  auto embs = all_embeddings(f4, f16);
  ASSERT_EQ(embs.size(), 2u);
  for (const auto& e : embs) {
    for (Code a = 0; a < 4; ++a)
      for (Code b = 0; b < 4; ++b) {
        EXPECT_EQ(e.apply(f4->add(a, b)), f16->add(e.apply(a), e.apply(b)));
        EXPECT_EQ(e.apply(f4->mul(a, b)), f16->mul(e.apply(a), e.apply(b)));
      }
    for (Code a = 0; a < 4; ++a) EXPECT_EQ(e.preimage(e.apply(a)), a);
  }
  EXPECT_TRUE(all_embeddings(f4, make_field(2, 3)).empty());
}

TEST(FiniteMap, ComposeAndFind) {
  auto a = make_field(3, 1), b = make_field(3, 2), c = make_field(3, 4);
  auto ab = default_embedding(a, b);
  for (const auto& bc : all_embeddings(b, c)) {
    auto ac = compose(bc, ab);
    for (Code x = 0; x < 3; ++x) EXPECT_EQ(ac.apply(x), bc.apply(ab.apply(x)));
    auto found = find_embedding(b, c, {{b->generator(), bc.apply(b->generator())}});
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(*found, bc);
  }
}
