#pragma once

#include "cyclemod/exactfield/parse.hpp"
#include "cyclemod/milnor/milnor.hpp"
#include "cyclemod/rng.hpp"

namespace testing_support {

using namespace cyclemod;

inline RationalFunction random_rational(const FieldPtr& f, Rng& rng, int max_deg = 3) {
  auto poly = [&] {
    std::vector<Code> c(1 + rng.below(static_cast<std::uint64_t>(max_deg) + 1));
    for (auto& x : c) x = static_cast<Code>(rng.below(f->order()));
    c.back() = 1 + static_cast<Code>(rng.below(f->order() - 1));
    return Poly(f, c);
  };
  return RationalFunction(poly(), poly());
}

inline RationalFunction random_nonzero(const FieldPtr& f, Rng& rng, int max_deg = 3) {
  while (true) {
    auto r = random_rational(f, rng, max_deg);
    if (!r.is_zero()) return r;
  }
}

inline Code random_unit_code(const FieldPtr& f, Rng& rng) { return 1 + static_cast<Code>(rng.below(f->order() - 1)); }

inline KElement random_k(const FieldRef& f, int n, Rng& rng, int max_deg = 3) {
  if (n == 0) return KElement::integer(f, rng.between(-5, 5));
  if (f.is_finite()) {
    std::vector<Code> cs;
    for (int i = 0; i < n; ++i) cs.push_back(random_unit_code(f.base, rng));
    return finite_symbol(f, cs);
  }
  KElement acc = KElement::zero(f, n);
  const int terms = 1 + static_cast<int>(rng.below(2));
  for (int i = 0; i < terms; ++i) {
    std::vector<RationalFunction> es;
    for (int j = 0; j < n; ++j) es.push_back(random_nonzero(f.base, rng, max_deg));
    acc = k_add(acc, symbol(f, es));
  }
  return acc;
}

}  // namespace testing_support
