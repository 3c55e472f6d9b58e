#include "cyclemod/cycles/checks.hpp"

#include "cyclemod/cycles/complex.hpp"
#include "cyclemod/premodule/sampling.hpp"

namespace cyclemod {

namespace {

FieldPtr small_base(Rng& rng) {
  static const std::vector<std::uint64_t> orders{2, 3, 4, 5};
  return field_of_order(rng.pick(orders));
}

SchemeModel random_curve_model(const FieldPtr& base, Rng& rng) {
  switch (rng.below(4)) {
    case 0:
      return SchemeModel::affine_line(base);
    case 1:
      return SchemeModel::projective_line(base);
    case 2: {
      std::vector<Poly> removed;
      const std::size_t k = 1 + rng.below(2);
      for (std::size_t i = 0; i < k; ++i) {
        const Place v = random_place(FieldRef::rational(base), rng, 2, false);
        removed.push_back(v.pi());
      }
      return SchemeModel::punctured_line(base, removed);
    }
    default:
      return SchemeModel::disjoint_union({SchemeModel::affine_line(base), SchemeModel::projective_line(base)});
  }
}

}  // namespace

TrialOutcome fd_trial(const PremoduleInstance& inst, Rng& rng) {
  const FieldPtr base = small_base(rng);
  const bool plane = rng.below(3) == 0;
  const SchemeModel X = plane ? builtin_scheme(rng.coin() ? "A2" : "P2", base) : random_curve_model(base, rng);
  const int p = plane ? 1 : 0;
  const int n = p + static_cast<int>(rng.below(3));
  const CycleClass c = sample_class(inst, X, p, n, rng);
  const FdReport r = check_fd(inst, c);
  TrialOutcome out;
  out.ok = r.ok;
  out.witness = "scheme=" + X.name() + "; class=" + to_string(c);
  if (!r.ok) {
    out.lhs = r.detail;
    out.rhs = "support stable under window growth";
  }
  return out;
}

TrialOutcome c_trial_on(const PremoduleInstance& inst, const SchemeModel& X, Rng& rng) {
  static const std::vector<int> degrees{1, 2, 3, 3};
  const int n = rng.pick(degrees);
  const CycleClass c = sample_class(inst, X, 0, n, rng);
  TrialOutcome out;
  out.witness = "scheme=" + X.name() + "; n=" + std::to_string(n) + "; class=" + to_string(c);
  if (X.dimension() < 2) return out;
  const CycleClass d = differential(inst, c);
  const CycleClass dd = differential(inst, d);
  out.ok = dd.empty();
  if (!out.ok) {
    out.witness += "; d=" + to_string(d);
    out.lhs = to_string(dd);
    out.rhs = "0";
  }
  return out;
}

TrialOutcome c_trial(const PremoduleInstance& inst, Rng& rng) {
  const FieldPtr base = small_base(rng);
  return c_trial_on(inst, builtin_scheme(rng.coin() ? "A2" : "P2", base), rng);
}

RelationReport check_c(const PremoduleInstance& inst, const SchemeModel& X, std::size_t trials, std::uint64_t seed) {
  RelationReport report{"C", trials, seed, {}};
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t s = trial_seed(seed, "C@" + X.name(), i);
    Rng rng(s);
    TrialOutcome t;
    try {
      t = c_trial_on(inst, X, rng);
    } catch (const std::exception& e) {
      t.ok = false;
      t.lhs = std::string("error: ") + e.what();
    }
    if (!t.ok) report.failures.push_back({i, s, t.witness, t.lhs, t.rhs});
  }
  return report;
}

}  // namespace cyclemod
