// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "cyclemod/cycles/checks.hpp"
#include "cyclemod/cycles/cohomology.hpp"
#include "cyclemod/cycles/complex.hpp"
#include "cyclemod/cycles/morphisms.hpp"
#include "cyclemod/exactfield/parse.hpp"
#include "cyclemod/milnor/milnor.hpp"
#include "cyclemod/premodule/relations.hpp"
#include "cyclemod/premodule/sampling.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace cyclemod;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Verdict relation_suite() {
  Verdict v;
  const auto t0 = Clock::now();
  const auto reports = run_relation_suite(milnor_instance(), {200, 42, {}});
  for (const auto& r : reports)
    if (!r.passed()) v.fail(r.relation + ": " + r.failures.front().witness);
  const double s = seconds_since(t0);
  if (s >= 120) v.fail("took " + std::to_string(s) + " s");
  if (v.ok) v.detail = std::to_string(reports.size()) + " relations x 200 trials in " + std::to_string(s) + " s";
  return v;
}

Verdict mutation_sensitivity() {
  Verdict v;
  for (const auto& m : mutant_names()) {
    const auto inst = mutant_instance(m);
    const std::string id = mutant_target(m);
    const auto r = check_relation(inst, id, 200, 42);
    if (r.passed()) {
      v.fail(m + " passes " + id);
      continue;
    }
    const auto& f = r.failures.front();
    const auto again = run_trial(inst, id, f.trial_seed);
    if (again.ok || again.witness != f.witness || again.lhs != f.lhs || again.rhs != f.rhs)
      v.fail(m + ": witness does not replay");
  }
  if (v.ok) v.detail = std::to_string(mutant_names().size()) + " mutants caught, witnesses replay";
  return v;
}

Verdict fd_and_c() {
  Verdict v;
  const auto M = milnor_instance();
  std::size_t classes = 0;
  for (const std::uint64_t q : {2, 3, 4, 5}) {
    const auto base = field_of_order(q);
    for (const char* name : {"A1", "P1", "A2", "P2"}) {
      const SchemeModel X = builtin_scheme(name, base);
      const auto r = check_c(M, X, 100, 42);
      if (!r.passed()) v.fail(std::string("C on ") + X.name() + ": " + r.failures.front().witness);
      // (FD) on classes of the curve models: supports finite and D-stable.
      if (X.is_surface()) continue;
      for (std::size_t i = 0; i < 25; ++i) {
        Rng rng(trial_seed(42, std::string("FD@") + X.name(), i));
        for (int p = 0; p <= 1; ++p) {
          const auto c = sample_class(M, X, p, static_cast<int>(rng.below(3)), rng);
          const auto fd = check_fd(M, c);
          ++classes;
          if (!fd.ok) v.fail("FD on " + X.name() + ": " + fd.detail);
        }
      }
    }
  }
  if (v.ok) v.detail = "d.d = 0 on 16 models x 100 samples; " + std::to_string(classes) + " supports D-stable";
  return v;
}

Verdict chow_groups() {
  Verdict v;
  const auto M = milnor_instance();
  for (const std::uint64_t q : {2, 3, 5}) {
    const auto base = field_of_order(q);
    for (int D = 1; D <= 4; ++D) {
      const auto g = cohomology_window(M, SchemeModel::projective_line(base), 1, 1, D);
      const bool degree_one = g.distinguished.size() == 1 && g.distinguished.front().size() == 1 &&
                              (g.distinguished.front().front() == 1 || g.distinguished.front().front() == -1);
      if (g.group_string() != "Z" || !degree_one)
        v.fail("A^1(P^1)_1 over GF(" + std::to_string(q) + ") at D=" + std::to_string(D) + " is " + g.group_string());
    }
    const auto a1 = cohomology_window(M, SchemeModel::affine_line(base), 1, 1, 2);
    if (a1.group_string() != "0") v.fail("A^1(A^1)_1 = " + a1.group_string());
    for (int n = 0; n <= 2; ++n) {
      const auto lhs = cohomology_window(M, SchemeModel::affine_line(base), 0, n, 2).group_string();
      const auto rhs = cohomology_window(M, SchemeModel::spec(base), 0, n, 1).group_string();
      if (lhs != rhs) v.fail("A^0(A^1)_" + std::to_string(n) + " = " + lhs + " but K_n = " + rhs);
    }
  }
  // Membership + specialization round trip on 100 samples.
  int round_trips = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng(trial_seed(42, "A0", i));
    const auto base = field_of_order(universe_orders()[rng.below(universe_orders().size())]);
    const FieldRef kf = FieldRef::finite(base), ft = FieldRef::rational(base);
    const SchemeModel a1 = SchemeModel::affine_line(base);
    const int n = static_cast<int>(rng.below(3));
    const KElement c = sample_milnor(kf, n, rng);
    const FieldMap constants = FieldMap::constants(identity_map(base));
    const KElement x = res_field(constants, c);
    if (!a0_membership(M, a1, x)) {
      v.fail("constant class " + c.to_string() + " not in A^0");
      continue;
    }
    const Place at = random_place(ft, rng, 1, false);
    const KElement s = divisor_pullback(M, a1, at, at.uniformizer(), x);
    if (!(s == c)) v.fail("specialization of " + x.to_string() + " gives " + s.to_string());
    // A sampled class lies in A^0 exactly when it is constant.
    const KElement y = sample_milnor(ft, n, rng);
    if (a0_membership(M, a1, y) && !(res_field(constants, divisor_pullback(M, a1, at, at.uniformizer(), y)) == y))
      v.fail("non-constant A^0 element " + y.to_string());
    ++round_trips;
  }
  if (v.ok) v.detail = "P^1 gives Z for D=1..4, A^1 gives 0, " + std::to_string(round_trips) + " round trips";
  return v;
}

Verdict trace_formula() {
  Verdict v;
  int maps = 0;
  for (const std::uint64_t q : {3, 5}) {
    const auto base = field_of_order(q);
    const SchemeModel P1 = SchemeModel::projective_line(base);
    Rng rng(trial_seed(42, "trace@" + std::to_string(q), 0));
    for (int k = 0; k < 10; ++k) {
      const int d = 1 + k % 5;
      RationalFunction g;
      do {
        const Poly num = random_poly(base, rng, d, false);
        const Poly den = random_poly(base, rng, static_cast<int>(rng.below(d + 1)), true);
        g = RationalFunction(num, den.is_zero() ? Poly::constant(base, 1) : den);
      } while (g.degree() != d);
      const TraceReport t = trace(milnor_instance(), substitution(P1, g));
      ++maps;
      if (t.degree != d || !t.ok || !t.fibers_ok)
        v.fail("t -> " + g.to_string() + ": f_*(1) = " + t.pushed + ", expected " + std::to_string(d));
    }
  }
  if (v.ok) v.detail = std::to_string(maps) + " maps of degree 1..5 over GF(3), GF(5)";
  return v;
}

Verdict weil_reciprocity() {
  Verdict v;
  const auto t0 = Clock::now();
  const auto M = milnor_instance();
  int nonzero = 0;
  for (const std::uint64_t q : {2, 3, 5}) {
    const auto base = field_of_order(q);
    const FieldRef f = FieldRef::rational(base);
    const SchemeModel P1 = SchemeModel::projective_line(base);
    for (std::size_t i = 0; i < 500; ++i) {
      Rng rng(trial_seed(42, "reciprocity@" + f.name(), i));
      const KElement x = sample_milnor(f, 2, rng);
      nonzero += !x.is_zero();
      CycleClass c = make_class(M, P1, 0, 2);
      add_coordinate(M, c, PointRef::generic(), x);
      const auto pushed = pushforward_finite(M, structural(P1), differential(M, c));
      if (!pushed.empty() || !reciprocity_sum(x).is_zero()) v.fail(f.name() + " " + x.to_string());
    }
  }
  const double s = seconds_since(t0);
  if (s >= 30) v.fail("took " + std::to_string(s) + " s");
  if (v.ok) v.detail = "1500 classes (" + std::to_string(nonzero) + " nonzero) in " + std::to_string(s) + " s";
  return v;
}

Verdict pullbacks() {
  Verdict v;
  const auto M = milnor_instance();
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng(trial_seed(42, "divisor-pullback", i));
    const auto base = field_of_order(universe_orders()[rng.below(universe_orders().size())]);
    const FieldRef ft = FieldRef::rational(base);
    std::vector<Place> removed;
    const int k = 1 + static_cast<int>(rng.below(2));
    while (static_cast<int>(removed.size()) < k) {
      const Place w = random_place(ft, rng, 2, false);
      if (std::find(removed.begin(), removed.end(), w) == removed.end()) removed.push_back(w);
    }
    std::vector<Poly> pis;
    for (const auto& w : removed) pis.push_back(w.pi());
    const SchemeModel X = SchemeModel::punctured_line(base, pis);
    // A unit on X: a constant times powers of the removed primes.
    auto unit = [&] {
      RationalFunction u = RationalFunction::constant(base, random_unit_code(base, rng));
      for (const auto& pi : pis) u = u * RationalFunction(pi).pow(static_cast<int>(rng.below(5)) - 2);
      return u;
    };
    Place at;
    do at = random_place(ft, rng, 2, false);
    while (std::find(removed.begin(), removed.end(), at) != removed.end());
    const int n = i % 4 == 3 ? 2 : 1;
    std::vector<RationalFunction> us;
    for (int j = 0; j < n; ++j) us.push_back(unit());
    const KElement a = symbol(ft, us);
    if (!a0_membership(M, X, a)) {
      v.fail(a.to_string() + " not in A^0 of " + X.name());
      continue;
    }
    std::vector<Code> values;
    for (const auto& u : us) values.push_back(at.reduce(u));
    const KElement expected = finite_symbol(at.residue(), values);
    const KElement got = divisor_pullback(M, X, at, at.uniformizer(), a);
    if (!(got == expected)) v.fail("at " + at.to_string() + ": " + got.to_string() + " vs " + expected.to_string());
  }
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng(trial_seed(42, "flat-pullback", i));
    const auto base = field_of_order(universe_orders()[rng.below(3)]);
    const SchemeModel a1 = SchemeModel::affine_line(base), p1 = SchemeModel::projective_line(base);
    Morphism f;
    switch (i % 4) {
      case 0:
        f = open_immersion(a1, p1);
        break;
      case 1:
        f = open_immersion(SchemeModel::punctured_line(base, {random_place(FieldRef::rational(base), rng, 2, false).pi()}), a1);
        break;
      case 2:
        f = base_change(rng.below(2) ? a1 : p1, make_field(base->characteristic(), base->degree() * 2));
        break;
      default:
        f = substitution(p1, parse_rational(rng.below(2) ? "t^2+t" : "(t^3+1)/(t^2+1)", base));
    }
    const auto c = sample_class(M, f.target, 0, static_cast<int>(rng.below(3)), rng);
    if (!class_equal(M, differential(M, flat_pullback(M, f, c)), flat_pullback(M, f, differential(M, c))))
      v.fail(f.to_string() + " on " + to_string(c));
  }
  if (v.ok) v.detail = "200 evaluations, 200 chain-map witnesses";
  return v;
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  status = pclose(p);
  return out;
}

Verdict reproducibility() {
  Verdict v;
  const std::string exe = CYCLEMOD_CLI;
  const std::vector<std::string> runs{
      "axioms --instance milnor --trials 200 --seed 42 --format json",
      "cohomology --scheme P1 --field 'GF(3)' --p 1 --n 1 --degree-bound 2 --format json",
      "trace --map 't->t^2' --scheme P1 --field 'GF(3)' --format json",
      "reciprocity --seed 42 --format json",
  };
  std::string first, second;
  for (int round = 0; round < 2; ++round) {
    std::string& acc = round == 0 ? first : second;
    for (const auto& r : runs) {
      int status = 0;
      acc += capture("'" + exe + "' " + r, status);
      if (status != 0) v.fail(r + " exited with status " + std::to_string(status));
    }
  }
  if (first != second) v.fail("outputs differ between runs");
  if (first.empty()) v.fail("no output");
  if (v.ok) v.detail = std::to_string(first.size()) + " bytes identical across two runs";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"1 relation suite", relation_suite}, {"2 mutation sensitivity", mutation_sensitivity},
      {"3 FD and C", fd_and_c},             {"4 Chow groups", chow_groups},
      {"5 trace formula", trace_formula},   {"6 Weil reciprocity", weil_reciprocity},
      {"7 pullbacks", pullbacks},           {"8 CLI reproducibility", reproducibility},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    std::cout << (v.ok ? "PASS " : "FAIL ") << name << ": " << v.detail << std::endl;
    failed += !v.ok;
  }
  return failed == 0 ? 0 : 1;
}
