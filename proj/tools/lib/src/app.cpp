#include "cyclemod_cli/app.hpp"

#include "cyclemod/cycles/complex.hpp"
#include "cyclemod/errors.hpp"
#include "cyclemod/milnor/milnor.hpp"
#include "cyclemod_cli/literals.hpp"
#include "cyclemod_cli/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace cyclemod::cli {

namespace {

struct Options {
  std::uint64_t seed = 42;
  std::optional<std::size_t> trials;
  int degree_bound = 2;
  std::string field;
  std::string format = "text";
  std::string out;
  std::string instance = "milnor";
  std::optional<std::uint64_t> replay_seed;
  std::vector<std::string> relations;
  std::string place;
  std::string symbol;
  std::string scheme;
  std::string curve;
  std::string map;
  std::optional<int> p;
  std::optional<int> n;
};

struct Result {
  Json json;
  std::string text;
  int code = kOk;
};

std::optional<FieldRef> field_option(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return parse_field_ref(o.field);
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(std::string("missing ") + flag);
}

Result cmd_symbol(const Options& o) {
  require(o.symbol, "--symbol");
  const KElement x = parse_symbol(o.symbol, field_option(o));
  return {{{"command", "symbol"}, {"result", to_json(x)}}, x.to_string() + "\n"};
}

Result cmd_residue(const Options& o) {
  require(o.symbol, "--symbol");
  require(o.place, "--place");
  const PremoduleInstance inst = instance_by_name(o.instance);
  const KElement x = parse_symbol(o.symbol, field_option(o));
  const Place v = parse_place(o.place, x.field());
  const KElement r = inst.residue(v, x);
  return {{{"command", "residue"},
           {"instance", inst.name},
           {"place", v.to_string()},
           {"input", to_json(x)},
           {"result", to_json(r)}},
          r.to_string() + "\n"};
}

Result cmd_norm(const Options& o) {
  require(o.symbol, "--symbol");
  require(o.field, "--field (the target field)");
  const PremoduleInstance inst = instance_by_name(o.instance);
  const KElement x = parse_symbol(o.symbol, std::nullopt);
  const FieldRef target = parse_field_ref(o.field);
  if (target.kind != x.field().kind) throw InputError("norm goes F_{q^d} -> F_q or F_{q^d}(t) -> F_q(t)");
  if (x.field().base->characteristic() != target.base->characteristic() ||
      x.field().base->degree() % target.base->degree() != 0) {
    throw InputError(target.name() + " is not a subfield of " + x.field().name());
  }
  const FiniteMap m = default_embedding(target.base, x.field().base);
  const FieldMap phi =
      target.is_finite() ? FieldMap::finite(m) : FieldMap::constant_extension(m, target.var);
  const KElement r = inst.corestriction(phi, x);
  return {{{"command", "norm"}, {"instance", inst.name}, {"input", to_json(x)}, {"result", to_json(r)}},
          r.to_string() + "\n"};
}

Result cmd_diff(const Options& o) {
  require(o.scheme, "--scheme");
  require(o.symbol, "--symbol");
  const PremoduleInstance inst = instance_by_name(o.instance);
  const SchemeModel X = resolve_scheme(o.scheme, field_option(o));
  const int p = o.p.value_or(o.place.empty() && o.curve.empty() ? 0 : 1);
  CycleClass c;
  if (X.is_surface() && p == 0) {
    const SurfaceTerm t = parse_surface_symbol(o.symbol, X);
    c = make_class(inst, X, 0, static_cast<int>(t.units.size()));
    add_surface_term(inst, c, t);
  } else {
    PointRef y = PointRef::generic();
    std::optional<FieldRef> fallback;
    if (p == 0) {
      if (X.kind() == SchemeKind::DisjointUnion) throw InputError("give the component with a JSON scheme");
      fallback = X.residue_field(y);
    } else if (X.is_surface()) {
      require(o.curve, "--curve");
      y = PointRef::on_curve(o.curve);
      fallback = X.residue_field(y);
    } else {
      require(o.place, "--place");
      y = PointRef::at_place(parse_place(o.place, X.function_field()));
      fallback = X.residue_field(y);
    }
    const KElement rho = parse_symbol(o.symbol, fallback);
    c = make_class(inst, X, p, inst.degree(rho) + p);
    add_coordinate(inst, c, y, rho);
  }
  const CycleClass d = differential(inst, c);
  return {{{"command", "diff"}, {"input", to_json(c)}, {"result", to_json(d)}}, to_string(d) + "\n"};
}

Result cmd_cohomology(const Options& o) {
  require(o.scheme, "--scheme");
  if (!o.p || !o.n) throw InputError("cohomology needs --p and --n");
  const PremoduleInstance inst = instance_by_name(o.instance);
  const SchemeModel X = resolve_scheme(o.scheme, field_option(o));
  const GroupPresentation g = cohomology_window(inst, X, *o.p, *o.n, o.degree_bound);
  Json j{{"command", "cohomology"},
         {"scheme", X.name()},
         {"instance", inst.name},
         {"p", *o.p},
         {"n", *o.n},
         {"degree_bound", o.degree_bound}};
  j["result"] = to_json(g);
  std::string text = g.group_string() + "\n";
  for (std::size_t i = 0; i < g.distinguished.size(); ++i) {
    text += "  " + g.distinguished_labels[i] + " ->";
    for (const auto& c : g.distinguished[i]) text += " " + c.str();
    text += "\n";
  }
  return {std::move(j), std::move(text)};
}

std::string report_text(const RelationReport& r) {
  std::string s = r.relation + (r.passed() ? " pass, " + std::to_string(r.trials) + " trials\n"
                                           : " FAIL, " + std::to_string(r.failures.size()) + " of " +
                                                 std::to_string(r.trials) + " trials failed\n");
  if (!r.passed()) {
    const auto& f = r.failures.front();
    s += "  trial " + std::to_string(f.trial) + " (--replay-seed " + std::to_string(f.trial_seed) + ")\n";
    s += "  witness: " + f.witness + "\n  lhs: " + f.lhs + "\n  rhs: " + f.rhs + "\n";
  }
  return s;
}

Result cmd_axioms(const Options& o) {
  const PremoduleInstance inst = instance_by_name(o.instance);
  if (o.replay_seed) {
    if (o.relations.size() != 1) throw InputError("--replay-seed needs exactly one --relation");
    const TrialOutcome t = run_trial(inst, o.relations.front(), *o.replay_seed);
    Json j{{"command", "axioms"}, {"instance", inst.name}, {"relation", o.relations.front()}, {"trial_seed", *o.replay_seed}};
    j["outcome"] = to_json(t);
    std::string text = o.relations.front() + (t.ok ? " pass" : " FAIL") + "\n  witness: " + t.witness +
                       "\n  lhs: " + t.lhs + "\n  rhs: " + t.rhs + "\n";
    return {std::move(j), std::move(text), t.ok ? kOk : kViolation};
  }
  SuiteConfig config;
  config.trials = o.trials.value_or(200);
  config.seed = o.seed;
  config.relations = o.relations;
  for (const auto& id : config.relations) {
    const auto& ids = relation_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw InputError("unknown relation '" + id + "'");
  }
  const auto reports = run_relation_suite(inst, config);
  Json list = Json::array();
  std::string text = "instance " + inst.name + ", " + std::to_string(config.trials) + " trials, seed " +
                     std::to_string(config.seed) + "\n";
  std::size_t failed = 0;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    text += report_text(r);
    failed += !r.passed();
  }
  text += failed == 0 ? "all relations pass\n" : std::to_string(failed) + " relation(s) fail\n";
  Json j{{"command", "axioms"}, {"instance", inst.name}, {"trials", config.trials}, {"seed", config.seed}};
  j["passed"] = failed == 0;
  j["reports"] = std::move(list);
  return {std::move(j), std::move(text), failed == 0 ? kOk : kViolation};
}

// The pushforward to the point of d of a class on P^1 vanishes.
TrialOutcome reciprocity_trial(const PremoduleInstance& inst, const KElement& x) {
  const SchemeModel P1 = SchemeModel::projective_line(x.field().base);
  CycleClass c = make_class(inst, P1, 0, inst.degree(x));
  add_coordinate(inst, c, PointRef::generic(), x);
  const CycleClass pushed = pushforward_finite(inst, structural(P1), differential(inst, c));
  TrialOutcome t;
  t.ok = pushed.empty();
  t.witness = x.field().name() + " " + x.to_string();
  t.lhs = to_string(pushed);
  t.rhs = "0";
  return t;
}

Result cmd_reciprocity(const Options& o) {
  const PremoduleInstance inst = instance_by_name(o.instance);
  std::vector<FieldPtr> bases;
  if (!o.field.empty()) bases.push_back(parse_field_ref(o.field).base);
  else
    for (const std::uint64_t q : {2, 3, 5}) bases.push_back(field_of_order(q));
  if (!o.symbol.empty()) {
    const KElement x = parse_symbol(o.symbol, bases.size() == 1 ? std::optional(FieldRef::rational(bases[0])) : std::nullopt);
    if (!x.field().is_rational()) throw InputError("reciprocity needs a class over GF(q)(t)");
    const TrialOutcome t = reciprocity_trial(inst, x);
    Json j{{"command", "reciprocity"}, {"instance", inst.name}};
    j["outcome"] = to_json(t);
    return {std::move(j), std::string(t.ok ? "pass" : "FAIL") + "\n  sum: " + t.lhs + "\n", t.ok ? kOk : kViolation};
  }
  const std::size_t trials = o.trials.value_or(500);
  Json list = Json::array();
  std::string text;
  bool ok = true;
  for (const auto& base : bases) {
    const FieldRef f = FieldRef::rational(base);
    RelationReport r{"reciprocity@" + f.name(), trials, o.seed, {}};
    for (std::size_t i = 0; i < trials; ++i) {
      const std::uint64_t s = trial_seed(o.seed, r.relation, i);
      Rng rng(s);
      const TrialOutcome t = reciprocity_trial(inst, inst.sample(f, 2 - inst.shift, rng));
      if (!t.ok) r.failures.push_back({i, s, t.witness, t.lhs, t.rhs});
    }
    ok = ok && r.passed();
    list.push_back(to_json(r));
    text += report_text(r);
  }
  Json j{{"command", "reciprocity"}, {"instance", inst.name}, {"trials", trials}, {"seed", o.seed}};
  j["passed"] = ok;
  j["reports"] = std::move(list);
  return {std::move(j), std::move(text), ok ? kOk : kViolation};
}

Result cmd_trace(const Options& o) {
  require(o.scheme, "--scheme");
  require(o.map, "--map");
  const PremoduleInstance inst = instance_by_name(o.instance);
  const SchemeModel X = resolve_scheme(o.scheme, field_option(o));
  const Morphism f = parse_morphism(o.map, X);
  const TraceReport t = trace(inst, f);
  Json j{{"command", "trace"}, {"instance", inst.name}, {"map", f.to_string()}};
  j["result"] = to_json(t);
  std::string text = t.degree.str() + "\n  f_*(1) = " + t.pushed + "\n  d.1 = " + t.expected +
                     "\n  fibers: " + (t.fibers_ok ? "ok" : "MISMATCH") + "\n";
  return {std::move(j), std::move(text), t.ok && t.fibers_ok ? kOk : kViolation};
}

std::string position_suffix(const InputError& e) {
  return e.position() == InputError::npos ? "" : " (at position " + std::to_string(e.position()) + ")";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cycle-module computations over finite fields", "cyclemod"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed, "master seed (default 42)");
  app.add_option("--trials", o.trials, "trials per relation");
  app.add_option("--degree-bound", o.degree_bound, "window: residue degrees up to D")->check(CLI::Range(1, 8));
  app.add_option("--field", o.field, "GF(q) or GF(q)(t)");
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", o.out, "write the report here instead of stdout");
  app.add_option("--instance", o.instance, "milnor, mod:<m>, twist:<r>, mutant:<name>");

  using Command = std::function<Result(const Options&)>;
  Command chosen;
  auto sub = [&](const char* name, const char* help, Command c) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&chosen, c] { chosen = c; });
    return s;
  };
  CLI::App* symbol = sub("symbol", "normal form of a symbol literal", cmd_symbol);
  symbol->add_option("--symbol", o.symbol, "e.g. {t, t+1}@GF(3)(t):2")->required();
  CLI::App* residue = sub("residue", "residue of a class at a place", cmd_residue);
  residue->add_option("--symbol", o.symbol)->required();
  residue->add_option("--place", o.place, "monic irreducible or inf")->required();
  CLI::App* norm = sub("norm", "corestriction down to --field", cmd_norm);
  norm->add_option("--symbol", o.symbol)->required();
  CLI::App* diff = sub("diff", "differential of a class", cmd_diff);
  diff->add_option("--scheme", o.scheme, "builtin name or JSON file")->required();
  diff->add_option("--symbol", o.symbol)->required();
  diff->add_option("--place", o.place, "coordinate at this place (curves)");
  diff->add_option("--curve", o.curve, "coordinate on this declared curve (planes)");
  diff->add_option("--p", o.p, "codimension");
  CLI::App* coh = sub("cohomology", "A^p(X; M)_n on the degree window", cmd_cohomology);
  coh->add_option("--scheme", o.scheme)->required();
  coh->add_option("--p", o.p)->required();
  coh->add_option("--n", o.n)->required();
  CLI::App* axioms = sub("axioms", "run the relation suite", cmd_axioms);
  axioms->add_option("--relation", o.relations, "restrict to these relation ids");
  axioms->add_option("--replay-seed", o.replay_seed, "rerun one trial from its seed");
  CLI::App* rec = sub("reciprocity", "Weil reciprocity on P^1", cmd_reciprocity);
  rec->add_option("--symbol", o.symbol, "check this class instead of sampling");
  CLI::App* tr = sub("trace", "f_*(1) = d for a finite map", cmd_trace);
  tr->add_option("--scheme", o.scheme)->required();
  tr->add_option("--map", o.map, "t->g(t), GF(q), structural")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  o.seed = seed.value_or(42);

  Result r;
  try {
    r = chosen(o);
  } catch (const InputError& e) {
    err << "error: " << e.what() << position_suffix(e) << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const std::string body = o.format == "json" ? r.json.dump(2) + "\n" : r.text;
  if (o.out.empty()) {
    out << body;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << o.out << "'\n";
      return kInputError;
    }
    f << body;
  }
  return r.code;
}

}  // namespace cyclemod::cli
