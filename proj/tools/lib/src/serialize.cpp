#include "cyclemod_cli/serialize.hpp"

namespace cyclemod::cli {

std::string integer_string(const Integer& k) { return k.str(); }

Json to_json(const KElement& x) {
  Json j;
  j["field"] = x.field().name();
  j["degree"] = x.degree();
  Json payload = Json::object();
  const FieldRef& f = x.field();
  if (!x.is_zero()) {
    if (x.degree() == 0) {
      payload["integer"] = integer_string(x.k0());
    } else if (x.degree() == 1 && f.is_finite()) {
      payload["log"] = x.log();
      payload["value"] = f.base->format(f.base->exp(x.log()));
    } else if (x.degree() == 1) {
      payload["constant"] = f.base->format(x.unit().constant());
      Json factors = Json::array();
      for (const auto& [pi, e] : x.unit().factors())
        factors.push_back({{"pi", pi.to_string(f.var)}, {"exponent", integer_string(e)}});
      payload["factors"] = std::move(factors);
    } else if (x.degree() == 2) {
      Json coords = Json::array();
      for (const auto& [pi, l] : x.coords()) {
        const Place v = Place::finite(f, pi);
        coords.push_back(
            {{"place", pi.to_string(f.var)}, {"log", l}, {"value", v.residue_field()->format(v.residue_field()->exp(l))}});
      }
      payload["coords"] = std::move(coords);
    }
  }
  j["payload"] = std::move(payload);
  j["text"] = x.to_string();
  return j;
}

Json to_json(const CycleClass& c) {
  Json j;
  j["scheme"] = c.scheme.name();
  j["instance"] = c.instance;
  j["p"] = c.p;
  j["n"] = c.n;
  Json coords = Json::array();
  for (const auto& [y, v] : c.coords) coords.push_back({{"point", y.to_string()}, {"kelement", to_json(v)}});
  j["coords"] = std::move(coords);
  Json terms = Json::array();
  for (const auto& t : c.generic_terms) terms.push_back(to_string(t, c.scheme.base()));
  j["terms"] = std::move(terms);
  j["text"] = to_string(c);
  return j;
}

Json to_json(const GroupPresentation& g) {
  Json j;
  j["generators"] = g.generators;
  Json inv = Json::array();
  for (const auto& d : g.invariant_factors) inv.push_back(integer_string(d));
  j["invariant_factors"] = std::move(inv);
  j["group"] = g.group_string();
  Json dist = Json::array();
  for (std::size_t i = 0; i < g.distinguished.size(); ++i) {
    Json coords = Json::array();
    for (const auto& c : g.distinguished[i]) coords.push_back(integer_string(c));
    dist.push_back({{"generator", g.distinguished_labels[i]}, {"coordinates", std::move(coords)}});
  }
  j["distinguished"] = std::move(dist);
  return j;
}

Json to_json(const RelationReport& r) {
  Json j;
  j["relation"] = r.relation;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  Json fs = Json::array();
  for (const auto& f : r.failures)
    fs.push_back({{"trial", f.trial}, {"trial_seed", f.trial_seed}, {"witness", f.witness}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  j["failures"] = std::move(fs);
  return j;
}

Json to_json(const TrialOutcome& t) {
  return {{"ok", t.ok}, {"witness", t.witness}, {"lhs", t.lhs}, {"rhs", t.rhs}};
}

Json to_json(const TraceReport& t) {
  return {{"degree", integer_string(t.degree)},
          {"ok", t.ok},
          {"fibers_ok", t.fibers_ok},
          {"pushed", t.pushed},
          {"expected", t.expected}};
}

}  // namespace cyclemod::cli
