#pragma once

#include "cyclemod/milnor/milnor.hpp"
#include "cyclemod/rng.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cyclemod {

/// Independent cyclic generators of a group; order 0 means infinite cyclic.
struct FiniteGroup {
  std::vector<KElement> generators;
  std::vector<Integer> orders;
};

/// A cycle premodule over the field universe: data (D1)-(D4) and group
/// operations as handles. Values are carried as KElements; how a value is
/// graded is up to the instance (see `degree`).
struct PremoduleInstance {
  std::string name;
  /// r for a twist M{r}: instance degree n is Milnor-shaped degree n + r.
  int shift = 0;

  std::function<int(const KElement&)> degree;
  std::function<KElement(const FieldRef&, int)> zero;
  std::function<KElement(const KElement&, const KElement&)> add;
  std::function<KElement(const KElement&)> neg;
  std::function<KElement(const KElement&, const Integer&)> scale;
  std::function<bool(const KElement&, const KElement&)> equal;

  std::function<KElement(const FieldMap&, const KElement&)> restriction;    // (D1)
  std::function<KElement(const FieldMap&, const KElement&)> corestriction;  // (D2)
  /// gamma_x(y) for a Milnor class x.                                        // (D3)
  std::function<KElement(const KElement&, const KElement&)> multiply;
  /// y.x, the module product on the other side.
  std::function<KElement(const KElement&, const KElement&)> multiply_right;
  std::function<KElement(const Place&, const KElement&)> residue;           // (D4)

  /// Image of a Milnor class of degree k; lands in degree k - shift.
  std::function<KElement(const KElement&)> from_milnor;
  std::function<KElement(const FieldRef&, int, Rng&)> sample;
  /// M_n of a finite field.
  std::function<FiniteGroup(const FieldRef&, int)> finite_group;
  /// Coordinates of a value over a finite field in finite_group's generators.
  std::function<std::vector<Integer>(const KElement&)> finite_coordinates;
  /// Independent generators of the classes in M_n(F_q(t)) whose residues
  /// are supported on finite places of degree <= D and infinity.
  std::function<FiniteGroup(const FieldRef&, int, int)> generic_window;
};

PremoduleInstance milnor_instance();
/// Milnor K-theory mod m; throws InputError for m < 2.
PremoduleInstance mod_instance(const Integer& m);
/// M{r}(E, n) = M(E, n + r).
PremoduleInstance twist_instance(const PremoduleInstance& inner, int r);

/// Names of the deliberately broken Milnor instances used to test the
/// relation suite: r3e-sign, r3a-ramification, d4-slot, r1c-conjugate,
/// k1-unnormalized.
const std::vector<std::string>& mutant_names();
PremoduleInstance mutant_instance(const std::string& name);
/// The relation a mutant is built to break.
std::string mutant_target(const std::string& name);

/// "milnor", "mod:<m>", "twist:<r>" (of milnor), "mutant:<name>".
PremoduleInstance instance_by_name(const std::string& spec);

}  // namespace cyclemod
