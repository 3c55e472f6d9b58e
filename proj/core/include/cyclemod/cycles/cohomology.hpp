#pragma once

#include "cyclemod/cycles/cycle_class.hpp"
#include "cyclemod/cycles/smith.hpp"

namespace cyclemod {

/// A finitely presented abelian group Z^g / rowspan(relations) with its
/// invariant factors (torsion ascending, then 0 per free summand).
struct GroupPresentation {
  std::vector<std::string> generators;
  IntMatrix relations;
  std::vector<Integer> invariant_factors;
  /// Labels and coordinates, in the invariant-factor basis, of marked
  /// generators (the class of a degree-one place for A^1 of a curve).
  std::vector<std::string> distinguished_labels;
  std::vector<std::vector<Integer>> distinguished;

  std::size_t rank() const;
  /// "0", "Z", "Z/2 + Z", ...
  std::string group_string() const;
};

/// Presents generators with the given relation rows and computes the
/// invariant factors and the images of the marked generators.
GroupPresentation present(std::vector<std::string> generators, IntMatrix relations,
                          const std::vector<std::size_t>& marked = {});

/// A^p(X; M)_n computed on the window of points of residue degree <= D:
/// generators are the coordinate groups of window points, relations the
/// images of window-supported classes one codimension lower (for p = 0,
/// the kernel of d^0 on the window). Curve models, SPEC and their unions;
/// planes throw DomainError.
GroupPresentation cohomology_window(const PremoduleInstance& inst, const SchemeModel& X, int p, int n, int D);

/// Whether rho, a value over the function field of the curve model (or of
/// a SPEC), has no residue at any point of X.
bool a0_membership(const PremoduleInstance& inst, const SchemeModel& X, const KElement& rho);
/// The same for symbol terms on a plane.
bool a0_membership(const PremoduleInstance& inst, const SchemeModel& X, const std::vector<SurfaceTerm>& terms, int n);

}  // namespace cyclemod
