#pragma once

#include "cyclemod/cycles/cycle_class.hpp"

namespace cyclemod {

/// d_y^x(rho): the sum over the normalization fiber of x over y of
/// cor_{kappa_t / kappa_y} of the residue at t; zero when y is not a
/// specialization of x. Not defined out of a plane's generic point
/// (see surface_residue).
KElement residue_pair(const PremoduleInstance& inst, const SchemeModel& X, const PointRef& x, const PointRef& y,
                      const KElement& rho);

/// The coordinate at the declared curve `curve` of d of the symbol terms
/// (all on the plane X, which is not a union), of total degree n.
KElement surface_residue(const PremoduleInstance& inst, const SchemeModel& X, const std::vector<SurfaceTerm>& terms,
                         const std::string& curve, int n);

/// d^p; the support is read off normal forms, so it is exact and finite.
CycleClass differential(const PremoduleInstance& inst, const CycleClass& c);

/// A random class with small support. Plane classes in codimension 0 are
/// built from the declared curve table.
CycleClass sample_class(const PremoduleInstance& inst, const SchemeModel& X, int p, int n, Rng& rng);

struct FdReport {
  bool ok = true;
  /// Largest residue degree in the support of d(c).
  int support_degree = 0;
  std::vector<std::string> support;
  std::string detail;
};

/// Recomputes d(c) by scanning every point of degree <= D for D up to
/// support_degree + extra and checks the result against the support-based
/// differential at each D. Plane generic points are skipped (their
/// differential is supported on the finite curve table by construction).
FdReport check_fd(const PremoduleInstance& inst, const CycleClass& c, int extra = 2);

}  // namespace cyclemod
