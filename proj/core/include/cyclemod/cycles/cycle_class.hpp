#pragma once

#include "cyclemod/premodule/instance.hpp"
#include "cyclemod/schemes/scheme.hpp"

#include <map>
#include <string>
#include <vector>

namespace cyclemod {

/// c * prod h_C^{e_C} over declared curves C of a plane model.
struct SurfaceUnit {
  Code constant = 1;
  std::map<std::string, long> exponents;
};

/// {u_1, ..., u_k} . m at the generic point of a plane, with m a value
/// over the base field. The function field of a plane lies outside the
/// field universe, so generic coordinates there are kept in this form.
struct SurfaceTerm {
  std::size_t part = 0;
  std::vector<SurfaceUnit> units;
  KElement m;
};

/// An element of C^p(X; M)_n: coordinates in M_{n-p}(kappa_x).
struct CycleClass {
  SchemeModel scheme;
  std::string instance;
  int p = 0;
  int n = 0;
  std::map<PointRef, KElement> coords;
  std::vector<SurfaceTerm> generic_terms;

  bool empty() const { return coords.empty() && generic_terms.empty(); }
};

bool is_zero_value(const PremoduleInstance& inst, const KElement& x);

CycleClass make_class(const PremoduleInstance& inst, const SchemeModel& X, int p, int n);

/// Adds rho at x, checking codimension, residue field and degree; zero
/// coordinates are dropped.
void add_coordinate(const PremoduleInstance& inst, CycleClass& c, const PointRef& x, const KElement& rho);

/// Throws InputError unless the term lives on a plane part of c's scheme,
/// refers to declared affine curves and has degree n.
void add_surface_term(const PremoduleInstance& inst, CycleClass& c, SurfaceTerm term);

CycleClass class_sum(const PremoduleInstance& inst, const CycleClass& a, const CycleClass& b);
CycleClass class_scale(const PremoduleInstance& inst, const CycleClass& a, const Integer& k);
/// Coordinatewise; generic surface terms are compared as written.
bool class_equal(const PremoduleInstance& inst, const CycleClass& a, const CycleClass& b);

std::string to_string(const SurfaceTerm& t, const FieldPtr& base);
std::string to_string(const CycleClass& c);

}  // namespace cyclemod
