#include "cyclemod/cycles/cohomology.hpp"

#include "cyclemod/cycles/complex.hpp"
#include "cyclemod/errors.hpp"

namespace cyclemod {

std::size_t GroupPresentation::rank() const {
  std::size_t r = 0;
  for (const auto& d : invariant_factors) r += d == 0;
  return r;
}

std::string GroupPresentation::group_string() const {
  if (invariant_factors.empty()) return "0";
  std::string s;
  for (const auto& d : invariant_factors) {
    if (!s.empty()) s += " + ";
    s += d == 0 ? std::string("Z") : "Z/" + d.str();
  }
  return s;
}

GroupPresentation present(std::vector<std::string> generators, IntMatrix relations,
                          const std::vector<std::size_t>& marked) {
  GroupPresentation g;
  const std::size_t cols = generators.size();
  const SmithForm s = smith_form(relations, cols);
  std::vector<std::size_t> keep;
  std::vector<Integer> torsion_moduli;
  for (std::size_t i = 0; i < cols; ++i) {
    const Integer d = i < s.diagonal.size() ? s.diagonal[i] : Integer(0);
    if (d == 1) continue;
    keep.push_back(i);
    g.invariant_factors.push_back(d);
  }
  for (const std::size_t j : marked) {
    std::vector<Integer> coords;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      Integer c = s.V[j][keep[k]];
      const Integer& d = g.invariant_factors[k];
      if (d != 0) {
        c %= d;
        if (c < 0) c += d;
      }
      coords.push_back(c);
    }
    g.distinguished_labels.push_back(generators[j]);
    g.distinguished.push_back(std::move(coords));
  }
  g.generators = std::move(generators);
  g.relations = std::move(relations);
  return g;
}

namespace {

struct Block {
  std::vector<std::string> generators;
  IntMatrix relations;
  std::vector<std::size_t> marked;
};

std::string label(const PointRef& x, std::size_t i, std::size_t count) {
  return count == 1 ? x.to_string() : x.to_string() + "#" + std::to_string(i);
}

void add_torsion_rows(IntMatrix& rows, const std::vector<Integer>& orders, std::size_t offset, std::size_t width) {
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] == 0) continue;
    std::vector<Integer> r(width, 0);
    r[offset + i] = orders[i];
    rows.push_back(std::move(r));
  }
}

// Coordinate groups of the window points of a curve model.
struct Target {
  std::vector<PointRef> points;
  std::map<PointRef, std::size_t> offset;
  std::vector<std::string> labels;
  std::vector<Integer> orders;
};

Target curve_target(const PremoduleInstance& inst, const SchemeModel& M, std::size_t part, int n, int D) {
  Target t;
  for (auto v : M.points(1, D)) {
    v.part = part;
    const FiniteGroup G = inst.finite_group(v.place.residue(), n - 1);
    t.offset[v] = t.labels.size();
    for (std::size_t i = 0; i < G.orders.size(); ++i) {
      t.labels.push_back(label(v, i, G.orders.size()));
      t.orders.push_back(G.orders[i]);
    }
    t.points.push_back(v);
  }
  return t;
}

// d^0 of a generic value in the coordinates of the target window.
std::vector<Integer> image_row(const PremoduleInstance& inst, const SchemeModel& M, std::size_t part, const Target& t,
                               const KElement& g) {
  std::vector<Integer> row(t.labels.size(), 0);
  for (const auto& v : residue_support(g)) {
    if (!M.contains(v)) continue;
    const KElement r = inst.residue(v, g);
    if (is_zero_value(inst, r)) continue;
    auto it = t.offset.find(PointRef::at_place(v, part));
    if (it == t.offset.end()) throw DomainError("window generator has a residue outside the window at " + v.to_string());
    const auto coords = inst.finite_coordinates(r);
    for (std::size_t i = 0; i < coords.size(); ++i) row[it->second + i] += coords[i];
  }
  return row;
}

Block spec_block(const PremoduleInstance& inst, const SchemeModel& M, std::size_t part, int n) {
  Block b;
  const FiniteGroup G = inst.finite_group(FieldRef::finite(M.base()), n);
  for (std::size_t i = 0; i < G.orders.size(); ++i) b.generators.push_back(label(PointRef::generic(part), i, G.orders.size()));
  add_torsion_rows(b.relations, G.orders, 0, b.generators.size());
  return b;
}

Block curve_block(const PremoduleInstance& inst, const SchemeModel& M, std::size_t part, int p, int n, int D) {
  Block b;
  const Target t = curve_target(inst, M, part, n, D);
  const FiniteGroup W = inst.generic_window(M.function_field(), n, D);
  if (p == 1) {
    b.generators = t.labels;
    add_torsion_rows(b.relations, t.orders, 0, t.labels.size());
    for (const auto& g : W.generators) b.relations.push_back(image_row(inst, M, part, t, g));
    for (const auto& v : t.points)
      if (v.place.degree() == 1 && !v.place.is_infinite()) {
        b.marked.push_back(t.offset.at(v));
        break;
      }
    if (b.marked.empty() && !t.points.empty()) b.marked.push_back(0);
    return b;
  }
  // p = 0: kernel of the window generators (with their orders) into the target.
  const std::size_t g = W.generators.size();
  IntMatrix stacked;
  for (const auto& x : W.generators) stacked.push_back(image_row(inst, M, part, t, x));
  add_torsion_rows(stacked, t.orders, 0, t.labels.size());
  IntMatrix kernel;
  for (const auto& row : left_kernel(stacked, t.labels.size())) {
    std::vector<Integer> k(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(g));
    bool zero = true;
    for (const auto& x : k) zero = zero && x == 0;
    if (!zero) kernel.push_back(std::move(k));
  }
  if (kernel.empty()) return b;
  const SmithForm s = smith_form(kernel, g);
  std::size_t r = 0;
  while (r < s.diagonal.size() && s.diagonal[r] != 0) ++r;
  for (std::size_t i = 0; i < r; ++i) {
    std::string desc;
    for (std::size_t j = 0; j < g; ++j) {
      const Integer c = s.diagonal[i] * s.V_inv[i][j];
      if (c == 0) continue;
      desc += (desc.empty() ? "" : " + ") + (c == 1 ? std::string() : c.str() + "*") + "w" + std::to_string(j);
    }
    b.generators.push_back(PointRef::generic(part).to_string() + "[" + desc + "]");
  }
  // o_j e_j in the kernel basis b_i = d_i * row_i(V^-1).
  for (std::size_t j = 0; j < g; ++j) {
    if (W.orders[j] == 0) continue;
    std::vector<Integer> row(r, 0);
    bool any = false;
    for (std::size_t i = 0; i < r; ++i) {
      const Integer num = W.orders[j] * s.V[j][i];
      if (num % s.diagonal[i] != 0) throw DomainError("torsion relation outside the kernel lattice");
      row[i] = num / s.diagonal[i];
      any = any || row[i] != 0;
    }
    if (any) b.relations.push_back(std::move(row));
  }
  return b;
}

}  // namespace

GroupPresentation cohomology_window(const PremoduleInstance& inst, const SchemeModel& X, int p, int n, int D) {
  if (p < 0 || p > X.dimension()) throw InputError("codimension " + std::to_string(p) + " out of range for " + X.name());
  if (D < 1) throw InputError("degree bound must be at least 1");
  std::vector<std::pair<std::size_t, const SchemeModel*>> parts;
  if (X.kind() == SchemeKind::DisjointUnion) {
    for (std::size_t i = 0; i < X.parts().size(); ++i) parts.emplace_back(i, &X.parts()[i]);
  } else {
    parts.emplace_back(0, &X);
  }
  Block all;
  for (const auto& [i, M] : parts) {
    if (p > M->dimension()) continue;
    if (M->is_surface()) throw DomainError("cohomology windows of planes are not computed");
    const Block b = M->kind() == SchemeKind::Spec ? spec_block(inst, *M, i, n) : curve_block(inst, *M, i, p, n, D);
    const std::size_t off = all.generators.size();
    for (auto& row : all.relations) row.resize(off + b.generators.size(), 0);
    for (const auto& row : b.relations) {
      std::vector<Integer> r(off, 0);
      r.insert(r.end(), row.begin(), row.end());
      all.relations.push_back(std::move(r));
    }
    for (const auto m : b.marked) all.marked.push_back(off + m);
    all.generators.insert(all.generators.end(), b.generators.begin(), b.generators.end());
  }
  return present(std::move(all.generators), std::move(all.relations), all.marked);
}

bool a0_membership(const PremoduleInstance& inst, const SchemeModel& X, const KElement& rho) {
  if (X.kind() == SchemeKind::DisjointUnion) throw InputError("give the component of a disjoint union");
  if (X.is_surface()) throw InputError("plane classes are given as symbol terms");
  CycleClass c = make_class(inst, X, 0, inst.degree(rho));
  add_coordinate(inst, c, PointRef::generic(), rho);
  return differential(inst, c).empty();
}

bool a0_membership(const PremoduleInstance& inst, const SchemeModel& X, const std::vector<SurfaceTerm>& terms, int n) {
  CycleClass c = make_class(inst, X, 0, n);
  for (const auto& t : terms) add_surface_term(inst, c, t);
  return differential(inst, c).empty();
}

}  // namespace cyclemod
