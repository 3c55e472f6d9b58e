#pragma once

#include "cyclemod/exactfield/integer.hpp"

#include <vector>

namespace cyclemod {

using IntMatrix = std::vector<std::vector<Integer>>;

/// U A V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
/// Pivots are chosen deterministically (smallest absolute value, then
/// lowest row, then lowest column).
struct SmithForm {
  std::vector<Integer> diagonal;  // min(rows, cols) entries
  IntMatrix U;
  IntMatrix V;
  IntMatrix V_inv;
};

SmithForm smith_form(const IntMatrix& a, std::size_t cols);

/// Invariant factors of Z^cols / rowspan(a): entries != 1, torsion first
/// and 0 for each free summand.
std::vector<Integer> cokernel_invariants(const IntMatrix& a, std::size_t cols);

/// Rows spanning {x : x a = 0}.
IntMatrix left_kernel(const IntMatrix& a, std::size_t cols);

}  // namespace cyclemod
