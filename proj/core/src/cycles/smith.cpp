#include "cyclemod/cycles/smith.hpp"

#include "cyclemod/errors.hpp"

#include <utility>

namespace cyclemod {

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }

struct Reducer {
  IntMatrix a, U, V, Vi;
  std::size_t m, n;

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(U[i], U[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : V) std::swap(r[i], r[j]);
    std::swap(Vi[i], Vi[j]);
  }
  // row_i -= q row_t
  void row_sub(std::size_t i, std::size_t t, const Integer& q) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] -= q * a[t][j];
    for (std::size_t j = 0; j < m; ++j) U[i][j] -= q * U[t][j];
  }
  // col_j -= q col_t
  void col_sub(std::size_t j, std::size_t t, const Integer& q) {
    for (std::size_t i = 0; i < m; ++i) a[i][j] -= q * a[i][t];
    for (std::size_t i = 0; i < n; ++i) V[i][j] -= q * V[i][t];
    for (std::size_t k = 0; k < n; ++k) Vi[t][k] += q * Vi[j][k];
  }
  void negate_row(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : U[i]) x = -x;
  }
};

}  // namespace

SmithForm smith_form(const IntMatrix& a, std::size_t cols) {
  for (const auto& r : a)
    if (r.size() != cols) throw DomainError("ragged relation matrix");
  Reducer R{a, identity(a.size()), identity(cols), identity(cols), a.size(), cols};
  const std::size_t m = R.m, n = R.n;
  const std::size_t k = std::min(m, n);
  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      std::size_t pi = m, pj = n;
      Integer best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (R.a[i][j] != 0 && (best == 0 || abs_of(R.a[i][j]) < best)) {
            best = abs_of(R.a[i][j]);
            pi = i;
            pj = j;
          }
      if (best == 0) break;
      R.swap_rows(t, pi);
      R.swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (R.a[i][t] == 0) continue;
        R.row_sub(i, t, R.a[i][t] / R.a[t][t]);
        if (R.a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (R.a[t][j] == 0) continue;
        R.col_sub(j, t, R.a[t][j] / R.a[t][t]);
        if (R.a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (R.a[i][j] % R.a[t][t] != 0) {
            for (std::size_t c = 0; c < n; ++c) R.a[t][c] += R.a[i][c];
            for (std::size_t c = 0; c < m; ++c) R.U[t][c] += R.U[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (R.a[t][t] < 0) R.negate_row(t);
  }
  SmithForm out;
  for (std::size_t t = 0; t < k; ++t) out.diagonal.push_back(R.a[t][t]);
  out.U = std::move(R.U);
  out.V = std::move(R.V);
  out.V_inv = std::move(R.Vi);
  return out;
}

std::vector<Integer> cokernel_invariants(const IntMatrix& a, std::size_t cols) {
  const SmithForm s = smith_form(a, cols);
  std::vector<Integer> torsion;
  std::size_t free = cols - s.diagonal.size();
  for (const auto& d : s.diagonal) {
    if (d == 0)
      ++free;
    else if (d != 1)
      torsion.push_back(d);
  }
  torsion.insert(torsion.end(), free, Integer(0));
  return torsion;
}

IntMatrix left_kernel(const IntMatrix& a, std::size_t cols) {
  const SmithForm s = smith_form(a, cols);
  IntMatrix out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (i >= s.diagonal.size() || s.diagonal[i] == 0) out.push_back(s.U[i]);
  return out;
}

}  // namespace cyclemod
