#include "fusion/snf.hpp"

#include <utility>

#include "fusion/errors.hpp"

namespace fusion {

BigMat identity_matrix(std::size_t n) {
  BigMat m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

BigMat multiply(const BigMat& a, const BigMat& b, std::size_t inner) {
  std::size_t rows = a.size();
  std::size_t cols = b.empty() ? 0 : b[0].size();
  BigMat c(rows, std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

namespace {

struct Reducer {
  BigMat a;
  std::size_t m, n;
  bool track;
  BigMat U, Uinv, V, Vinv;

  Reducer(const BigMat& src, std::size_t rows, std::size_t cols, bool transforms)
      : a(src), m(rows), n(cols), track(transforms) {
    a.resize(m);
    for (auto& r : a) r.resize(n, 0);
    if (track) {
      U = Uinv = identity_matrix(m);
      V = Vinv = identity_matrix(n);
    }
  }

  // row_i += c * row_j
  void row_add(std::size_t i, std::size_t j, const BigInt& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < n; ++k)
      if (a[j][k] != 0) a[i][k] += c * a[j][k];
    if (!track) return;
    for (std::size_t k = 0; k < m; ++k) {
      if (U[j][k] != 0) U[i][k] += c * U[j][k];
      if (Uinv[k][i] != 0) Uinv[k][j] -= c * Uinv[k][i];
    }
  }
  // col_j += c * col_i
  void col_add(std::size_t j, std::size_t i, const BigInt& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < m; ++k)
      if (a[k][i] != 0) a[k][j] += c * a[k][i];
    if (!track) return;
    for (std::size_t k = 0; k < n; ++k) {
      if (V[k][i] != 0) V[k][j] += c * V[k][i];
      if (Vinv[j][k] != 0) Vinv[i][k] -= c * Vinv[j][k];
    }
  }
  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    if (!track) return;
    std::swap(U[i], U[j]);
    for (std::size_t k = 0; k < m; ++k) std::swap(Uinv[k][i], Uinv[k][j]);
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m; ++k) std::swap(a[k][i], a[k][j]);
    if (!track) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(V[k][i], V[k][j]);
    std::swap(Vinv[i], Vinv[j]);
  }
  void row_negate(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    if (!track) return;
    for (auto& x : U[i]) x = -x;
    for (std::size_t k = 0; k < m; ++k) Uinv[k][i] = -Uinv[k][i];
  }

  bool move_min_to(std::size_t t) {
    std::size_t bi = m, bj = n;
    BigInt best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a[i][j] == 0) continue;
        BigInt v = abs(a[i][j]);
        if (bi == m || v < best) {
          best = v;
          bi = i;
          bj = j;
          if (best == 1) goto found;
        }
      }
    if (bi == m) return false;
  found:
    row_swap(t, bi);
    col_swap(t, bj);
    return true;
  }

  void run() {
    std::size_t lim = std::min(m, n);
    for (std::size_t t = 0; t < lim; ++t) {
      if (!move_min_to(t)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a[i][t] == 0) continue;
          BigInt q = a[i][t] / a[t][t];
          row_add(i, t, -q);
          if (a[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[t][j] == 0) continue;
          BigInt q = a[t][j] / a[t][t];
          col_add(j, t, -q);
          if (a[t][j] != 0) clean = false;
        }
        if (!clean) {
          move_min_to(t);
          continue;
        }
        // Divisibility of the remaining block by the pivot.
        bool divisible = true;
        for (std::size_t i = t + 1; i < m && divisible; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (a[i][j] % a[t][t] != 0) {
              row_add(t, i, 1);
              divisible = false;
              break;
            }
        if (divisible) break;
      }
      if (a[t][t] < 0) row_negate(t);
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const BigMat& a, std::size_t rows, std::size_t cols, bool transforms) {
  Reducer r(a, rows, cols, transforms);
  r.run();
  SmithForm s;
  std::size_t lim = std::min(rows, cols);
  s.diag.resize(lim);
  for (std::size_t i = 0; i < lim; ++i) {
    s.diag[i] = r.a[i][i];
    if (s.diag[i] != 0) ++s.rank;
  }
  if (transforms) {
    s.U = std::move(r.U);
    s.Uinv = std::move(r.Uinv);
    s.V = std::move(r.V);
    s.Vinv = std::move(r.Vinv);
  }
  return s;
}

BigMat integer_kernel(const BigMat& a, std::size_t rows, std::size_t cols) {
  auto s = smith_normal_form(a, rows, cols, true);
  BigMat k(cols, std::vector<BigInt>(cols - s.rank, 0));
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = s.rank; j < cols; ++j) k[i][j - s.rank] = s.V[i][j];
  return k;
}

BigMat solve_square(const BigMat& k, const BigMat& b, std::size_t n, std::size_t bcols) {
  // K = Uinv D Vinv, so X = V D^-1 U B.
  auto s = smith_normal_form(k, n, n, true);
  if (s.rank != n) throw TheoremViolation("solve_square: matrix is singular");
  BigMat ub = multiply(s.U, b, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < bcols; ++j) {
      if (ub[i][j] % s.diag[i] != 0) throw TheoremViolation("solve_square: no integral solution");
      ub[i][j] /= s.diag[i];
    }
  return multiply(s.V, ub, n);
}

}  // namespace fusion
