#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pbasis/errors.hpp"
#include "pbasis/rational.hpp"

namespace pbasis {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row-major

inline QVec zeros(std::size_t n) { return QVec(n, Rat(0)); }

inline bool is_zero_vec(const QVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline QVec add(const QVec& a, const QVec& b) {
  QVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline QVec sub(const QVec& a, const QVec& b) {
  QVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline QVec scale(const Rat& c, const QVec& v) {
  QVec r(v);
  for (auto& x : r) x *= c;
  return r;
}

inline Rat dot(const QVec& a, const QVec& b) {
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QMat identity(std::size_t n) {
  QMat m(n, zeros(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rat(1);
  return m;
}

inline QVec mat_vec(const QMat& m, const QVec& v) {
  QVec r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(dot(row, v));
  return r;
}

inline QMat mat_mul(const QMat& a, const QMat& b) {
  const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  QMat r(n, zeros(p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (std::size_t c = 0; c < p; ++c) r[i][c] += a[i][j] * b[j][c];
    }
  return r;
}

inline QMat transpose(const QMat& m) {
  if (m.empty()) return {};
  QMat r(m[0].size(), zeros(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) r[j][i] = m[i][j];
  return r;
}

// x^T M y
inline Rat bilinear(const QMat& m, const QVec& x, const QVec& y) {
  return dot(x, mat_vec(m, y));
}

// Solve A x = b exactly for the unique solution; A is m x n with m >= n.
// Throws SingularMatrixError if A has column rank < n or the system is inconsistent.
inline QVec solve_unique(QMat a, QVec b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && a[piv][col].is_zero()) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[row]);
    std::swap(b[piv], b[row]);
    const Rat inv = Rat(1) / a[row][col];
    for (std::size_t j = col; j < n; ++j) a[row][j] *= inv;
    b[row] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      const Rat f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  if (pivot_col_of_row.size() < n) throw SingularMatrixError("system has no unique solution");
  for (std::size_t i = row; i < m; ++i)
    if (!b[i].is_zero()) throw SingularMatrixError("inconsistent linear system");
  QVec x = zeros(n);
  for (std::size_t i = 0; i < row; ++i) x[pivot_col_of_row[i]] = b[i];
  return x;
}

inline QMat inverse(const QMat& a) {
  const std::size_t n = a.size();
  QMat aug(a);
  QMat inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug[piv][col].is_zero()) ++piv;
    if (piv == n) throw SingularMatrixError("matrix is singular");
    std::swap(aug[piv], aug[col]);
    std::swap(inv[piv], inv[col]);
    const Rat f = Rat(1) / aug[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      aug[col][j] *= f;
      inv[col][j] *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug[i][col].is_zero()) continue;
      const Rat g = aug[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        aug[i][j] -= g * aug[col][j];
        inv[i][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

// Rank by fraction-free (Bareiss) elimination: each row is scaled to integers
// first, then eliminated with exact integer divisions only.
inline std::size_t rank_fraction_free(const QMat& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::vector<BigInt>> z(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt l(1);
    for (const auto& x : m[i]) l = lcm_big(l, x.den());
    for (std::size_t j = 0; j < cols; ++j) {
      const Rat scaled = m[i][j] * Rat(l);
      z[i][j] = scaled.num();  // scaled.den() == 1
    }
  }
  BigInt prev(1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && z[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(z[piv], z[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        BigInt t = z[r][col] * z[i][j] - z[i][col] * z[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        z[i][j] = t;
      }
      z[i][col] = 0;
    }
    prev = z[r][col];
    ++r;
  }
  return r;
}

inline std::size_t kernel_dim(const QMat& m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  return cols - rank_fraction_free(m);
}

// First index i such that rows[i] is a linear combination of rows[0..i-1]
// (index 0 if rows[0] == 0), or nullopt if the rows are independent.
inline std::optional<std::size_t> first_dependent_index(const QMat& rows) {
  QMat reduced;  // rows in echelon form
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    QVec v = rows[i];
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      const Rat& c = v[pivots[k]];
      if (!c.is_zero()) v = sub(v, scale(c / reduced[k][pivots[k]], reduced[k]));
    }
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return i;
    reduced.push_back(std::move(v));
    pivots.push_back(p);
  }
  return std::nullopt;
}

}  // namespace pbasis
