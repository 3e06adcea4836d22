// SPDX-License-Identifier: Apache-2.0
#include "hnbound/rational_matrix.hpp"

#include "hnbound/errors.hpp"

namespace hnb {

namespace {

// In-place row echelon form; returns pivot columns and the sign of the row
// permutation applied.
std::vector<int> echelon(RationalMatrix& m, int cols, int* swap_sign = nullptr) {
  std::vector<int> pivots;
  int sign = 1;
  const int rows = static_cast<int>(m.size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (int k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  if (swap_sign) *swap_sign = sign;
  return pivots;
}

}  // namespace

RationalMatrix identity_matrix(int n) {
  RationalMatrix m(n, RationalVector(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

int matrix_rank(RationalMatrix m) {
  if (m.empty()) return 0;
  return static_cast<int>(echelon(m, static_cast<int>(m[0].size())).size());
}

Rational determinant(RationalMatrix m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw InvalidArgument("determinant of a non-square matrix");
  int sign = 1;
  auto pivots = echelon(m, n, &sign);
  if (static_cast<int>(pivots.size()) < n) return 0;
  Rational d = sign;
  for (int i = 0; i < n; ++i) d *= m[i][i];
  return d;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const int n = static_cast<int>(m.size());
  RationalMatrix a(n, RationalVector(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int k = 0; k < 2 * n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  RationalMatrix out(n, RationalVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

std::optional<RationalVector> null_vector(const RationalMatrix& m, int cols) {
  RationalMatrix a = m;
  auto pivots = echelon(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  int free_col = -1;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  if (free_col < 0) return std::nullopt;
  RationalVector v(cols, Rational(0));
  v[free_col] = 1;
  for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
    const int pc = pivots[i];
    Rational s = 0;
    for (int k = pc + 1; k < cols; ++k) s += a[i][k] * v[k];
    v[pc] = -s / a[i][pc];
  }
  return v;
}

RationalMatrix transpose(const RationalMatrix& m) {
  if (m.empty()) return {};
  RationalMatrix t(m[0].size(), RationalVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RationalMatrix c(n, RationalVector(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

bool is_symmetric(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) return false;
  }
  return true;
}

}  // namespace hnb
