#include "derlie/linalg.hpp"

namespace derlie {

QMatrix identity_matrix(int n) {
  QMatrix m(static_cast<size_t>(n), QVec(static_cast<size_t>(n), 0));
  for (size_t i = 0; i < m.size(); ++i) m[i][i] = 1;
  return m;
}

bool is_zero_matrix(const QMatrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  QMatrix r(n, QVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (size_t l = 0; l < m; ++l) r[i][l] += a[i][j] * b[j][l];
    }
  return r;
}

QVec mat_vec(const QMatrix& a, const QVec& v) {
  QVec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (a[i][j] != 0) r[i] += a[i][j] * v[j];
  return r;
}

bool is_zero_vec(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

int rref(QMatrix& m, std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = Rat(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    if (pivot_cols) pivot_cols->push_back(static_cast<int>(c));
    ++r;
  }
  return static_cast<int>(r);
}

QMatrix row_space(QMatrix rows) {
  int rank = rref(rows);
  rows.resize(static_cast<size_t>(rank));
  return rows;
}

QMatrix nullspace(const QMatrix& m, int ncols) {
  QMatrix a = m;
  std::vector<int> pivots;
  rref(a, &pivots);
  std::vector<bool> is_pivot(static_cast<size_t>(ncols), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

  QMatrix basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    QVec v(static_cast<size_t>(ncols), 0);
    v[static_cast<size_t>(f)] = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      v[static_cast<size_t>(pivots[i])] = -a[i][static_cast<size_t>(f)];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(QMatrix a, QVec rhs) {
  size_t rows = a.size();
  size_t cols = rows == 0 ? 0 : a[0].size();
  for (size_t i = 0; i < rows; ++i) a[i].push_back(rhs[i]);
  std::vector<int> pivots;
  rref(a, &pivots);
  // Inconsistent iff a pivot landed in the rhs column.
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
  QVec x(cols, 0);
  for (size_t i = 0; i < pivots.size(); ++i)
    x[static_cast<size_t>(pivots[i])] = a[i][cols];
  return x;
}

bool row_space_contains(const QMatrix& rref_rows, const QVec& v) {
  QVec w = v;
  for (const auto& row : rref_rows) {
    size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) continue;
    if (w[p] != 0) {
      Rat f = w[p];
      for (size_t j = p; j < w.size(); ++j) w[j] -= f * row[j];
    }
  }
  return is_zero_vec(w);
}

}  // namespace derlie
