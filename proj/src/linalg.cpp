#include "ocpoly/linalg.hpp"

#include "ocpoly/error.hpp"

namespace ocpoly {

int rank(Matrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c].size() != n) fail(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[c]);
    std::swap(inv[pivot], inv[c]);
    Rational p = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= p;
      inv[c][k] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[i][k] -= f * a[c][k];
        inv[i][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

int affine_rank(const std::vector<const Point*>& points) {
  if (points.empty()) return -1;
  Matrix diffs;
  const Point& base = *points.front();
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> row(base.size());
    for (std::size_t k = 0; k < base.size(); ++k) row[k] = (*points[i])[k] - base[k];
    diffs.push_back(std::move(row));
  }
  return rank(std::move(diffs));
}

}  // namespace ocpoly
