#include "cherednik/linalg.hpp"

#include <utility>

#include "cherednik/errors.hpp"

namespace cherednik {

std::size_t exact_rank(const ExactMatrix& m) {
  ExactMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  ExactScalar prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(rank, j));
    const ExactScalar p = a(rank, c);
    const ExactScalar prev_inv = prev.inverse();
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const ExactScalar f = a(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (f.is_zero()) {
          if (!a(i, j).is_zero()) a(i, j) = p * a(i, j) * prev_inv;
        } else {
          a(i, j) = (p * a(i, j) - f * a(rank, j)) * prev_inv;
        }
      }
      a(i, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

RowEchelon rref(const ExactMatrix& m) {
  ExactMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
    const ExactScalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const ExactScalar f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  ExactMatrix reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = a(i, j);
  return {std::move(reduced), std::move(pivots)};
}

ExactMatrix kernel(const ExactMatrix& m) {
  const RowEchelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < cols; ++j)
    if (!is_pivot[j]) free.push_back(j);
  ExactMatrix k(cols, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], f) = -e.reduced(r, free[f]);
  }
  return k;
}

ExactMatrix row_basis(const ExactMatrix& m) { return rref(m).reduced; }

ExactMatrix column_basis(const ExactMatrix& m) {
  const RowEchelon e = rref(m);
  ExactMatrix out(m.rows(), e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, k) = m(i, e.pivots[k]);
  return out;
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) throw InvalidArgument("solve: row mismatch");
  const RowEchelon e = rref(ExactMatrix::hstack(a, b));
  ExactMatrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, a.cols() + j);
  }
  return x;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  const RowEchelon e = rref(ExactMatrix::hstack(m, ExactMatrix::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] >= n) throw DivisionByZero();
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

ExactScalar determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of non-square matrix");
  ExactMatrix a = m;
  const std::size_t n = a.rows();
  ExactScalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const ExactScalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const ExactScalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

}  // namespace cherednik
