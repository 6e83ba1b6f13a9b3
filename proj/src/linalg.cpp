#include "leastinterp/linalg.hpp"

#include "leastinterp/errors.hpp"

namespace leastinterp {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::fromRows(const std::vector<std::vector<Scalar>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::InvalidArgument, "core", "ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  return std::vector<Scalar>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "core", "matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.isZero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).isZero()) r(i, j) += a * o(k, j);
    }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::conjugateTranspose() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
  return r;
}

Echelon rref(const Matrix& m) {
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].isZero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Scalar inv = rows[r][c].inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!rows[r][j].isZero()) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].isZero()) continue;
      Scalar f = rows[i][c];
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!rows[r][j].isZero()) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  Matrix reduced(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = rows[i][j];
  return {reduced, pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (auto p : e.pivots) isPivot[p] = true;
  std::vector<std::size_t> freeCols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!isPivot[c]) freeCols.push_back(c);
  Matrix k(freeCols.size(), m.cols());
  for (std::size_t f = 0; f < freeCols.size(); ++f) {
    std::size_t c = freeCols[f];
    k(f, c) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(f, e.pivots[r]) = -e.reduced(r, c);
  }
  return k;
}

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "core", "determinant of non-square matrix");
  std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).isZero()) ++p;
    if (p == n) return Scalar();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).isZero()) continue;
      Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).isZero()) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "core", "inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
    throw Error(ErrorCode::SingularMatrix, "core", "matrix is singular");
  Matrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = e.reduced(i, n + j);
  return r;
}

std::vector<Scalar> solve(const Matrix& a, const std::vector<Scalar>& b) {
  std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw Error(ErrorCode::DimensionMismatch, "core", "solve shape mismatch");
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
    throw Error(ErrorCode::SingularMatrix, "core", "system matrix is singular");
  std::vector<Scalar> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = e.reduced(i, n);
  return x;
}

std::vector<Scalar> reduceAgainst(const Echelon& e, std::vector<Scalar> v) {
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    std::size_t c = e.pivots[r];
    if (v[c].isZero()) continue;
    Scalar f = v[c];
    for (std::size_t j = c; j < v.size(); ++j)
      if (!e.reduced(r, j).isZero()) v[j] -= f * e.reduced(r, j);
  }
  return v;
}

bool inRowSpace(const Echelon& e, const std::vector<Scalar>& v) {
  for (const auto& x : reduceAgainst(e, v))
    if (!x.isZero()) return false;
  return true;
}

}  // namespace leastinterp
