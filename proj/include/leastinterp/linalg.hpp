#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leastinterp/scalar.hpp"

namespace leastinterp {

// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix fromRows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::vector<Scalar> row(std::size_t i) const;

  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  Matrix conjugateTranspose() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;                    // reduced row echelon form, zero rows removed
  std::vector<std::size_t> pivots;   // pivot column per row
};

// Pivots are chosen left to right.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Rows form the canonical kernel basis {v : m v = 0}, one per free column.
Matrix nullspace(const Matrix& m);
Scalar determinant(Matrix m);
// Throws SingularMatrix.
Matrix inverse(const Matrix& m);
std::vector<Scalar> solve(const Matrix& a, const std::vector<Scalar>& b);

// Reduce v against an echelon basis (rows of e.reduced); returns the residue.
std::vector<Scalar> reduceAgainst(const Echelon& e, std::vector<Scalar> v);
bool inRowSpace(const Echelon& e, const std::vector<Scalar>& v);

}  // namespace leastinterp
