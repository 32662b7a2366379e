#pragma once

// Dense exact linear algebra over the rationals.

#include <cstddef>
#include <vector>

#include "cubal/scalar.hpp"

namespace cubal {

using Vector = std::vector<Scalar>;

/// Row-major rows x cols matrix of rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  /// Throws MalformedInput on ragged rows.
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Determinant by rational Gaussian elimination. Throws SizeMismatch if not square.
Scalar det(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Basis of { x : a x = 0 }, one vector per free column of the reduced row echelon form.
std::vector<Vector> kernel_basis(const Matrix& a);

}  // namespace cubal
