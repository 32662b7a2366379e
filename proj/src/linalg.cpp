#include "cubal/linalg.hpp"

#include <algorithm>
#include <string>

#include "cubal/errors.hpp"

namespace cubal {

namespace {

void require_shape(bool ok, const char* what) {
  if (!ok) throw SizeMismatch(std::string("incompatible matrix shapes in ") + what);
}

// In-place reduction to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> reduce(Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && sgn(a(p, col)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    const Scalar inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || sgn(a(r, col)) == 0) continue;
      const Scalar f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw MalformedInput("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "addition");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_shape(a.cols_ == b.rows_, "product");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Vector operator*(const Matrix& a, const Vector& x) {
  require_shape(a.cols_ == x.size(), "matrix-vector product");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * x[k];
  return out;
}

Scalar det(const Matrix& a) {
  require_shape(a.is_square(), "det");
  Matrix w = a;
  const std::size_t n = w.rows();
  Scalar result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(w(p, col)) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(w(p, c), w(col, c));
      result = -result;
    }
    result *= w(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(w(r, col)) == 0) continue;
      const Scalar f = w(r, col) / w(col, col);
      for (std::size_t c = col; c < n; ++c) w(r, c) -= f * w(col, c);
    }
  }
  return result;
}

std::size_t rank(const Matrix& a) {
  Matrix w = a;
  return reduce(w).size();
}

std::vector<Vector> kernel_basis(const Matrix& a) {
  Matrix w = a;
  const auto pivots = reduce(w);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cubal
