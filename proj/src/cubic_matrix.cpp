#include "cubal/cubic_matrix.hpp"

#include <algorithm>
#include <string>

#include "cubal/errors.hpp"

namespace cubal {

namespace {

void require_same_size(int m1, int m2, const char* what) {
  if (m1 != m2)
    throw SizeMismatch(std::string(what) + ": size " + std::to_string(m1) + " vs " +
                       std::to_string(m2));
}

}  // namespace

CubicMatrix::CubicMatrix(int m) : m_(m) {
  if (m < 1) throw MalformedInput("cubic matrix size must be positive");
  entries_.resize(static_cast<std::size_t>(m) * m * m);
}

CubicMatrix CubicMatrix::basis(int m, int i, int j, int k) {
  CubicMatrix out(m);
  for (int idx : {i, j, k})
    if (idx < 0 || idx >= m)
      throw MalformedInput("basis index " + std::to_string(idx + 1) + " outside 1.." +
                           std::to_string(m));
  out(i, j, k) = 1;
  return out;
}

CubicMatrix CubicMatrix::from_entries(int m, std::vector<Scalar> entries) {
  CubicMatrix out(m);
  if (entries.size() != out.entries_.size())
    throw MalformedInput("expected " + std::to_string(out.entries_.size()) + " entries, got " +
                         std::to_string(entries.size()));
  out.entries_ = std::move(entries);
  return out;
}

bool CubicMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

CubicMatrix& CubicMatrix::operator+=(const CubicMatrix& other) {
  require_same_size(m_, other.m_, "add");
  for (std::size_t t = 0; t < entries_.size(); ++t) entries_[t] += other.entries_[t];
  return *this;
}

CubicMatrix& CubicMatrix::operator-=(const CubicMatrix& other) {
  require_same_size(m_, other.m_, "subtract");
  for (std::size_t t = 0; t < entries_.size(); ++t) entries_[t] -= other.entries_[t];
  return *this;
}

CubicMatrix operator*(const Scalar& lambda, CubicMatrix a) {
  for (auto& x : a.entries_) x *= lambda;
  return a;
}

CubicMatrix scale(const Scalar& lambda, const CubicMatrix& a) { return lambda * a; }

std::optional<Triple> basis_product(const Triple& left, const Triple& right, const Operation& a) {
  if (left.k != right.i) return std::nullopt;
  return Triple{left.i, a(left.j, right.j), right.k};
}

CubicMatrix mul(const CubicMatrix& lhs, const CubicMatrix& rhs, const Operation& a) {
  require_same_size(lhs.size(), rhs.size(), "mul");
  require_same_size(lhs.size(), a.size(), "mul (operation)");
  const int m = a.size();
  CubicMatrix out(m);
  for (int i = 0; i < m; ++i)
    for (int l = 0; l < m; ++l)
      for (int k = 0; k < m; ++k) {
        const Scalar& x = lhs(i, l, k);
        if (sgn(x) == 0) continue;
        for (int n = 0; n < m; ++n) {
          const int j = a(l, n);
          for (int r = 0; r < m; ++r) {
            const Scalar& y = rhs(k, n, r);
            if (sgn(y) != 0) out(i, j, r) += x * y;
          }
        }
      }
  return out;
}

CubicMatrix plenary_power(const CubicMatrix& x, int n, const Operation& a) {
  if (n < 0) throw PreconditionError("plenary power exponent must be non-negative");
  require_same_size(x.size(), a.size(), "plenary_power");
  CubicMatrix out = x;
  for (int step = 0; step < n; ++step) out = mul(out, out, a);
  return out;
}

Matrix accompanying_matrix(const CubicMatrix& x) {
  const int m = x.size();
  Matrix out(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) out(i, k) += x(i, j, k);
  return out;
}

}  // namespace cubal
