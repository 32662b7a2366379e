#pragma once

// Cubic matrices over the rationals and the multiplication *_a induced by an
// associative operation a:
//
//   E_ijk *_a E_lnr = delta_kl E_{i a(j,n) r}
//
// extended bilinearly, so that (A *_a B)_ijr = sum_{a(l,n)=j} sum_k A_ilk B_knr.

#include <compare>
#include <optional>
#include <vector>

#include "cubal/linalg.hpp"
#include "cubal/scalar.hpp"
#include "cubal/semigroup.hpp"

namespace cubal {

/// Index triple (i,j,k) of a basis matrix E_ijk, 0-based.
struct Triple {
  int i = 0;
  int j = 0;
  int k = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

class CubicMatrix {
public:
  CubicMatrix() = default;
  /// The zero matrix.
  explicit CubicMatrix(int m);

  static CubicMatrix zero(int m) { return CubicMatrix(m); }
  /// E_ijk; throws MalformedInput on an index outside 0..m-1.
  static CubicMatrix basis(int m, int i, int j, int k);
  static CubicMatrix basis(int m, Triple t) { return basis(m, t.i, t.j, t.k); }

  int size() const { return m_; }
  Scalar& operator()(int i, int j, int k) { return entries_[offset(i, j, k)]; }
  const Scalar& operator()(int i, int j, int k) const { return entries_[offset(i, j, k)]; }

  /// Entries in (i,j,k) lexicographic order; length m^3.
  const std::vector<Scalar>& entries() const { return entries_; }
  static CubicMatrix from_entries(int m, std::vector<Scalar> entries);

  bool is_zero() const;

  CubicMatrix& operator+=(const CubicMatrix& other);
  CubicMatrix& operator-=(const CubicMatrix& other);
  friend CubicMatrix operator+(CubicMatrix a, const CubicMatrix& b) { return a += b; }
  friend CubicMatrix operator-(CubicMatrix a, const CubicMatrix& b) { return a -= b; }
  friend CubicMatrix operator*(const Scalar& lambda, CubicMatrix a);
  friend bool operator==(const CubicMatrix&, const CubicMatrix&) = default;

private:
  std::size_t offset(int i, int j, int k) const {
    return static_cast<std::size_t>((i * m_ + j) * m_ + k);
  }

  int m_ = 0;
  std::vector<Scalar> entries_;
};

CubicMatrix scale(const Scalar& lambda, const CubicMatrix& a);

/// Basis products in closed form: nullopt stands for the zero matrix.
std::optional<Triple> basis_product(const Triple& left, const Triple& right, const Operation& a);

/// A *_a B. Cost O(m^5) in the worst case; zero entries of A and B are skipped.
CubicMatrix mul(const CubicMatrix& lhs, const CubicMatrix& rhs, const Operation& a);

/// A^[0] = A, A^[n] = A^[n-1] *_a A^[n-1].
CubicMatrix plenary_power(const CubicMatrix& x, int n, const Operation& a);

/// B with B(i,k) = sum_j A_ijk.
Matrix accompanying_matrix(const CubicMatrix& x);

}  // namespace cubal
