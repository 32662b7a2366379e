#pragma once

// Structural results about the algebra C_a of cubic matrices: relabelling
// isomorphisms, the character (baric) decision procedure, the accompanying
// algebra and its homomorphism phi, zero divisors, and subalgebras/ideals
// spanned by basis matrices.

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cubal/cubic_matrix.hpp"
#include "cubal/errors.hpp"
#include "cubal/linalg.hpp"
#include "cubal/semigroup.hpp"

namespace cubal {

// ---------------------------------------------------------------------------
// Accompanying algebra: basis eta_ij with eta_ij eta_kl = delta_jk eta_il.

class AccompanyingElement {
public:
  explicit AccompanyingElement(int m);
  static AccompanyingElement eta(int m, int i, int j);
  /// Throws SizeMismatch unless `coeffs` is square.
  static AccompanyingElement from_matrix(Matrix coeffs);

  int size() const { return static_cast<int>(coeffs_.rows()); }
  const Scalar& operator()(int i, int j) const { return coeffs_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); }
  Scalar& operator()(int i, int j) { return coeffs_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); }
  const Matrix& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.is_zero(); }

  friend bool operator==(const AccompanyingElement&, const AccompanyingElement&) = default;

private:
  Matrix coeffs_;
};

/// Bilinear extension of the matrix-unit rule.
AccompanyingElement accompanying_mul(const AccompanyingElement& u, const AccompanyingElement& v);

/// phi(X)_ij = sum_n X_inj.
AccompanyingElement phi(const CubicMatrix& x);

/// Membership in the kernel of phi: every fibre sum sum_n X_inj vanishes.
bool in_ideal_Ia0(const CubicMatrix& x);

// ---------------------------------------------------------------------------
// Isomorphisms between algebras of equivalent operations.

/// Linear extension of E_ijk -> E_{pi(i) pi(j) pi(k)}.
CubicMatrix iso_map(const Permutation& pi, const CubicMatrix& x);

/// Checks f(E *_a F) == f(E) *_b f(F) over every pair of basis matrices,
/// with f = iso_map(pi, .). True whenever act(pi, a) == b.
bool verify_isomorphism(const Operation& a, const Operation& b, const Permutation& pi);

// ---------------------------------------------------------------------------
// Characters.

/// chi(X) = sum alpha_ijk X_ijk over the scalar field S.
template <class S>
class LinearForm {
public:
  explicit LinearForm(int m) : m_(m), coeffs_(static_cast<std::size_t>(m) * m * m, S(0)) {}

  int size() const { return m_; }
  S& operator()(int i, int j, int k) { return coeffs_[offset(i, j, k)]; }
  const S& operator()(int i, int j, int k) const { return coeffs_[offset(i, j, k)]; }
  const std::vector<S>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!(c == S(0))) return false;
    return true;
  }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
  std::size_t offset(int i, int j, int k) const { return static_cast<std::size_t>((i * m_ + j) * m_ + k); }

  int m_;
  std::vector<S> coeffs_;
};

/// Nonzero and alpha_ijk alpha_lnr = delta_kl alpha_{i a(j,n) r} for all indices.
template <class S>
bool is_character(const LinearForm<S>& chi, const Operation& a) {
  if (chi.size() != a.size()) throw SizeMismatch("is_character: form and operation sizes differ");
  if (chi.is_zero()) return false;
  const int m = a.size();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          for (int n = 0; n < m; ++n)
            for (int r = 0; r < m; ++r) {
              const S rhs = k == l ? chi(i, a(j, n), r) : S(0);
              if (!(chi(i, j, k) * chi(l, n, r) == rhs)) return false;
            }
  return true;
}

/// What the reduction proved about one diagonal slice beta_j = alpha_{k0 j k0}.
struct SliceReduction {
  int slice = 0;
  /// beta_j = 0 because alpha_{k0 j k} alpha_{k n k0} vanishes for k != k0 (j in the image of a).
  Subset forced_by_cross_terms;
  /// beta_j = 0 because beta_j^2 = beta_{a(j,j)} and the right side is already zero.
  Subset forced_by_squares;
  /// Coordinates left undetermined.
  Subset free;
};

struct CharacterReduction {
  /// alpha_ijk with i != k, all forced to zero.
  int off_diagonal_zeros = 0;
  std::vector<SliceReduction> slices;
  /// Every nonzero character of C_a over the rationals.
  std::vector<LinearForm<Scalar>> characters;
};

/// Decides which characters C_a admits by eliminating coefficients:
///  1. alpha_ijk^2 = 0 for i != k, so the form lives on the diagonal slices i == k;
///  2. products across distinct slices vanish, so at most one slice k0 carries it;
///  3. inside slice k0, with beta_j = alpha_{k0 j k0}, beta_j beta_n = beta_{a(j,n)};
///     a second slice (m >= 2) kills beta on the image of a, and beta_j^2 = beta_{a(j,j)}
///     then kills the rest.
/// Free coordinates only survive when m == 1, where beta^2 = beta.
CharacterReduction reduce_characters(const Operation& a);

std::vector<LinearForm<Scalar>> character_search(const Operation& a);

// ---------------------------------------------------------------------------
// Zero divisors.

/// Matrix of X -> A *_a X (left) or X -> X *_a A (right) in the E_ijk basis.
Matrix left_multiplication_matrix(const CubicMatrix& x, const Operation& a);
Matrix right_multiplication_matrix(const CubicMatrix& x, const Operation& a);

/// A nonzero X with A *_a X = 0, from an exact kernel computation.
std::optional<CubicMatrix> left_zero_divisor_witness(const CubicMatrix& x, const Operation& a);
/// A nonzero X with X *_a A = 0.
std::optional<CubicMatrix> right_zero_divisor_witness(const CubicMatrix& x, const Operation& a);

/// A pair of basis matrices that do not commute, if any (none exactly when m == 1).
std::optional<std::pair<Triple, Triple>> noncommutativity_witness(const Operation& a);

// ---------------------------------------------------------------------------
// Subspaces spanned by basis matrices.

class SpannedSubspace {
public:
  explicit SpannedSubspace(int m) : m_(m) {}
  /// Throws MalformedInput on out-of-range triples; duplicates collapse.
  static SpannedSubspace from_triples(int m, const std::vector<Triple>& triples);
  static SpannedSubspace full(int m);

  int size() const { return m_; }
  const std::set<Triple>& triples() const { return triples_; }
  std::size_t dimension() const { return triples_.size(); }
  bool contains(const Triple& t) const { return triples_.contains(t); }
  bool contains(const CubicMatrix& x) const;
  bool is_zero() const { return triples_.empty(); }
  void insert(const Triple& t);

  /// Spans of basis subsets intersect in the span of the common triples.
  friend SpannedSubspace intersect(const SpannedSubspace& s, const SpannedSubspace& t);
  bool is_subspace_of(const SpannedSubspace& other) const;

  friend bool operator==(const SpannedSubspace&, const SpannedSubspace&) = default;

private:
  int m_;
  std::set<Triple> triples_;
};

/// { E_ijk : j in J } for fixed (i,k). Throws PreconditionError unless J is a
/// nonempty a-invariant set.
SpannedSubspace subalgebra_span(const Operation& a, const Subset& j, int i, int k);

/// { E_ijk : j in J_a }.
SpannedSubspace ideal_Ia_span(const Operation& a);

bool is_subalgebra(const SpannedSubspace& s, const Operation& a);
/// E_t *_a E_s in span(S) for every basis t of the whole algebra and s in S.
bool is_left_ideal(const SpannedSubspace& s, const Operation& a);
/// E_s *_a E_t in span(S).
bool is_right_ideal(const SpannedSubspace& s, const Operation& a);
bool is_ideal(const SpannedSubspace& s, const Operation& a);

struct SubalgebraCount {
  /// Nonempty a-invariant subsets; each gives one subalgebra per block (i,k).
  std::size_t per_block = 0;
  /// per_block * m^2; a lower bound on the number of subalgebras.
  std::size_t total = 0;
};

SubalgebraCount count_subalgebras_from_invariants(const Operation& a);

}  // namespace cubal
