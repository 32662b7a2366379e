#include "cubal/structure.hpp"

#include <string>

namespace cubal {

namespace {

void require_same_size(int m1, int m2, const char* what) {
  if (m1 != m2)
    throw SizeMismatch(std::string(what) + ": size " + std::to_string(m1) + " vs " +
                       std::to_string(m2));
}

template <class F>
void for_each_triple(int m, F&& f) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) f(Triple{i, j, k});
}

std::size_t flat(int m, const Triple& t) { return static_cast<std::size_t>((t.i * m + t.j) * m + t.k); }

Matrix multiplication_matrix(const CubicMatrix& x, const Operation& a, bool left) {
  require_same_size(x.size(), a.size(), "multiplication matrix");
  const int m = a.size();
  const auto dim = static_cast<std::size_t>(m) * m * m;
  Matrix out(dim, dim);
  for_each_triple(m, [&](const Triple& t) {
    const auto e = CubicMatrix::basis(m, t);
    const auto column = left ? mul(x, e, a) : mul(e, x, a);
    const auto& entries = column.entries();
    for (std::size_t row = 0; row < dim; ++row) out(row, flat(m, t)) = entries[row];
  });
  return out;
}

std::optional<CubicMatrix> zero_divisor_witness(const CubicMatrix& x, const Operation& a, bool left) {
  const auto kernel = kernel_basis(multiplication_matrix(x, a, left));
  if (kernel.empty()) return std::nullopt;
  return CubicMatrix::from_entries(a.size(), kernel.front());
}

}  // namespace

// ---------------------------------------------------------------------------

AccompanyingElement::AccompanyingElement(int m)
    : coeffs_(static_cast<std::size_t>(m), static_cast<std::size_t>(m)) {
  if (m < 1) throw MalformedInput("accompanying element size must be positive");
}

AccompanyingElement AccompanyingElement::eta(int m, int i, int j) {
  if (i < 0 || j < 0 || i >= m || j >= m) throw MalformedInput("eta index out of range");
  AccompanyingElement out(m);
  out(i, j) = 1;
  return out;
}

AccompanyingElement AccompanyingElement::from_matrix(Matrix coeffs) {
  if (!coeffs.is_square() || coeffs.rows() == 0)
    throw SizeMismatch("accompanying element needs a nonempty square coefficient matrix");
  AccompanyingElement out(static_cast<int>(coeffs.rows()));
  out.coeffs_ = std::move(coeffs);
  return out;
}

AccompanyingElement accompanying_mul(const AccompanyingElement& u, const AccompanyingElement& v) {
  require_same_size(u.size(), v.size(), "accompanying_mul");
  const int m = u.size();
  AccompanyingElement out(m);
  // eta_ij eta_kl = delta_jk eta_il
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (sgn(u(i, j)) == 0) continue;
      for (int l = 0; l < m; ++l) out(i, l) += u(i, j) * v(j, l);
    }
  return out;
}

AccompanyingElement phi(const CubicMatrix& x) {
  const int m = x.size();
  AccompanyingElement out(m);
  for (int i = 0; i < m; ++i)
    for (int n = 0; n < m; ++n)
      for (int j = 0; j < m; ++j) out(i, j) += x(i, n, j);
  return out;
}

bool in_ideal_Ia0(const CubicMatrix& x) { return phi(x).is_zero(); }

// ---------------------------------------------------------------------------

CubicMatrix iso_map(const Permutation& pi, const CubicMatrix& x) {
  require_same_size(pi.size(), x.size(), "iso_map");
  const int m = x.size();
  CubicMatrix out(m);
  for_each_triple(m, [&](const Triple& t) { out(pi(t.i), pi(t.j), pi(t.k)) = x(t.i, t.j, t.k); });
  return out;
}

bool verify_isomorphism(const Operation& a, const Operation& b, const Permutation& pi) {
  require_same_size(a.size(), b.size(), "verify_isomorphism");
  require_same_size(a.size(), pi.size(), "verify_isomorphism (permutation)");
  const int m = a.size();
  std::vector<CubicMatrix> basis;
  std::vector<CubicMatrix> images;
  for_each_triple(m, [&](const Triple& t) {
    basis.push_back(CubicMatrix::basis(m, t));
    images.push_back(iso_map(pi, basis.back()));
  });
  for (std::size_t s = 0; s < basis.size(); ++s)
    for (std::size_t t = 0; t < basis.size(); ++t)
      if (iso_map(pi, mul(basis[s], basis[t], a)) != mul(images[s], images[t], b)) return false;
  return true;
}

// ---------------------------------------------------------------------------

CharacterReduction reduce_characters(const Operation& a) {
  const int m = a.size();
  CharacterReduction out;
  out.off_diagonal_zeros = m * m * (m - 1);

  const Subset img = image(a);
  for (int k0 = 0; k0 < m; ++k0) {
    SliceReduction slice;
    slice.slice = k0;
    slice.forced_by_cross_terms = m >= 2 ? img : Subset::empty(m);
    Subset zero = slice.forced_by_cross_terms;
    slice.forced_by_squares = Subset::empty(m);
    for (bool changed = true; changed;) {
      changed = false;
      for (int j = 0; j < m; ++j)
        if (!zero.contains(j) && zero.contains(a(j, j))) {
          zero.insert(j);
          slice.forced_by_squares.insert(j);
          changed = true;
        }
    }
    slice.free = Subset(m, Subset::full(m).bits() & ~zero.bits());

    // The free coordinates satisfy beta^2 = beta on idempotents; try every
    // 0/1 assignment and keep the genuine characters.
    const auto free = slice.free.members();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << free.size()); ++mask) {
      LinearForm<Scalar> chi(m);
      for (std::size_t f = 0; f < free.size(); ++f)
        if ((mask >> f) & 1U) chi(k0, free[f], k0) = 1;
      if (is_character(chi, a)) out.characters.push_back(std::move(chi));
    }
    out.slices.push_back(std::move(slice));
  }
  return out;
}

std::vector<LinearForm<Scalar>> character_search(const Operation& a) {
  return reduce_characters(a).characters;
}

// ---------------------------------------------------------------------------

Matrix left_multiplication_matrix(const CubicMatrix& x, const Operation& a) {
  return multiplication_matrix(x, a, true);
}

Matrix right_multiplication_matrix(const CubicMatrix& x, const Operation& a) {
  return multiplication_matrix(x, a, false);
}

std::optional<CubicMatrix> left_zero_divisor_witness(const CubicMatrix& x, const Operation& a) {
  return zero_divisor_witness(x, a, true);
}

std::optional<CubicMatrix> right_zero_divisor_witness(const CubicMatrix& x, const Operation& a) {
  return zero_divisor_witness(x, a, false);
}

std::optional<std::pair<Triple, Triple>> noncommutativity_witness(const Operation& a) {
  const int m = a.size();
  std::optional<std::pair<Triple, Triple>> found;
  for_each_triple(m, [&](const Triple& s) {
    if (found) return;
    for_each_triple(m, [&](const Triple& t) {
      if (!found && basis_product(s, t, a) != basis_product(t, s, a)) found = std::pair{s, t};
    });
  });
  return found;
}

// ---------------------------------------------------------------------------

SpannedSubspace SpannedSubspace::from_triples(int m, const std::vector<Triple>& triples) {
  SpannedSubspace out(m);
  for (const auto& t : triples) out.insert(t);
  return out;
}

SpannedSubspace SpannedSubspace::full(int m) {
  SpannedSubspace out(m);
  for_each_triple(m, [&](const Triple& t) { out.triples_.insert(t); });
  return out;
}

void SpannedSubspace::insert(const Triple& t) {
  for (int idx : {t.i, t.j, t.k})
    if (idx < 0 || idx >= m_) throw MalformedInput("basis triple index out of range");
  triples_.insert(t);
}

bool SpannedSubspace::contains(const CubicMatrix& x) const {
  require_same_size(m_, x.size(), "span membership");
  bool inside = true;
  for_each_triple(m_, [&](const Triple& t) {
    if (sgn(x(t.i, t.j, t.k)) != 0 && !contains(t)) inside = false;
  });
  return inside;
}

SpannedSubspace intersect(const SpannedSubspace& s, const SpannedSubspace& t) {
  require_same_size(s.m_, t.m_, "span intersection");
  SpannedSubspace out(s.m_);
  for (const auto& x : s.triples_)
    if (t.contains(x)) out.triples_.insert(x);
  return out;
}

bool SpannedSubspace::is_subspace_of(const SpannedSubspace& other) const {
  require_same_size(m_, other.m_, "span inclusion");
  for (const auto& x : triples_)
    if (!other.contains(x)) return false;
  return true;
}

SpannedSubspace subalgebra_span(const Operation& a, const Subset& j, int i, int k) {
  require_same_size(a.size(), j.universe(), "subalgebra_span");
  if (j.is_empty()) throw PreconditionError("subalgebra_span needs a nonempty invariant set");
  if (!is_invariant(j, a)) throw PreconditionError("subalgebra_span: the set is not a-invariant");
  SpannedSubspace out(a.size());
  for (int mid : j.members()) out.insert(Triple{i, mid, k});
  return out;
}

SpannedSubspace ideal_Ia_span(const Operation& a) {
  const int m = a.size();
  const Subset img = image(a);
  SpannedSubspace out(m);
  for_each_triple(m, [&](const Triple& t) {
    if (img.contains(t.j)) out.insert(t);
  });
  return out;
}

bool is_subalgebra(const SpannedSubspace& s, const Operation& a) {
  require_same_size(s.size(), a.size(), "is_subalgebra");
  for (const auto& x : s.triples())
    for (const auto& y : s.triples()) {
      const auto p = basis_product(x, y, a);
      if (p && !s.contains(*p)) return false;
    }
  return true;
}

bool is_left_ideal(const SpannedSubspace& s, const Operation& a) {
  require_same_size(s.size(), a.size(), "is_left_ideal");
  bool ok = true;
  for_each_triple(a.size(), [&](const Triple& t) {
    for (const auto& x : s.triples()) {
      const auto p = basis_product(t, x, a);
      if (p && !s.contains(*p)) ok = false;
    }
  });
  return ok;
}

bool is_right_ideal(const SpannedSubspace& s, const Operation& a) {
  require_same_size(s.size(), a.size(), "is_right_ideal");
  bool ok = true;
  for_each_triple(a.size(), [&](const Triple& t) {
    for (const auto& x : s.triples()) {
      const auto p = basis_product(x, t, a);
      if (p && !s.contains(*p)) ok = false;
    }
  });
  return ok;
}

bool is_ideal(const SpannedSubspace& s, const Operation& a) {
  return is_left_ideal(s, a) && is_right_ideal(s, a);
}

SubalgebraCount count_subalgebras_from_invariants(const Operation& a) {
  SubalgebraCount out;
  for (const auto& j : enumerate_invariant_subsets(a))
    if (!j.is_empty()) ++out.per_block;
  out.total = out.per_block * static_cast<std::size_t>(a.size()) * static_cast<std::size_t>(a.size());
  return out;
}

}  // namespace cubal
