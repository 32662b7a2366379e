#include <doctest.h>

#include <random>

#include "cubal/cubic_matrix.hpp"
#include "cubal/enumerate.hpp"
#include "cubal/errors.hpp"
#include "cubal/linalg.hpp"
#include "cubal/verify.hpp"
#include "tables.hpp"

using namespace cubal;
using namespace cubal::tables;

namespace {

// 1-based shorthand for the basis matrices.
CubicMatrix E(int m, int i, int j, int k) { return CubicMatrix::basis(m, i - 1, j - 1, k - 1); }

std::vector<Triple> triples(int m) {
  std::vector<Triple> out;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) out.push_back({i, j, k});
  return out;
}

// Direct transcription of the entry formula, no shortcuts.
CubicMatrix mul_by_formula(const CubicMatrix& x, const CubicMatrix& y, const Operation& a) {
  const int m = a.size();
  CubicMatrix out(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int r = 0; r < m; ++r)
        for (int l = 0; l < m; ++l)
          for (int n = 0; n < m; ++n) {
            if (a(l, n) != j) continue;
            for (int k = 0; k < m; ++k) out(i, j, r) += x(i, l, k) * y(k, n, r);
          }
  return out;
}

}  // namespace

TEST_CASE("basis matrices and the linear structure") {
  const auto e = E(2, 1, 2, 1);
  CHECK(e(0, 1, 0) == 1);
  CHECK(e.entries().size() == 8);
  int nonzero = 0;
  for (const auto& v : e.entries()) nonzero += v != 0;
  CHECK(nonzero == 1);
  CHECK_THROWS_AS(CubicMatrix::basis(2, 0, 2, 0), MalformedInput);

  std::mt19937_64 rng(11);
  const auto x = random_cubic_matrix(3, rng);
  CubicMatrix rebuilt(3);
  for (const auto& t : triples(3)) rebuilt += scale(x(t.i, t.j, t.k), CubicMatrix::basis(3, t));
  CHECK(rebuilt == x);

  CHECK((E(2, 1, 1, 1) + E(2, 2, 2, 2) - E(2, 1, 1, 1)) == E(2, 2, 2, 2));
  const auto half = Scalar(1, 2) * E(2, 1, 1, 1);
  CHECK(half(0, 0, 0) == Scalar(1, 2));
  CHECK((half + half) == E(2, 1, 1, 1));
  CHECK(CubicMatrix::zero(2).is_zero());
  CHECK((x - x).is_zero());
  CHECK_THROWS_AS(CubicMatrix::from_entries(2, std::vector<Scalar>(7)), MalformedInput);
}

TEST_CASE("basis products") {
  const auto iv = op(kTwoIV);
  CHECK(mul(E(2, 1, 1, 2), E(2, 2, 1, 1), iv) == E(2, 1, 1, 1));
  CHECK(mul(E(2, 1, 1, 2), E(2, 1, 1, 1), iv).is_zero());

  const auto z3 = op(kCyclic3);
  CHECK(mul(E(3, 1, 2, 3), E(3, 3, 3, 1), z3) == E(3, 1, 1, 1));
  CHECK(basis_product({0, 1, 2}, {2, 2, 0}, z3) == Triple{0, 0, 0});
  CHECK_FALSE(basis_product({0, 1, 2}, {1, 2, 0}, z3).has_value());
}

TEST_CASE("mul agrees with basis_product and with the entry formula") {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& a : all_operations(m)) {
      for (const auto& s : triples(m))
        for (const auto& t : triples(m)) {
          const auto product = mul(CubicMatrix::basis(m, s), CubicMatrix::basis(m, t), a);
          const auto closed = basis_product(s, t, a);
          CHECK((closed ? product == CubicMatrix::basis(m, *closed) : product.is_zero()));
        }
    }
  }
  std::mt19937_64 rng(5);
  for (const auto& a : all_operations(3)) {
    const auto x = random_cubic_matrix(3, rng);
    const auto y = random_cubic_matrix(3, rng);
    CHECK(mul(x, y, a) == mul_by_formula(x, y, a));
  }
}

TEST_CASE("associativity on basis triples") {
  for (const auto& a : all_operations(2)) {
    const auto ts = triples(2);
    for (const auto& s : ts)
      for (const auto& t : ts)
        for (const auto& u : ts) {
          const auto x = CubicMatrix::basis(2, s), y = CubicMatrix::basis(2, t), z = CubicMatrix::basis(2, u);
          CHECK(mul(mul(x, y, a), z, a) == mul(x, mul(y, z, a), a));
        }
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, 26);
  const auto ts = triples(3);
  for (const auto& a : all_operations(3)) {
    bool ok = true;
    for (int s = 0; s < 300; ++s) {
      const auto x = CubicMatrix::basis(3, ts[pick(rng)]);
      const auto y = CubicMatrix::basis(3, ts[pick(rng)]);
      const auto z = CubicMatrix::basis(3, ts[pick(rng)]);
      ok = ok && mul(mul(x, y, a), z, a) == mul(x, mul(y, z, a), a);
    }
    CHECK(ok);
  }
}

TEST_CASE("associativity and bilinearity on dense matrices") {
  std::mt19937_64 rng(13);
  const auto ops3 = all_operations(3);
  std::uniform_int_distribution<std::size_t> pick(0, ops3.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& a = ops3[pick(rng)];
    const auto x = random_cubic_matrix(3, rng);
    const auto y = random_cubic_matrix(3, rng);
    const auto z = random_cubic_matrix(3, rng);
    CHECK(mul(mul(x, y, a), z, a) == mul(x, mul(y, z, a), a));
    const Scalar lambda(-3, 2);
    CHECK(mul(x + lambda * y, z, a) == mul(x, z, a) + lambda * mul(y, z, a));
    CHECK(mul(z, x + lambda * y, a) == mul(z, x, a) + lambda * mul(z, y, a));
  }
}

TEST_CASE("the algebra is noncommutative for m >= 2") {
  for (int m = 2; m <= 3; ++m)
    for (const auto& a : all_operations(m)) {
      const auto x = CubicMatrix::basis(m, 0, 0, 1);
      const auto y = CubicMatrix::basis(m, 1, 0, 0);
      // E_{1 1 2} E_{2 1 1} lands in row 1; the reverse product lands in row 2.
      CHECK(mul(x, y, a) != mul(y, x, a));
    }
  CHECK(mul(E(1, 1, 1, 1), E(1, 1, 1, 1), op({{1}})) == E(1, 1, 1, 1));
}

TEST_CASE("accompanying matrix is multiplicative") {
  CubicMatrix x(2);
  x(0, 0, 0) = 1;
  x(0, 1, 0) = 2;
  x(1, 1, 0) = Scalar(1, 3);
  const auto b = accompanying_matrix(x);
  CHECK(b == Matrix::from_rows({{Scalar(3), Scalar(0)}, {Scalar(1, 3), Scalar(0)}}));

  std::mt19937_64 rng(17);
  for (const auto& a : all_operations(3)) {
    const auto p = random_cubic_matrix(3, rng);
    const auto q = random_cubic_matrix(3, rng);
    CHECK(accompanying_matrix(mul(p, q, a)) == accompanying_matrix(p) * accompanying_matrix(q));
  }
}

TEST_CASE("plenary powers") {
  const auto z3 = op(kCyclic3);
  const auto e = E(3, 2, 2, 2);
  CHECK(plenary_power(e, 0, z3) == e);
  CHECK(plenary_power(e, 1, z3) == E(3, 2, 3, 2));
  // 2 -> 3 -> 2 under doubling mod 3 with identity 1.
  CHECK(plenary_power(e, 2, z3) == e);
  CHECK_THROWS_AS(plenary_power(e, -1, z3), PreconditionError);

  std::mt19937_64 rng(3);
  const auto x = random_cubic_matrix(2, rng);
  const auto a = op(kTwoV);
  CHECK(plenary_power(x, 2, a) == mul(mul(x, x, a), mul(x, x, a), a));
}

TEST_CASE("determinant") {
  CHECK(det(Matrix::from_rows({{1, 2}, {3, 4}})) == -2);
  CHECK(det(Matrix::from_rows({{2, 0}, {0, 0}})) == 0);
  CHECK(det(Matrix::identity(4)) == 1);
  CHECK(det(Matrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(det(Matrix::from_rows({{Scalar(1, 2), 1, 0}, {0, 3, 1}, {2, 0, 1}})) == Scalar(7, 2));
  CHECK(det(Matrix(0, 0)) == 1);
  CHECK_THROWS_AS(det(Matrix(2, 3)), SizeMismatch);
  CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}), MalformedInput);
}

TEST_CASE("rank and kernel") {
  const auto a = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  const auto kernel = kernel_basis(a);
  REQUIRE(kernel.size() == 1);
  for (const auto& v : kernel) {
    CHECK(a * v == Vector(3, Scalar(0)));
    CHECK(v != Vector(3, Scalar(0)));
  }
  CHECK(kernel_basis(Matrix::identity(3)).empty());
  CHECK(kernel_basis(Matrix(2, 3)).size() == 3);
  CHECK(rank(Matrix(2, 3)) == 0);

  // Rank-nullity on random singular products.
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 50; ++t) {
    Matrix l(4, 2), r(2, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        l(i, j) = d(rng);
        r(j, i) = d(rng);
      }
    const auto p = l * r;
    CHECK(rank(p) + kernel_basis(p).size() == 4);
    CHECK(det(p) == 0);
    for (const auto& v : kernel_basis(p)) CHECK(p * v == Vector(4, Scalar(0)));
  }
}
