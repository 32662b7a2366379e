#include "cubal/semigroup.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cubal/errors.hpp"

namespace cubal {

namespace {

void require_same_size(int m1, int m2, const char* what) {
  if (m1 != m2) {
    throw SizeMismatch(std::string(what) + ": size " + std::to_string(m1) + " vs " +
                       std::to_string(m2));
  }
}

bool cells_associative(int m, std::span<const std::uint8_t> t) {
  auto at = [&](int i, int j) { return static_cast<int>(t[static_cast<std::size_t>(i * m + j)]); };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int ij = at(i, j);
      for (int k = 0; k < m; ++k)
        if (at(ij, k) != at(i, at(j, k))) return false;
    }
  return true;
}

void check_size(int m) {
  if (m < 1 || m > kMaxOperationSize)
    throw MalformedInput("operation size must lie in 1.." + std::to_string(kMaxOperationSize) +
                         ", got " + std::to_string(m));
}

}  // namespace

Operation Operation::from_rows(const std::vector<std::vector<int>>& rows, Checking checking) {
  const int m = static_cast<int>(rows.size());
  check_size(m);
  std::vector<std::uint8_t> cells;
  cells.reserve(static_cast<std::size_t>(m * m));
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != m)
      throw MalformedInput("row " + std::to_string(i + 1) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(m));
    for (int v : rows[i]) {
      if (v < 1 || v > m)
        throw MalformedInput("table entry " + std::to_string(v) + " outside 1.." +
                             std::to_string(m));
      cells.push_back(static_cast<std::uint8_t>(v - 1));
    }
  }
  return from_cells(m, std::move(cells), checking);
}

Operation Operation::from_cells(int m, std::vector<std::uint8_t> cells, Checking checking) {
  check_size(m);
  if (cells.size() != static_cast<std::size_t>(m * m))
    throw MalformedInput("expected " + std::to_string(m * m) + " cells, got " +
                         std::to_string(cells.size()));
  for (auto v : cells)
    if (v >= m) throw MalformedInput("cell value " + std::to_string(v) + " out of range");
  if (checking == Checking::Associative && !cells_associative(m, cells))
    throw MalformedInput("table is not associative");
  return Operation(m, std::move(cells));
}

Operation Operation::right_symmetric(int m) {
  check_size(m);
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(m * m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) cells[static_cast<std::size_t>(i * m + j)] = static_cast<std::uint8_t>(j);
  return Operation(m, std::move(cells));
}

Operation Operation::left_symmetric(int m) {
  check_size(m);
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(m * m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) cells[static_cast<std::size_t>(i * m + j)] = static_cast<std::uint8_t>(i);
  return Operation(m, std::move(cells));
}

std::vector<std::vector<int>> Operation::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(m_), std::vector<int>(static_cast<std::size_t>(m_)));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) out[i][j] = (*this)(i, j) + 1;
  return out;
}

// ---------------------------------------------------------------------------

Permutation Permutation::identity(int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int m, int i, int j) {
  auto p = identity(m);
  if (i < 0 || j < 0 || i >= m || j >= m) throw MalformedInput("transposition index out of range");
  std::swap(p.images_[i], p.images_[j]);
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
      throw MalformedInput("permutation images are not a bijection");
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> Permutation::all(int m) {
  std::vector<Permutation> out;
  auto images = identity(m).images_;
  do {
    out.push_back(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = static_cast<int>(x);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  require_same_size(p.size(), q.size(), "permutation composition");
  std::vector<int> images(q.images_.size());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = p(q(static_cast<int>(x)));
  return Permutation(std::move(images));
}

// ---------------------------------------------------------------------------

Subset::Subset(int m, std::uint64_t bits) : m_(m), bits_(bits) {
  if (m < 0 || m > 64) throw CapacityError("subsets are limited to sets of size <= 64");
  if (m < 64 && (bits >> m) != 0) throw MalformedInput("subset member outside 1.." + std::to_string(m));
}

Subset Subset::full(int m) {
  return Subset(m, m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
}

Subset Subset::of(int m, std::initializer_list<int> members) {
  return of(m, std::span<const int>(members.begin(), members.size()));
}

Subset Subset::of(int m, std::span<const int> members) {
  Subset s(m, 0);
  for (int x : members) {
    if (x < 0 || x >= m) throw MalformedInput("subset member outside 1.." + std::to_string(m));
    s.insert(x);
  }
  return s;
}

int Subset::count() const { return std::popcount(bits_); }

std::vector<int> Subset::members() const {
  std::vector<int> out;
  for (int x = 0; x < m_; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

Subset operator|(Subset a, const Subset& b) {
  require_same_size(a.m_, b.m_, "subset union");
  a.bits_ |= b.bits_;
  return a;
}

Subset operator&(Subset a, const Subset& b) {
  require_same_size(a.m_, b.m_, "subset intersection");
  a.bits_ &= b.bits_;
  return a;
}

std::string to_string(SequenceClass::Kind kind) {
  switch (kind) {
    case SequenceClass::Kind::Periodic: return "periodic";
    case SequenceClass::Kind::Convergent: return "convergent";
    case SequenceClass::Kind::EventuallyPeriodic: return "eventually_periodic";
  }
  return "?";
}

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::None: return "none";
    case Symmetry::Left: return "left";
    case Symmetry::Right: return "right";
    case Symmetry::Both: return "both";
  }
  return "?";
}

// ---------------------------------------------------------------------------

bool check_associative(const std::vector<std::vector<int>>& rows) {
  return is_associative(Operation::from_rows(rows, Checking::Unchecked));
}

bool is_associative(const Operation& a) { return cells_associative(a.size(), a.cells()); }

Operation act(const Permutation& pi, const Operation& a) {
  require_same_size(pi.size(), a.size(), "act");
  const int m = a.size();
  const auto inv = pi.inverse();
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(m * m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      cells[static_cast<std::size_t>(i * m + j)] = static_cast<std::uint8_t>(pi(a(inv(i), inv(j))));
  // Relabelling preserves associativity; re-checking here would only cost time.
  return Operation::from_cells(m, std::move(cells), Checking::Unchecked);
}

std::vector<Operation> orbit(const Operation& a) {
  std::vector<Operation> out;
  for (const auto& pi : Permutation::all(a.size())) out.push_back(act(pi, a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Permutation> are_equivalent(const Operation& a, const Operation& b) {
  require_same_size(a.size(), b.size(), "are_equivalent");
  for (const auto& pi : Permutation::all(a.size()))
    if (act(pi, a) == b) return pi;
  return std::nullopt;
}

bool is_symmetric(const Operation& a) {
  const int m = a.size();
  for (int i = 0; i + 1 < m; ++i)
    if (act(Permutation::transposition(m, i, i + 1), a) != a) return false;
  return true;
}

Symmetry symmetry_class(const Operation& a) {
  const bool right = a == Operation::right_symmetric(a.size());
  const bool left = a == Operation::left_symmetric(a.size());
  if (right && left) return Symmetry::Both;
  if (right) return Symmetry::Right;
  if (left) return Symmetry::Left;
  return Symmetry::None;
}

Subset image(const Operation& a) {
  Subset out = Subset::empty(a.size());
  for (auto v : a.cells()) out.insert(v);
  return out;
}

bool is_invariant(const Subset& j, const Operation& a) {
  require_same_size(j.universe(), a.size(), "is_invariant");
  const auto members = j.members();
  for (int s : members)
    for (int t : members)
      if (!j.contains(a(s, t))) return false;
  return true;
}

std::vector<Subset> enumerate_invariant_subsets(const Operation& a) {
  const int m = a.size();
  if (m > kMaxInvariantScan)
    throw CapacityError("invariant subset scan needs 2^m checks; m=" + std::to_string(m) +
                        " exceeds the limit of " + std::to_string(kMaxInvariantScan));
  std::vector<Subset> out;
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    Subset s(m, bits);
    if (is_invariant(s, a)) out.push_back(s);
  }
  return out;
}

SequenceClass power_sequence_classify(int i, const Operation& a) {
  const int m = a.size();
  if (i < 0 || i >= m) throw MalformedInput("index outside 1.." + std::to_string(m));
  // first_visit[x] = n with i_n == x, or -1.
  std::vector<int> first_visit(static_cast<std::size_t>(m), -1);
  std::vector<int> path;
  int x = i;
  while (first_visit[x] < 0) {
    first_visit[x] = static_cast<int>(path.size());
    path.push_back(x);
    x = a(x, x);
  }
  SequenceClass out;
  out.entry = first_visit[x];
  out.period = static_cast<int>(path.size()) - out.entry;
  out.cycle.assign(path.begin() + out.entry, path.end());
  if (out.entry == 0)
    out.kind = SequenceClass::Kind::Periodic;
  else if (out.period == 1)
    out.kind = SequenceClass::Kind::Convergent;
  else
    out.kind = SequenceClass::Kind::EventuallyPeriodic;
  return out;
}

Subset closure(const Subset& k, const Operation& a) {
  require_same_size(k.universe(), a.size(), "closure");
  Subset current = k;
  while (true) {
    Subset next = current;
    const auto members = current.members();
    for (int s : members)
      for (int t : members) next.insert(a(s, t));
    if (next == current) return current;
    current = next;
  }
}

}  // namespace cubal
