#pragma once

// Binary operations on I = {0..m-1}, the relabelling action of S_m on them,
// and the set-level constructions (images, invariant subsets, squaring
// sequences, closures) used to build subalgebras.
//
// Indices are 0-based throughout the C++ API. Every textual or JSON
// representation is 1-based; see io.hpp.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cubal {

/// Largest set size an Operation may be built over.
inline constexpr int kMaxOperationSize = 64;

enum class Checking { Associative, Unchecked };

/// A binary operation a: I x I -> I stored as a row-major Cayley table.
///
/// Values built with Checking::Associative (the default) are guaranteed to be
/// semigroup tables. Checking::Unchecked exists for test harnesses and the
/// enumerator, which validate associativity themselves.
class Operation {
public:
  /// Builds from 1-based rows, as written in a Cayley table.
  static Operation from_rows(const std::vector<std::vector<int>>& rows,
                             Checking checking = Checking::Associative);

  /// Builds from 0-based row-major cells.
  static Operation from_cells(int m, std::vector<std::uint8_t> cells,
                              Checking checking = Checking::Associative);

  /// a(i,j) = j
  static Operation right_symmetric(int m);
  /// a(i,j) = i
  static Operation left_symmetric(int m);

  int size() const { return m_; }
  int operator()(int i, int j) const { return cells_[static_cast<std::size_t>(i * m_ + j)]; }
  std::span<const std::uint8_t> cells() const { return cells_; }

  /// 1-based rows.
  std::vector<std::vector<int>> rows() const;

  // Canonical order: size first, then lexicographic on the row-major table.
  friend auto operator<=>(const Operation&, const Operation&) = default;
  friend bool operator==(const Operation&, const Operation&) = default;

private:
  Operation(int m, std::vector<std::uint8_t> cells) : m_(m), cells_(std::move(cells)) {}

  int m_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// A bijection of I. Composition follows function notation: (p * q)(x) = p(q(x)).
class Permutation {
public:
  static Permutation identity(int m);
  /// Swaps i and j (0-based).
  static Permutation transposition(int m, int i, int j);
  /// Builds from 0-based images; throws MalformedInput unless a bijection.
  static Permutation from_images(std::vector<int> images);
  /// Every element of S_m in lexicographic order of the image vector.
  static std::vector<Permutation> all(int m);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

/// A subset of I backed by a bitmask.
class Subset {
public:
  Subset() = default;
  Subset(int m, std::uint64_t bits);
  static Subset empty(int m) { return Subset(m, 0); }
  static Subset full(int m);
  /// From 0-based members.
  static Subset of(int m, std::initializer_list<int> members);
  static Subset of(int m, std::span<const int> members);

  int universe() const { return m_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(int x) const { return (bits_ >> x) & 1U; }
  bool is_empty() const { return bits_ == 0; }
  int count() const;
  void insert(int x) { bits_ |= std::uint64_t{1} << x; }
  /// 0-based members in increasing order.
  std::vector<int> members() const;

  bool is_subset_of(const Subset& other) const { return (bits_ & ~other.bits_) == 0; }

  friend Subset operator|(Subset a, const Subset& b);
  friend Subset operator&(Subset a, const Subset& b);
  friend auto operator<=>(const Subset&, const Subset&) = default;
  friend bool operator==(const Subset&, const Subset&) = default;

private:
  int m_ = 0;
  std::uint64_t bits_ = 0;
};

/// Behaviour of i_0 = i, i_n = a(i_{n-1}, i_{n-1}).
struct SequenceClass {
  enum class Kind {
    Periodic,            // i_p = i for some p >= 1
    Convergent,          // reaches a fixed point not equal to i
    EventuallyPeriodic,  // enters a cycle of length > 1 that avoids i
  };

  Kind kind = Kind::Periodic;
  /// First n with i_n on the cycle; 0 exactly when Periodic.
  int entry = 0;
  /// Minimal cycle length.
  int period = 1;
  /// The cycle in sequence order, starting at i_entry.
  std::vector<int> cycle;

  Subset cycle_set(int m) const { return Subset::of(m, cycle); }
  /// Fixed point of a convergent sequence (also the single cycle element when period == 1).
  int limit() const { return cycle.front(); }

  friend bool operator==(const SequenceClass&, const SequenceClass&) = default;
};

std::string to_string(SequenceClass::Kind kind);

enum class Symmetry { None, Left, Right, Both };

std::string to_string(Symmetry s);

/// Raw 1-based table check; throws MalformedInput on shape or range errors.
bool check_associative(const std::vector<std::vector<int>>& rows);
bool is_associative(const Operation& a);

/// (pi a)(i,j) = pi(a(pi^-1(i), pi^-1(j)))
Operation act(const Permutation& pi, const Operation& a);

/// Deduplicated orbit in canonical order.
std::vector<Operation> orbit(const Operation& a);

/// Some pi with act(pi, a) == b, or nullopt. The identity is preferred when a == b.
std::optional<Permutation> are_equivalent(const Operation& a, const Operation& b);

/// Fixed by every relabelling. Decided via the adjacent transpositions, which generate S_m.
bool is_symmetric(const Operation& a);

/// Which of the two symmetric forms a matches (Both only for m == 1).
Symmetry symmetry_class(const Operation& a);

/// J_a = { a(i,j) }
Subset image(const Operation& a);

/// a(J,J) is contained in J. The empty set is invariant.
bool is_invariant(const Subset& j, const Operation& a);

/// Largest m accepted by enumerate_invariant_subsets.
inline constexpr int kMaxInvariantScan = 20;

/// Every a-invariant subset, ordered by bitmask (so the empty set comes first).
std::vector<Subset> enumerate_invariant_subsets(const Operation& a);

SequenceClass power_sequence_classify(int i, const Operation& a);

/// Least a-invariant superset of K, via J <- J u a(J,J).
Subset closure(const Subset& k, const Operation& a);

}  // namespace cubal
