#pragma once

// Per-operation theorem checks, shared by `cubal verify` and the test suites.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cubal/io.hpp"
#include "cubal/semigroup.hpp"

namespace cubal {

struct VerifyOptions {
  /// Random matrices drawn for the zero-divisor and kernel-ideal checks.
  int random_samples = 8;
  std::uint64_t seed = 0x5eed;
};

struct OperationReport {
  explicit OperationReport(Operation a) : operation(std::move(a)) {}

  Operation operation;

  bool associative = false;
  /// verify_isomorphism(a, act(pi, a), pi) for every pi in S_m.
  bool theorem_1 = false;
  /// No character for m >= 2, exactly one for m == 1; confirmed by is_character.
  bool theorem_2 = false;
  /// phi multiplicative on basis pairs and onto.
  bool theorem_3 = false;
  /// Subalgebras from invariant sets, the image ideal, the kernel ideal.
  bool theorem_4 = false;
  /// Commutative exactly when m == 1.
  bool commutativity = false;
  /// is_symmetric <=> singleton orbit <=> one of the two symmetric forms.
  bool symmetric_forms = false;
  /// E_jij^[n] = E_{j i_n j} and matching sequence behaviour.
  bool plenary_powers = false;
  /// Zero-divisor criteria for the symmetric operations (vacuous otherwise).
  bool zero_divisors = false;

  // Witnesses and context.
  std::size_t orbit_size = 0;
  Symmetry symmetry = Symmetry::None;
  std::size_t character_count = 0;
  std::optional<std::pair<Triple, Triple>> noncommuting_pair;
  std::vector<Subset> invariant_subsets;
  std::vector<SequenceClass> sequences;
  std::vector<std::string> failures;

  bool all_passed() const;
};

/// Sizes above this are rejected (the isomorphism check alone is m! * m^6 products).
inline constexpr int kMaxVerifySize = 4;

OperationReport verify_operation(const Operation& a, const VerifyOptions& options = {});

Json to_json(const OperationReport& report);

/// Random dense cubic matrix with entries p/q, |p| <= 5, 1 <= q <= 4.
CubicMatrix random_cubic_matrix(int m, std::mt19937_64& rng);

/// A random element of ker phi: a random matrix with its fibre sums moved out.
CubicMatrix random_kernel_element(int m, std::mt19937_64& rng);

}  // namespace cubal
